/**
 * @file yangian_hopf.cpp
 * @brief Derived Cartan series, coproduct, counit, antipode, Chevalley involutions, shifts and tensor operations.
 */
#include "yangian_impl.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace yrm {

namespace {

Key key_of_basis(const LieData& lie, int b) {
    const int P = lie.num_pos_roots(), n = lie.rank();
    if (b < P) return make_key(Kind::XPlus, b, 0);
    if (b < P + n) return make_key(Kind::H, b - P, 0);
    return make_key(Kind::XMinus, b - P - n, 0);
}

}  // namespace

const YElement& Yangian::Impl::derived_t(int i, int r) {
    auto key = std::make_pair(i, r);
    auto it = t_cache.find(key);
    if (it != t_cache.end()) return it->second;
    // hbar t_i(u) = log(1 + hbar h_i(u)); coefficient of u^{-r-1}.
    YElement out;
    for (int m = 1; m <= r + 1; ++m) {
        const int total = r + 1 - m;
        HPoly c = HPoly::monomial(Rational(sign_pow(m + 1)) / m, m - 1);
        std::vector<int> parts(static_cast<std::size_t>(m), 0);
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == m - 1) {
                parts[static_cast<std::size_t>(pos)] = left;
                Mono mono;
                for (int a : parts) mono.push_back(hk(i, a));
                std::sort(mono.begin(), mono.end());
                out.add(mono, c);
                return;
            }
            for (int a = 0; a <= left; ++a) {
                parts[static_cast<std::size_t>(pos)] = a;
                rec(pos + 1, left - a);
            }
        };
        rec(0, total);
    }
    return t_cache.emplace(key, std::move(out)).first->second;
}

YTensor Yangian::Impl::tmul(const YTensor& a, const YTensor& b) {
    YTensor out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.size() != kb.size()) throw std::invalid_argument("tensor arity mismatch");
            YTensor acc(TKey{}, ca * cb);
            for (std::size_t l = 0; l < ka.size(); ++l) {
                const YElement& leg = mono_mul(ka[l], kb[l]);
                YTensor next;
                for (const auto& [t, ct] : acc.terms())
                    for (const auto& [m, cm] : leg.terms()) {
                        TKey nt = t;
                        nt.push_back(m);
                        next.add(std::move(nt), ct * cm);
                    }
                acc = std::move(next);
            }
            out += acc;
        }
    return out;
}

YTensor Yangian::Impl::tensor2(const YElement& a, const YElement& b) {
    YTensor out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add(TKey{ma, mb}, ca * cb);
    return out;
}

YTensor Yangian::Impl::delta_t(int i) {
    const YElement& t = derived_t(i, 1);
    YElement one(Mono{}, HPoly(1));
    YTensor out = tensor2(t, one) + tensor2(one, t);
    for (const TensorTerm& term : lie.r_i(i))
        out.add(TKey{Mono{key_of_basis(lie, term.left)}, Mono{key_of_basis(lie, term.right)}}, HPoly::monomial(term.coeff, 1));
    return out;
}

const YTensor& Yangian::Impl::delta_letter(Key k) {
    auto it = delta_cache.find(k);
    if (it != delta_cache.end()) return it->second;
    Gen g = decode(k);
    YElement one(Mono{}, HPoly(1)), x(Mono{k}, HPoly(1));
    auto bracket = [&](const YTensor& a, const YTensor& b) { return tmul(a, b) - tmul(b, a); };
    YTensor out;
    if (g.kind == Kind::H) {
        const int i = g.a;
        if (g.mode == 0) {
            out = tensor2(x, one) + tensor2(one, x);
        } else if (g.mode == 1) {
            YTensor dh = delta_letter(hk(i, 0));
            out = delta_t(i) + tmul(dh, dh) * HPoly::monomial(Rational(1, 2), 1);
        } else {
            out = bracket(delta_letter(xp(i, g.mode - 1)), delta_letter(xm(i, 1)));
        }
    } else {
        const bool plus = g.kind == Kind::XPlus;
        if (g.a < rank) {
            const int i = g.a;
            if (g.mode == 0) {
                out = tensor2(x, one) + tensor2(one, x);
            } else {
                Rational f = Rational(1) / lie.cartan().B(i, i);
                if (!plus) f = -f;
                YTensor prev = delta_letter(plus ? xp(i, g.mode - 1) : xm(i, g.mode - 1));
                out = bracket(delta_t(i), prev) * HPoly(f);
            }
        } else {
            const RootChain& ch = lie.chain(g.a);
            if (plus)
                out = bracket(delta_letter(xp(ch.j, 0)), delta_letter(xp(ch.parent, g.mode))) * HPoly(ch.cplus);
            else
                out = bracket(delta_letter(xm(ch.parent, g.mode)), delta_letter(xm(ch.j, 0))) * HPoly(ch.cminus);
        }
    }
    return delta_cache.emplace(k, std::move(out)).first->second;
}

YElement Yangian::Impl::antipode_t(int i) {
    YElement out = -derived_t(i, 1);
    for (const TensorTerm& term : lie.r_i(i))
        out.add_scaled(mono_mul(Mono{key_of_basis(lie, term.left)}, Mono{key_of_basis(lie, term.right)}),
                       HPoly::monomial(term.coeff, 1));
    return out;
}

const YElement& Yangian::Impl::antipode_letter(Key k) {
    auto it = antipode_cache.find(k);
    if (it != antipode_cache.end()) return it->second;
    Gen g = decode(k);
    YElement x(Mono{k}, HPoly(1));
    auto bracket = [&](const YElement& a, const YElement& b) { return multiply(a, b) - multiply(b, a); };
    YElement out;
    if (g.kind == Kind::H) {
        const int i = g.a;
        if (g.mode == 0) {
            out = -x;
        } else if (g.mode == 1) {
            YElement h0(Mono{hk(i, 0)}, HPoly(1));
            out = antipode_t(i) + multiply(h0, h0) * HPoly::monomial(Rational(1, 2), 1);
        } else {
            out = bracket(antipode_letter(xm(i, 1)), antipode_letter(xp(i, g.mode - 1)));
        }
    } else {
        const bool plus = g.kind == Kind::XPlus;
        if (g.a < rank) {
            const int i = g.a;
            if (g.mode == 0) {
                out = -x;
            } else {
                Rational f = Rational(1) / lie.cartan().B(i, i);
                if (!plus) f = -f;
                YElement prev = antipode_letter(plus ? xp(i, g.mode - 1) : xm(i, g.mode - 1));
                out = bracket(prev, antipode_t(i)) * HPoly(f);
            }
        } else {
            const RootChain& ch = lie.chain(g.a);
            if (plus)
                out = bracket(antipode_letter(xp(ch.parent, g.mode)), antipode_letter(xp(ch.j, 0))) * HPoly(ch.cplus);
            else
                out = bracket(antipode_letter(xm(ch.j, 0)), antipode_letter(xm(ch.parent, g.mode))) * HPoly(ch.cminus);
        }
    }
    return antipode_cache.emplace(k, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Public operations

YElement Yangian::derived_t(int i, int r) const {
    if (i < 0 || i >= rank() || r < 0) throw std::invalid_argument("derived_t: bad index");
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    return impl_->derived_t(i, r);
}

YElement Yangian::cartan_T(const std::vector<Rational>& c) const {
    if (static_cast<int>(c.size()) != rank()) throw std::invalid_argument("cartan_T: coefficient count");
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    YElement out;
    for (int i = 0; i < rank(); ++i) out.add_scaled(impl_->derived_t(i, 1), HPoly(c[static_cast<std::size_t>(i)]));
    return out;
}

YTensor Yangian::coproduct(const YElement& a) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    YTensor out;
    for (const auto& [m, c] : a.terms()) {
        YTensor acc(TKey{Mono{}, Mono{}}, c);
        for (Key k : m) acc = impl_->tmul(acc, impl_->delta_letter(k));
        out += acc;
    }
    return out;
}

HPoly Yangian::counit(const YElement& a) const { return a.coeff(Mono{}); }

YElement Yangian::antipode(const YElement& a) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    YElement out;
    for (const auto& [m, c] : a.terms()) {
        YElement acc(Mono{}, c);
        for (auto it = m.rbegin(); it != m.rend(); ++it) acc = impl_->multiply(acc, impl_->antipode_letter(*it));
        out += acc;
    }
    return out;
}

YElement Yangian::omega(const YElement& a) const {
    YElement out;
    for (const auto& [m, c] : a.terms()) {
        auto [s, mm] = impl_->omega_mono(m);
        out.add(mm, c * s);
    }
    return out;
}

YElement Yangian::varsigma(const YElement& a) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    YElement out;
    for (const auto& [m, c] : a.terms()) {
        int sign = 1;
        for (Key k : m) sign *= sign_pow(decode(k).mode + 1);
        Word rev(m.rbegin(), m.rend());
        out += impl_->normal_form(rev, c * Rational(sign));
    }
    return out;
}

YElement Yangian::chev_kappa(const YElement& a) const { return omega(varsigma(a)); }

namespace {

/// tau_c(g_m) = sum_r binom(m, r) c^{m-r} g_r.
YElement tau_letter_at(Key k, const Rational& c) {
    Gen g = decode(k);
    YElement out;
    for (int r = 0; r <= g.mode; ++r) {
        Rational coeff = binom(g.mode, r) * pow(c, g.mode - r);
        out.add(Mono{make_key(g.kind, g.a, r)}, HPoly(coeff));
    }
    return out;
}

}  // namespace

YElement Yangian::tau_at(const YElement& a, const Rational& c) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    YElement out;
    for (const auto& [m, coeff] : a.terms()) {
        YElement acc(Mono{}, coeff);
        for (Key k : m) acc = impl_->multiply(acc, tau_letter_at(k, c));
        out += acc;
    }
    return out;
}

ZSeries<YElement> Yangian::tau(const YElement& a, Truncation t) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    auto mul = [this](const YElement& x, const YElement& y) { return impl_->multiply(x, y); };
    ZSeries<YElement> out(t);
    for (const auto& [m, coeff] : a.terms()) {
        ZSeries<YElement> acc(t, YElement(Mono{}, coeff));
        for (Key k : m) {
            Gen g = decode(k);
            ZSeries<YElement> img(t);
            for (int r = 0; r <= g.mode; ++r) img.add(g.mode - r, YElement(Mono{make_key(g.kind, g.a, r)}, HPoly(binom(g.mode, r))));
            acc = series_mul(acc, img, mul);
        }
        out += acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tensors

YTensor Yangian::tensor(const std::vector<YElement>& legs) const {
    YTensor acc(TKey{}, HPoly(1));
    for (const YElement& leg : legs) {
        YTensor next;
        for (const auto& [t, ct] : acc.terms())
            for (const auto& [m, cm] : leg.terms()) {
                TKey nt = t;
                nt.push_back(m);
                next.add(std::move(nt), ct * cm);
            }
        acc = std::move(next);
    }
    return acc;
}

YTensor Yangian::tmul(const YTensor& a, const YTensor& b) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    return impl_->tmul(a, b);
}

YTensor Yangian::permute(const YTensor& a, const std::vector<int>& perm) const {
    YTensor out;
    for (const auto& [t, c] : a.terms()) {
        if (t.size() != perm.size()) throw std::invalid_argument("permute: arity mismatch");
        TKey nt(perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k) nt[k] = t.at(static_cast<std::size_t>(perm[k]));
        out.add(std::move(nt), c);
    }
    return out;
}

YTensor Yangian::embed(const YTensor& a, int n, const std::vector<int>& pos) const {
    YTensor out;
    for (const auto& [t, c] : a.terms()) {
        if (t.size() != pos.size()) throw std::invalid_argument("embed: arity mismatch");
        TKey nt(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < pos.size(); ++k) nt.at(static_cast<std::size_t>(pos[k])) = t[k];
        out.add(std::move(nt), c);
    }
    return out;
}

YTensor Yangian::map_leg(const YTensor& a, int leg, const std::function<YElement(const YElement&)>& f) const {
    YTensor out;
    const auto l = static_cast<std::size_t>(leg);
    for (const auto& [t, c] : a.terms()) {
        YElement img = f(YElement(t.at(l), HPoly(1)));
        for (const auto& [m, cm] : img.terms()) {
            TKey nt = t;
            nt[l] = m;
            out.add(std::move(nt), c * cm);
        }
    }
    return out;
}

YTensor Yangian::map_leg_tensor(const YTensor& a, int leg, const std::function<YTensor(const YElement&)>& f) const {
    YTensor out;
    const auto l = static_cast<std::size_t>(leg);
    for (const auto& [t, c] : a.terms()) {
        YTensor img = f(YElement(t.at(l), HPoly(1)));
        for (const auto& [mk, cm] : img.terms()) {
            TKey nt(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(l));
            nt.insert(nt.end(), mk.begin(), mk.end());
            nt.insert(nt.end(), t.begin() + static_cast<std::ptrdiff_t>(l + 1), t.end());
            out.add(std::move(nt), c * cm);
        }
    }
    return out;
}

YElement Yangian::mult_legs(const YTensor& a) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    YElement out;
    for (const auto& [t, c] : a.terms()) {
        if (t.size() != 2) throw std::invalid_argument("mult_legs: arity must be 2");
        out.add_scaled(impl_->mono_mul(t[0], t[1]), c);
    }
    return out;
}

YTensor Yangian::adjoint(const YElement& T, const YTensor& a) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    YTensor out;
    std::map<Mono, YElement> memo;
    auto ad = [&](const Mono& m) -> const YElement& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        YElement x(m, HPoly(1));
        return memo.emplace(m, impl_->multiply(T, x) - impl_->multiply(x, T)).first->second;
    };
    for (const auto& [t, c] : a.terms()) {
        if (t.size() != 2) throw std::invalid_argument("adjoint: arity must be 2");
        for (const auto& [m, cm] : ad(t[0]).terms()) out.add(TKey{m, t[1]}, c * cm);
        for (const auto& [m, cm] : ad(t[1]).terms()) out.add(TKey{t[0], m}, c * cm);
    }
    return out;
}

}  // namespace yrm
