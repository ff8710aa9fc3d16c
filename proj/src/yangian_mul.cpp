/**
 * @file yangian_mul.cpp
 * @brief Straightening of x^- x^+ words, commutation of h through x letters, and PBW multiplication.
 */
#include "yangian_impl.hpp"

#include <algorithm>
#include <stdexcept>

namespace yrm {

namespace {

/// omega on a word of simple x^+ letters: reversed x^- word (unit scales).
Word omega_simple(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Gen g = decode(*it);
        out.push_back(make_key(g.kind == Kind::XPlus ? Kind::XMinus : Kind::XPlus, g.a, g.mode));
    }
    return out;
}

}  // namespace

// [h_ir, x^+_js] as a combination of words x^+_{j,s'} * (sorted h's).
const WComb& Yangian::Impl::hcomm(int i, int r, int j, int s) {
    auto key = std::make_tuple(i, r, j, s);
    auto it = hcomm_cache.find(key);
    if (it != hcomm_cache.end()) return it->second;
    const Rational D = lie.cartan().dij(i, j);
    WComb out;
    if (r == 0) {
        out.add(Word{xp(j, s)}, HPoly(2 * D));
    } else {
        // C(r,s) = C(r-1,s+1) + hbar D (2 x_s h_{r-1} + C(r-1,s))
        out += hcomm(i, r - 1, j, s + 1);
        HPoly hd = HPoly::monomial(D, 1);
        out.add(Word{xp(j, s), hk(i, r - 1)}, hd * Rational(2));
        out.add_scaled(hcomm(i, r - 1, j, s), hd);
    }
    return hcomm_cache.emplace(key, std::move(out)).first->second;
}

const WComb& Yangian::Impl::h_through_plus(Key h, const Word& p) {
    auto key = std::make_pair(h, p);
    auto it = h_through_cache.find(key);
    if (it != h_through_cache.end()) return it->second;
    WComb out;
    if (p.empty()) {
        out.add(Word{h}, HPoly(1));
    } else {
        Key x = p.front();
        Word rest(p.begin() + 1, p.end());
        // h x rest = x (h rest) + [h, x] rest
        for (const auto& [w, c] : h_through_plus(h, rest).terms()) out.add(concat(Word{x}, w), c);
        Gen gh = decode(h), gx = decode(x);
        for (const auto& [cw, cc] : hcomm(gh.a, gh.mode, gx.a, gx.mode).terms()) {
            Word hs(cw.begin() + 1, cw.end());
            for (const auto& [w, c] : hs_through_plus(hs, rest).terms()) out.add(concat(Word{cw.front()}, w), cc * c);
        }
    }
    return h_through_cache.emplace(key, std::move(out)).first->second;
}

const WComb& Yangian::Impl::hs_through_plus(const Word& hs, const Word& p) {
    auto key = std::make_pair(hs, p);
    auto it = hs_through_cache.find(key);
    if (it != hs_through_cache.end()) return it->second;
    WComb out;
    if (hs.empty() || p.empty()) {
        out.add(concat(p, hs), HPoly(1));
    } else {
        Word head(hs.begin(), hs.end() - 1);
        for (const auto& [w1, c1] : h_through_plus(hs.back(), p).terms()) {
            Split s1 = split_word(w1);
            for (const auto& [w2, c2] : hs_through_plus(head, s1.p).terms()) {
                Split s2 = split_word(w2);
                out.add(concat(s2.p, merge_sorted(s2.h, s1.h)), c1 * c2);
            }
        }
    }
    return hs_through_cache.emplace(key, std::move(out)).first->second;
}

WComb Yangian::Impl::minus_through_hs(const Word& q, const Word& hs) {
    WComb out;
    if (q.empty() || hs.empty()) {
        out.add(concat(hs, q), HPoly(1));
        return out;
    }
    // q hs = omega(hs omega(q))
    for (const auto& [w, c] : hs_through_plus(hs, omega_simple(q)).terms()) {
        Split s = split_word(w);
        out.add(concat(s.h, omega_simple(s.p)), c);
    }
    return out;
}

const WComb& Yangian::Impl::straighten(const Word& u, const Word& v) {
    auto key = std::make_pair(u, v);
    auto it = straighten_cache.find(key);
    if (it != straighten_cache.end()) return it->second;
    WComb out;
    if (u.empty() || v.empty()) {
        out.add(concat(v, u), HPoly(1));
    } else {
        Key y = u.back(), x = v.front();
        Word u1(u.begin(), u.end() - 1), v1(v.begin() + 1, v.end());
        // u' y x v' = u' x y v' - delta u' h v'
        for (const auto& [t1, c1] : straighten(Word{y}, v1).terms()) {
            Split s1 = split_word(t1);
            for (const auto& [t2, c2] : straighten(u1, concat(Word{x}, s1.p)).terms()) {
                Split s2 = split_word(t2);
                WComb s3c = minus_through_hs(s2.q, s1.h);
                for (const auto& [t3, c3] : s3c.terms()) {
                    Split s3 = split_word(t3);
                    out.add(concat3(s2.p, merge_sorted(s2.h, s3.h), concat(s3.q, s1.q)), c1 * c2 * c3);
                }
            }
        }
        Gen gx = decode(x), gy = decode(y);
        if (gx.a == gy.a) {
            Key h = hk(gx.a, gx.mode + gy.mode);
            WComb s4c = minus_through_hs(u1, Word{h});
            for (const auto& [t4, c4] : s4c.terms()) {
                Split s4 = split_word(t4);
                for (const auto& [t5, c5] : straighten(s4.q, v1).terms()) {
                    Split s5 = split_word(t5);
                    for (const auto& [t6, c6] : hs_through_plus(s4.h, s5.p).terms()) {
                        Split s6 = split_word(t6);
                        out.add(concat3(s6.p, merge_sorted(s6.h, s5.h), s5.q), -(c4 * c5 * c6));
                    }
                }
            }
        }
    }
    return straighten_cache.emplace(key, std::move(out)).first->second;
}

const YElement& Yangian::Impl::mono_mul(const Mono& a, const Mono& b) {
    auto key = std::make_pair(a, b);
    auto it = mono_mul_cache.find(key);
    if (it != mono_mul_cache.end()) return it->second;
    YElement out;
    if (a.empty() || b.empty()) {
        out.add(concat(a, b), HPoly(1));
        return mono_mul_cache.emplace(key, std::move(out)).first->second;
    }
    Split A = split_word(a), B = split_word(b);
    if (A.q.empty() && B.p.empty()) {
        out.add(concat3(A.p, merge_sorted(A.h, B.h), B.q), HPoly(1));
    } else if (A.q.empty() && A.h.empty()) {
        Word tail = concat(B.h, B.q);
        for (const auto& [m, c] : reduce_plus(concat(A.p, B.p)).terms()) out.add(concat(m, tail), c);
    } else if (B.p.empty() && B.h.empty()) {
        Word head = concat(A.p, A.h);
        for (const auto& [m, c] : reduce_minus(concat(A.q, B.q)).terms()) out.add(concat(head, m), c);
    } else {
        WComb U = expand_word(A.q), V = expand_word(B.p);
        WComb triples;
        for (const auto& [u, cu] : U.terms())
            for (const auto& [v, cv] : V.terms())
                for (const auto& [t, ct] : straighten(u, v).terms()) {
                    Split s = split_word(t);
                    WComb right = minus_through_hs(s.q, B.h);
                    for (const auto& [l, cl] : hs_through_plus(A.h, s.p).terms()) {
                        Split sl = split_word(l);
                        Word hh = merge_sorted(sl.h, s.h);
                        for (const auto& [r, cr] : right.terms()) {
                            Split sr = split_word(r);
                            triples.add(concat3(sl.p, merge_sorted(hh, sr.h), sr.q), cu * cv * ct * cl * cr);
                        }
                    }
                }
        for (const auto& [t, ct] : triples.terms()) {
            Split s = split_word(t);
            const YElement& xplus = reduce_plus(concat(A.p, s.p));
            const YElement& xminus = reduce_minus(concat(s.q, B.q));
            for (const auto& [mp, cp] : xplus.terms())
                for (const auto& [mm, cm] : xminus.terms()) out.add(concat3(mp, s.h, mm), ct * cp * cm);
        }
    }
    return mono_mul_cache.emplace(key, std::move(out)).first->second;
}

YElement Yangian::Impl::multiply(const YElement& a, const YElement& b) {
    YElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_scaled(mono_mul(ma, mb), ca * cb);
    return out;
}

YElement Yangian::Impl::normal_form(const Word& w, const HPoly& c) {
    YElement acc(Mono{}, c);
    for (Key k : w) {
        if (decode(k).a >= (key_kind(k) == Kind::H ? rank : P)) throw std::invalid_argument("generator index out of range");
        acc = multiply(acc, YElement(Mono{k}, HPoly(1)));
    }
    return acc;
}

// ---------------------------------------------------------------------------

YElement Yangian::multiply(const YElement& a, const YElement& b) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    return impl_->multiply(a, b);
}

YElement Yangian::commutator(const YElement& a, const YElement& b) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    return impl_->multiply(a, b) - impl_->multiply(b, a);
}

YElement Yangian::normal_form(const std::vector<Key>& word, const HPoly& coeff) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    return impl_->normal_form(word, coeff);
}

}  // namespace yrm
