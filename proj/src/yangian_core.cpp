/**
 * @file yangian_core.cpp
 * @brief Generator keys, text forms, root vector expansion and the Y^+ slice engine.
 */
#include "yangian_impl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace yrm {

namespace {

constexpr std::uint32_t kModeMask = 0xFFFFFu;
constexpr int kMaxA = 255;

bool leq(const Weight& a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool is_zero_weight(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

}  // namespace

Key make_key(Kind kind, int a, int mode) {
    if (a < 0 || a >= kMaxA) throw std::out_of_range("generator index out of range");
    if (mode < 0 || static_cast<std::uint32_t>(mode) >= kModeMask) throw std::out_of_range("generator mode out of range");
    auto ua = static_cast<std::uint32_t>(a);
    auto um = static_cast<std::uint32_t>(mode);
    switch (kind) {
        case Kind::XPlus: return (0u << 28) | (ua << 20) | um;
        case Kind::H: return (1u << 28) | (ua << 20) | um;
        case Kind::XMinus: return (2u << 28) | ((static_cast<std::uint32_t>(kMaxA) - ua) << 20) | (kModeMask - um);
    }
    throw std::logic_error("bad generator kind");
}

Gen decode(Key k) {
    Kind kind = key_kind(k);
    auto a = static_cast<int>((k >> 20) & 0xFFu);
    auto m = static_cast<int>(k & kModeMask);
    if (kind == Kind::XMinus) return {kind, kMaxA - a, static_cast<int>(kModeMask) - m};
    return {kind, a, m};
}

Split split_word(const Word& w) {
    Split s;
    for (Key k : w) {
        switch (key_kind(k)) {
            case Kind::XPlus: s.p.push_back(k); break;
            case Kind::H: s.h.push_back(k); break;
            case Kind::XMinus: s.q.push_back(k); break;
        }
    }
    return s;
}

Word concat(const Word& a, const Word& b) {
    Word r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word concat3(const Word& a, const Word& b, const Word& c) {
    Word r;
    r.reserve(a.size() + b.size() + c.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    r.insert(r.end(), c.begin(), c.end());
    return r;
}

Word merge_sorted(const Word& a, const Word& b) {
    Word r(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), r.begin());
    return r;
}

// ---------------------------------------------------------------------------

Yangian::Impl::Impl(LieData l) : lie(std::move(l)), P(lie.num_pos_roots()), rank(lie.rank()) {}

Weight Yangian::Impl::key_weight(Key k) const {
    Gen g = decode(k);
    if (g.kind == Kind::H) return Weight(static_cast<std::size_t>(rank), 0);
    Weight w = lie.root(g.a);
    if (g.kind == Kind::XMinus)
        for (int& x : w) x = -x;
    return w;
}

const WComb& Yangian::Impl::expand_letter(Key k) {
    auto it = expand_cache.find(k);
    if (it != expand_cache.end()) return it->second;
    Gen g = decode(k);
    WComb out;
    if (g.kind == Kind::H || g.a < rank) {
        out.add(Word{k}, HPoly(1));
    } else {
        const RootChain& ch = lie.chain(g.a);
        bool plus = g.kind == Kind::XPlus;
        Key xj = plus ? xp(ch.j, 0) : xm(ch.j, 0);
        WComb parent = expand_letter(plus ? xp(ch.parent, g.mode) : xm(ch.parent, g.mode));
        HPoly c(plus ? ch.cplus : ch.cminus);
        for (const auto& [w, cw] : parent.terms()) {
            // x^+ = c [x_j, parent], x^- = c [parent, x_j]
            Word left = concat(Word{xj}, w), right = concat(w, Word{xj});
            out.add(plus ? left : right, cw * c);
            out.add(plus ? right : left, -(cw * c));
        }
    }
    return expand_cache.emplace(k, std::move(out)).first->second;
}

WComb Yangian::Impl::expand_word(const Word& w) {
    WComb acc(Word{}, HPoly(1));
    for (Key k : w) {
        const WComb& e = expand_letter(k);
        if (e.size() == 1 && e.terms().begin()->first.size() == 1 && e.terms().begin()->first[0] == k) {
            WComb next;
            for (const auto& [a, ca] : acc.terms()) {
                Word x = a;
                x.push_back(k);
                next.add(std::move(x), ca);
            }
            acc = std::move(next);
            continue;
        }
        WComb next;
        for (const auto& [a, ca] : acc.terms())
            for (const auto& [b, cb] : e.terms()) next.add(concat(a, b), ca * cb);
        acc = std::move(next);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Y^+ slices

const WComb& Yangian::Impl::serre_element(int i, int j, const std::vector<int>& r, int s) {
    auto key = std::make_tuple(i, j, r, s);
    auto it = serre_cache.find(key);
    if (it != serre_cache.end()) return it->second;
    WComb total;
    std::vector<int> perm = r;
    std::sort(perm.begin(), perm.end());
    do {
        WComb cur(Word{xp(j, s)}, HPoly(1));
        for (auto p = perm.rbegin(); p != perm.rend(); ++p) {
            Key a = xp(i, *p);
            WComb next;
            for (const auto& [w, c] : cur.terms()) {
                next.add(concat(Word{a}, w), c);
                next.add(concat(w, Word{a}), -c);
            }
            cur = std::move(next);
        }
        total += cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return serre_cache.emplace(key, std::move(total)).first->second;
}

PlusSlice& Yangian::Impl::slice(const Weight& beta, int n) {
    auto key = std::make_pair(beta, n);
    auto it = slices.find(key);
    if (it != slices.end()) return *it->second;
    auto s = std::make_unique<PlusSlice>();
    s->beta = beta;
    s->n = n;
    build_slice(*s);
    return *slices.emplace(key, std::move(s)).first->second;
}

void Yangian::Impl::build_slice(PlusSlice& s) {
    if (is_zero_weight(s.beta)) throw std::logic_error("Y+ slice of weight zero");
    PlusSlice* lower = s.n > 0 ? &slice(s.beta, s.n - 1) : nullptr;

    // hbar-free words of weight beta and mode sum n.
    {
        Word cur;
        Weight rem = s.beta;
        int letters = 0;
        for (int x : rem) letters += x;
        std::function<void(int, int)> rec = [&](int left, int nrem) {
            if (left == 0) {
                if (nrem == 0) s.words.push_back(cur);
                return;
            }
            for (int i = 0; i < rank; ++i) {
                if (rem[static_cast<std::size_t>(i)] == 0) continue;
                --rem[static_cast<std::size_t>(i)];
                for (int m = (left == 1 ? nrem : 0); m <= nrem; ++m) {
                    cur.push_back(xp(i, m));
                    rec(left - 1, nrem - m);
                    cur.pop_back();
                }
                ++rem[static_cast<std::size_t>(i)];
            }
        };
        rec(letters, s.n);
        for (std::size_t k = 0; k < s.words.size(); ++k) s.word_idx.emplace(s.words[k], static_cast<int>(k));
    }

    // Ordered monomials: hbar-free ones first, then hbar times the lower slice basis.
    {
        std::vector<Key> items;
        for (int g = 0; g < P; ++g)
            if (leq(lie.root(g), s.beta))
                for (int m = 0; m <= s.n; ++m) items.push_back(xp(g, m));
        Mono cur;
        Weight rem = s.beta;
        std::function<void(std::size_t, int)> rec = [&](std::size_t start, int nrem) {
            if (is_zero_weight(rem)) {
                if (nrem == 0) s.pbw.emplace_back(0, cur);
                return;
            }
            for (std::size_t t = start; t < items.size(); ++t) {
                Gen g = decode(items[t]);
                const Weight& gw = lie.root(g.a);
                if (g.mode > nrem || !leq(gw, rem)) continue;
                for (std::size_t c = 0; c < rem.size(); ++c) rem[c] -= gw[c];
                cur.push_back(items[t]);
                rec(t, nrem - g.mode);
                cur.pop_back();
                for (std::size_t c = 0; c < rem.size(); ++c) rem[c] += gw[c];
            }
        };
        rec(0, s.n);
        if (lower) {
            s.lower_count = static_cast<int>(lower->pbw.size());
            for (const auto& [k, m] : lower->pbw) s.pbw.emplace_back(k + 1, m);
        }
    }

    const int W = static_cast<int>(s.words.size());
    const int L = s.lower_count;
    const int T = s.tag_offset();
    s.ech = Echelon(T + static_cast<int>(s.pbw.size()));

    auto word_col = [&](const Word& w) { return s.word_idx.at(w); };
    auto lower_entries = [&](const Word& w, const Rational& f, std::vector<std::pair<int, Rational>>& row) {
        for (const auto& [t, c] : slice_reduce(*lower, w)) row.emplace_back(W + t, f * c);
    };

    // Relation rows: u * rel * v for the xx and Serre relations, each generated from a unique word.
    const CartanDatum& cd = lie.cartan();
    for (const Word& w : s.words) {
        const std::size_t len = w.size();
        for (std::size_t p = 0; p + 1 < len; ++p) {
            Gen a = decode(w[p]), b = decode(w[p + 1]);
            if (a.mode >= 1) {
                int i = a.a, r = a.mode - 1, j = b.a, sm = b.mode;
                if (std::make_pair(i, r) <= std::make_pair(j, sm)) {
                    auto sub = [&](Key k1, Key k2) {
                        Word x = w;
                        x[p] = k1;
                        x[p + 1] = k2;
                        return x;
                    };
                    std::vector<std::pair<int, Rational>> row;
                    row.emplace_back(word_col(w), Rational(1));
                    row.emplace_back(word_col(sub(xp(j, sm), xp(i, r + 1))), Rational(-1));
                    row.emplace_back(word_col(sub(xp(i, r), xp(j, sm + 1))), Rational(-1));
                    row.emplace_back(word_col(sub(xp(j, sm + 1), xp(i, r))), Rational(1));
                    Rational dij = cd.dij(i, j);
                    if (dij != 0) {
                        lower_entries(sub(xp(i, r), xp(j, sm)), -dij, row);
                        lower_entries(sub(xp(j, sm), xp(i, r)), -dij, row);
                    }
                    s.ech.insert(make_sparse(std::move(row)));
                }
            }
        }
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (i == j) continue;
                const std::size_t m = static_cast<std::size_t>(1 - cd.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                for (std::size_t p = 0; p + m < len; ++p) {
                    std::vector<int> r;
                    bool ok = true;
                    for (std::size_t q = p; q < p + m && ok; ++q) {
                        Gen g = decode(w[q]);
                        if (g.a != i || (!r.empty() && g.mode < r.back())) ok = false;
                        else r.push_back(g.mode);
                    }
                    Gen gj = decode(w[p + m]);
                    if (!ok || gj.a != j) continue;
                    const WComb& se = serre_element(i, j, r, gj.mode);
                    std::vector<std::pair<int, Rational>> row;
                    Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
                    Word v(w.begin() + static_cast<std::ptrdiff_t>(p + m + 1), w.end());
                    for (const auto& [sw, c] : se.terms()) row.emplace_back(word_col(concat3(u, sw, v)), c.coeff(0));
                    s.ech.insert(make_sparse(std::move(row)));
                }
            }
    }
    const int template_rank = s.ech.rank();

    // Ordered monomials tagged: expansion - tag.
    int k0 = 0;
    for (const auto& pm : s.pbw)
        if (pm.first == 0) ++k0;
    for (std::size_t t = 0; t < s.pbw.size(); ++t) {
        std::vector<std::pair<int, Rational>> row;
        const auto& [k, mono] = s.pbw[t];
        if (k == 0) {
            WComb e = expand_word(mono);
            for (const auto& [w, c] : e.terms()) row.emplace_back(word_col(w), c.coeff(0));
        } else {
            row.emplace_back(W + static_cast<int>(t) - k0, Rational(1));
        }
        row.emplace_back(T + static_cast<int>(t), Rational(-1));
        if (!s.ech.insert(make_sparse(std::move(row))))
            throw std::logic_error("PBW violation: dependent ordered monomials in slice " + weight_to_string(s.beta));
    }
    bool spans = template_rank + static_cast<int>(s.pbw.size()) == W + L;
    for (int c = 0; c < T && spans; ++c) spans = s.ech.is_pivot(c);
    if (!spans)
        throw std::logic_error("PBW violation: slice " + weight_to_string(s.beta) + " degree " + std::to_string(s.n) +
                               " has " + std::to_string(W + L - template_rank) + " free dimensions but " +
                               std::to_string(s.pbw.size()) + " ordered monomials");

    s.stats.beta = s.beta;
    s.stats.degree = s.n;
    s.stats.columns = W + (lower ? lower->stats.columns : 0);
    s.stats.rank = template_rank + (lower ? lower->stats.rank : 0);
    s.stats.pbw = static_cast<int>(s.pbw.size());
}

const SparseVec& Yangian::Impl::slice_reduce(PlusSlice& s, const Word& w) {
    auto it = s.memo.find(w);
    if (it != s.memo.end()) return it->second;
    auto wi = s.word_idx.find(w);
    if (wi == s.word_idx.end()) throw std::logic_error("word outside its Y+ slice");
    SparseVec red = s.ech.reduce(SparseVec{{wi->second, Rational(1)}});
    const int T = s.tag_offset();
    SparseVec out;
    for (auto& [c, v] : red) {
        if (c < T) throw std::logic_error("Y+ reduction left a non-basis column");
        out.emplace_back(c - T, std::move(v));
    }
    return s.memo.emplace(w, std::move(out)).first->second;
}

const YElement& Yangian::Impl::reduce_plus(const Word& w) {
    auto it = reduce_plus_cache.find(w);
    if (it != reduce_plus_cache.end()) return it->second;
    YElement out;
    if (std::is_sorted(w.begin(), w.end())) {
        out.add(w, HPoly(1));
    } else {
        bool simple = std::all_of(w.begin(), w.end(), [&](Key k) { return decode(k).a < rank; });
        if (simple) {
            Weight beta(static_cast<std::size_t>(rank), 0);
            int n = 0;
            for (Key k : w) {
                Gen g = decode(k);
                ++beta[static_cast<std::size_t>(g.a)];
                n += g.mode;
            }
            PlusSlice& s = slice(beta, n);
            for (const auto& [t, c] : slice_reduce(s, w)) {
                const auto& [k, mono] = s.pbw[static_cast<std::size_t>(t)];
                out.add(mono, HPoly::monomial(c, k));
            }
        } else {
            WComb e = expand_word(w);
            for (const auto& [x, c] : e.terms()) out.add_scaled(reduce_plus(x), c);
        }
    }
    return reduce_plus_cache.emplace(w, std::move(out)).first->second;
}

std::pair<Rational, Key> Yangian::Impl::omega_key(Key k) const {
    Gen g = decode(k);
    switch (g.kind) {
        case Kind::XPlus: return {lie.omega_scale(g.a), xm(g.a, g.mode)};
        case Kind::XMinus: return {Rational(1) / lie.omega_scale(g.a), xp(g.a, g.mode)};
        case Kind::H: return {Rational(1), k};
    }
    throw std::logic_error("bad key");
}

std::pair<Rational, Mono> Yangian::Impl::omega_mono(const Mono& m) const {
    Rational scale = 1;
    Mono out;
    out.reserve(m.size());
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        auto [s, k] = omega_key(*it);
        scale *= s;
        out.push_back(k);
    }
    // Commuting h letters stay sorted.
    Split sp = split_word(out);
    if (!std::is_sorted(sp.h.begin(), sp.h.end())) {
        std::sort(sp.h.begin(), sp.h.end());
        out = concat3(sp.p, sp.h, sp.q);
    }
    return {scale, out};
}

const YElement& Yangian::Impl::reduce_minus(const Word& w) {
    auto it = reduce_minus_cache.find(w);
    if (it != reduce_minus_cache.end()) return it->second;
    YElement out;
    if (std::is_sorted(w.begin(), w.end())) {
        out.add(w, HPoly(1));
    } else {
        auto [s1, wp] = omega_mono(w);
        for (const auto& [m, c] : reduce_plus(wp).terms()) {
            auto [s2, mm] = omega_mono(m);
            out.add(mm, c * (s1 * s2));
        }
    }
    return reduce_minus_cache.emplace(w, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Public shell

Yangian::Yangian(LieData lie) : impl_(std::make_shared<Impl>(std::move(lie))) {}

const LieData& Yangian::lie() const { return impl_->lie; }

int Yangian::degree(const Mono& m) const {
    int d = 0;
    for (Key k : m) d += decode(k).mode;
    return d;
}

Weight Yangian::key_weight(Key k) const { return impl_->key_weight(k); }

Weight Yangian::weight(const Mono& m) const {
    Weight w(static_cast<std::size_t>(rank()), 0);
    for (Key k : m) {
        Weight kw = impl_->key_weight(k);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += kw[i];
    }
    return w;
}

SliceStats Yangian::plus_slice(const Weight& beta, int degree) const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    if (static_cast<int>(beta.size()) != rank() || degree < 0) throw std::invalid_argument("bad slice request");
    for (int x : beta)
        if (x < 0) throw std::invalid_argument("slice weight must be nonnegative");
    return impl_->slice(beta, degree).stats;
}

std::string Yangian::key_to_string(Key k) const {
    Gen g = decode(k);
    std::ostringstream os;
    if (g.kind == Kind::H) {
        os << "h[" << g.a + 1 << "," << g.mode << "]";
        return os.str();
    }
    os << (g.kind == Kind::XPlus ? "x+[" : "x-[");
    if (g.a < rank()) os << g.a + 1;
    else os << "beta=" << weight_to_string(lie().root(g.a));
    os << "," << g.mode << "]";
    return os.str();
}

std::string Yangian::mono_to_string(const Mono& m) const {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += "*";
        out += key_to_string(m[i]);
    }
    return out;
}

namespace {

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

}  // namespace

Mono Yangian::parse_mono(const std::string& text) const {
    Mono out;
    if (text == "1") return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t star = text.find('*', start);
        std::string tok = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
        Kind kind;
        std::size_t open;
        if (tok.rfind("h[", 0) == 0) {
            kind = Kind::H;
            open = 2;
        } else if (tok.rfind("x+[", 0) == 0) {
            kind = Kind::XPlus;
            open = 3;
        } else if (tok.rfind("x-[", 0) == 0) {
            kind = Kind::XMinus;
            open = 3;
        } else {
            throw std::invalid_argument("bad generator '" + tok + "'");
        }
        if (tok.back() != ']') throw std::invalid_argument("bad generator '" + tok + "'");
        std::string body = tok.substr(open, tok.size() - open - 1);
        std::size_t comma = body.rfind(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad generator '" + tok + "'");
        std::string head = body.substr(0, comma);
        int mode = parse_int(body.substr(comma + 1));
        int a;
        if (head.rfind("beta=(", 0) == 0) {
            if (kind == Kind::H || head.back() != ')') throw std::invalid_argument("bad generator '" + tok + "'");
            Weight w;
            std::string inner = head.substr(6, head.size() - 7);
            std::stringstream ss(inner);
            std::string part;
            while (std::getline(ss, part, ',')) w.push_back(parse_int(part));
            if (static_cast<int>(w.size()) != rank()) throw std::invalid_argument("bad root in '" + tok + "'");
            a = lie().root_index(w);
            if (a < 0) throw std::invalid_argument("not a positive root in '" + tok + "'");
        } else {
            a = parse_int(head) - 1;
            if (a < 0 || a >= rank()) throw std::invalid_argument("bad node in '" + tok + "'");
        }
        if (mode < 0) throw std::invalid_argument("negative mode in '" + tok + "'");
        out.push_back(make_key(kind, a, mode));
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return out;
}

std::string Yangian::element_to_string(const YElement& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.to_string() + ")*" + mono_to_string(m);
    }
    return out;
}

}  // namespace yrm
