/**
 * @file liealg.cpp
 * @brief Construction of g from Cartan data via the Serre presentation of U(n+).
 */
#include "yrm/liealg.hpp"

#include "yrm/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace yrm {

namespace {

using Word = std::vector<int>;
using NElem = std::map<Word, Rational>;

void add_term(NElem& e, const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = e.try_emplace(w, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

NElem commutator(const NElem& a, const NElem& b) {
    NElem out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word ab = wa;
            ab.insert(ab.end(), wb.begin(), wb.end());
            Word ba = wb;
            ba.insert(ba.end(), wa.begin(), wa.end());
            add_term(out, ab, ca * cb);
            add_term(out, ba, -ca * cb);
        }
    return out;
}

/// All words with prescribed letter multiplicities, in lexicographic order.
std::vector<Word> words_of_weight(const Weight& wt) {
    std::vector<Word> out;
    Word cur;
    Weight left = wt;
    int total = std::accumulate(wt.begin(), wt.end(), 0);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == total) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < left.size(); ++i) {
            if (left[i] == 0) continue;
            --left[i];
            cur.push_back(static_cast<int>(i));
            rec();
            cur.pop_back();
            ++left[i];
        }
    };
    rec();
    return out;
}

bool leq(const Weight& a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Weight space of U(n+) = free algebra modulo Serre relations.
class NPlusSpace {
public:
    NPlusSpace(const CartanDatum& c, const Weight& wt) : words_(words_of_weight(wt)), ech_(static_cast<int>(words_.size())) {
        for (std::size_t k = 0; k < words_.size(); ++k) index_[words_[k]] = static_cast<int>(k);
        const int n = c.rank();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const int m = 1 - c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                Weight sw(static_cast<std::size_t>(n), 0);
                sw[static_cast<std::size_t>(i)] += m;
                sw[static_cast<std::size_t>(j)] += 1;
                if (!leq(sw, wt)) continue;
                NElem serre;
                for (int k = 0; k <= m; ++k) {
                    Word w(static_cast<std::size_t>(m - k), i);
                    w.push_back(j);
                    w.insert(w.end(), static_cast<std::size_t>(k), i);
                    add_term(serre, w, binom(m, k) * sign_pow(k));
                }
                Weight rest(wt);
                for (std::size_t q = 0; q < rest.size(); ++q) rest[q] -= sw[q];
                for (const Word& r : words_of_weight(rest))
                    for (std::size_t split = 0; split <= r.size(); ++split) {
                        std::vector<std::pair<int, Rational>> row;
                        for (const auto& [sw_word, coef] : serre) {
                            Word full(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(split));
                            full.insert(full.end(), sw_word.begin(), sw_word.end());
                            full.insert(full.end(), r.begin() + static_cast<std::ptrdiff_t>(split), r.end());
                            row.emplace_back(index_.at(full), coef);
                        }
                        ech_.insert(make_sparse(std::move(row)));
                    }
            }
    }

    SparseVec residue(const NElem& e) const {
        std::vector<std::pair<int, Rational>> row;
        for (const auto& [w, c] : e) row.emplace_back(index_.at(w), c);
        return ech_.reduce(make_sparse(std::move(row)));
    }

private:
    std::vector<Word> words_;
    std::map<Word, int> index_;
    Echelon ech_;
};

/// Rational square root if it exists.
std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational r(sn, sd);
    r.canonicalize();
    return r;
}

RMatrix zero_matrix(int n) { return RMatrix(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n))); }

RMatrix matmul(const RMatrix& a, const RMatrix& b) {
    const std::size_t n = a.size();
    RMatrix c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RMatrix matcomm(const RMatrix& a, const RMatrix& b) {
    RMatrix ab = matmul(a, b), ba = matmul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

}  // namespace

// ---------------------------------------------------------------------------
// CartanDatum

RMatrix CartanDatum::B_matrix() const {
    RMatrix m(static_cast<std::size_t>(rank()), std::vector<Rational>(static_cast<std::size_t>(rank())));
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = B(i, j);
    return m;
}

CartanDatum CartanDatum::named(const std::string& name) {
    CartanDatum c;
    c.name = name;
    if (name == "A1") {
        c.a = {{2}};
        c.d = {1};
    } else if (name == "A2") {
        c.a = {{2, -1}, {-1, 2}};
        c.d = {1, 1};
    } else if (name == "A3") {
        c.a = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
        c.d = {1, 1, 1};
    } else if (name == "B2") {
        c.a = {{2, -1}, {-2, 2}};
        c.d = {2, 1};
    } else if (name == "G2") {
        c.a = {{2, -3}, {-1, 2}};
        c.d = {1, 3};
    } else {
        throw std::invalid_argument("unsupported Lie type '" + name + "' (expected A1, A2, A3, B2 or G2)");
    }
    c.validate();
    return c;
}

CartanDatum CartanDatum::from_matrix(const std::vector<std::vector<int>>& a, const std::optional<std::vector<int>>& d) {
    CartanDatum c;
    c.name = "custom";
    c.a = a;
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("empty Cartan matrix");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("Cartan matrix is not square");
    if (d) {
        c.d = *d;
    } else {
        // Propagate d_j = d_i a_ij / a_ji along the Dynkin graph, then clear denominators.
        std::vector<std::optional<Rational>> dq(n);
        dq[0] = Rational(1);
        std::vector<std::size_t> stack{0};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || a[i][j] == 0 || dq[j]) continue;
                if (a[j][i] == 0) throw std::invalid_argument("Cartan matrix zero pattern is not symmetric");
                Rational v = *dq[i] * a[i][j] / a[j][i];
                dq[j] = v;
                stack.push_back(j);
            }
        }
        Integer l = 1;
        for (const auto& q : dq) {
            if (!q) throw std::invalid_argument("Cartan matrix is not connected");
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den().get_mpz_t());
        }
        std::vector<Integer> di;
        Integer g = 0;
        for (const auto& q : dq) {
            Rational s = *q * l;
            di.push_back(s.get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), di.back().get_mpz_t());
        }
        for (auto& x : di) {
            x /= g;
            if (!x.fits_sint_p() || x <= 0) throw std::invalid_argument("cannot symmetrize Cartan matrix");
            c.d.push_back(static_cast<int>(x.get_si()));
        }
    }
    c.validate();
    return c;
}

void CartanDatum::validate() const {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("empty Cartan matrix");
    if (d.size() != n) throw std::invalid_argument("symmetrizer count does not match Cartan matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("Cartan matrix is not square");
        if (d[i] <= 0) throw std::invalid_argument("symmetrizers must be positive");
        if (a[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
            if ((a[i][j] == 0) != (a[j][i] == 0)) throw std::invalid_argument("Cartan matrix zero pattern is not symmetric");
            if (d[i] * a[i][j] != d[j] * a[j][i]) throw std::invalid_argument("symmetrizers do not symmetrize the Cartan matrix");
        }
    // Connectivity.
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (!seen[j] && a[i][j] != 0) {
                seen[j] = 1;
                stack.push_back(j);
            }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw std::invalid_argument("Cartan matrix is not connected");
    // Positive definiteness via leading pivots of Gaussian elimination.
    RMatrix m = B_matrix();
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
        for (std::size_t r = k + 1; r < n; ++r) {
            Rational f = m[r][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[r][j] -= f * m[k][j];
        }
    }
}

// ---------------------------------------------------------------------------
// Roots

std::vector<Weight> positive_roots(const CartanDatum& c) {
    const int n = c.rank();
    std::set<Weight> all;
    std::vector<Weight> level;
    for (int i = 0; i < n; ++i) {
        Weight w(static_cast<std::size_t>(n), 0);
        w[static_cast<std::size_t>(i)] = 1;
        level.push_back(w);
        all.insert(w);
    }
    std::vector<Weight> out;
    while (!level.empty()) {
        std::sort(level.begin(), level.end(), std::greater<>());
        out.insert(out.end(), level.begin(), level.end());
        std::set<Weight> next;
        for (const Weight& beta : level)
            for (int i = 0; i < n; ++i) {
                // alpha_i-string through beta: p = how far down, q = p - <beta, alpha_i^vee>.
                int p = 0;
                Weight down = beta;
                while (true) {
                    --down[static_cast<std::size_t>(i)];
                    if (down[static_cast<std::size_t>(i)] < 0 || !all.count(down)) break;
                    ++p;
                }
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += beta[static_cast<std::size_t>(j)] * c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (p - pairing > 0) {
                    Weight up = beta;
                    ++up[static_cast<std::size_t>(i)];
                    next.insert(up);
                }
            }
        level.assign(next.begin(), next.end());
        for (const auto& w : level) all.insert(w);
        if (out.size() > 1000) throw std::invalid_argument("root system is not finite");
    }
    return out;
}

std::string weight_to_string(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// LieData

LieData LieData::build(const CartanDatum& cartan) {
    cartan.validate();
    LieData L;
    L.cartan_ = cartan;
    const int n = cartan.rank();
    L.roots_ = yrm::positive_roots(cartan);
    const int P = L.num_pos_roots();
    const int D = L.dim();

    // Chains: parent = beta - a_j for the smallest admissible j.
    L.chains_.assign(static_cast<std::size_t>(P), RootChain{});
    L.seeds_.assign(static_cast<std::size_t>(P), 0);
    for (int b = 0; b < P; ++b) {
        if (b < n) {
            L.seeds_[static_cast<std::size_t>(b)] = b;
            continue;
        }
        for (int j = 0; j < n; ++j) {
            Weight w = L.roots_[static_cast<std::size_t>(b)];
            if (w[static_cast<std::size_t>(j)] == 0) continue;
            --w[static_cast<std::size_t>(j)];
            int p = L.root_index(w);
            if (p >= 0) {
                L.chains_[static_cast<std::size_t>(b)].j = j;
                L.chains_[static_cast<std::size_t>(b)].parent = p;
                L.seeds_[static_cast<std::size_t>(b)] = L.seeds_[static_cast<std::size_t>(p)];
                break;
            }
        }
        if (L.chains_[static_cast<std::size_t>(b)].j < 0) throw std::logic_error("root has no parent");
    }

    // Unnormalized root vectors y_beta in U(n+).
    std::vector<NElem> y(static_cast<std::size_t>(P));
    for (int b = 0; b < P; ++b) {
        if (b < n) {
            y[static_cast<std::size_t>(b)][Word{b}] = 1;
        } else {
            const auto& ch = L.chains_[static_cast<std::size_t>(b)];
            y[static_cast<std::size_t>(b)] = commutator(NElem{{Word{ch.j}, Rational(1)}}, y[static_cast<std::size_t>(ch.parent)]);
        }
    }

    std::map<Weight, NPlusSpace> spaces;
    auto space = [&](const Weight& wt) -> const NPlusSpace& {
        auto it = spaces.find(wt);
        if (it == spaces.end()) it = spaces.emplace(wt, NPlusSpace(cartan, wt)).first;
        return it->second;
    };
    // Coefficient c with e = c y_gamma in U(n+), for e a Lie element of weight gamma (zero off the roots).
    auto coef_along = [&](const Weight& gamma, const NElem& e) -> std::pair<int, Rational> {
        bool nonneg = std::all_of(gamma.begin(), gamma.end(), [](int x) { return x >= 0; });
        if (!nonneg) {
            if (!e.empty()) throw std::logic_error("nonzero element of negative weight");
            return {-1, Rational(0)};
        }
        const NPlusSpace& sp = space(gamma);
        SparseVec re = sp.residue(e);
        int g = L.root_index(gamma);
        if (g < 0) {
            if (!re.empty()) throw std::logic_error("U(n+) has a vector of non-root weight " + weight_to_string(gamma));
            return {-1, Rational(0)};
        }
        if (re.empty()) return {g, Rational(0)};
        SparseVec ry = sp.residue(y[static_cast<std::size_t>(g)]);
        if (ry.empty() || ry.size() != re.size()) throw std::logic_error("root space is not one-dimensional");
        Rational c = re.front().second / ry.front().second;
        for (std::size_t k = 0; k < re.size(); ++k)
            if (re[k].first != ry[k].first || re[k].second != c * ry[k].second) throw std::logic_error("root space is not one-dimensional");
        return {g, c};
    };

    // [f_i, word] in U(n+) by the derivation rule (the h_i part is dropped: it acts on the right).
    auto f_action = [&](int i, const NElem& e) {
        NElem out;
        for (const auto& [w, c] : e)
            for (std::size_t k = 0; k < w.size(); ++k) {
                if (w[k] != i) continue;
                Rational s = 0;
                for (std::size_t l = k + 1; l < w.size(); ++l) s += cartan.B(i, w[l]);
                Word rest = w;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
                add_term(out, rest, -s * c);
            }
        return out;
    };
    auto shifted = [](Weight w, int i, int delta) {
        w[static_cast<std::size_t>(i)] += delta;
        return w;
    };

    // Unnormalized basis: y_beta (0..P-1), h_i (P..P+n-1), f_beta = omega(y_beta).
    auto Y = [&](int b) { return b; };
    auto Hh = [&](int i) { return P + i; };
    auto F = [&](int b) { return P + n + b; };
    std::vector<RMatrix> adE(static_cast<std::size_t>(n), zero_matrix(D)), adF(static_cast<std::size_t>(n), zero_matrix(D)),
        adH(static_cast<std::size_t>(n), zero_matrix(D));
    for (int i = 0; i < n; ++i) {
        auto& E = adE[static_cast<std::size_t>(i)];
        auto& Fm = adF[static_cast<std::size_t>(i)];
        auto& H = adH[static_cast<std::size_t>(i)];
        for (int k = 0; k < n; ++k) {
            E[static_cast<std::size_t>(Y(i))][static_cast<std::size_t>(Hh(k))] = -cartan.B(k, i);
            Fm[static_cast<std::size_t>(F(i))][static_cast<std::size_t>(Hh(k))] = cartan.B(k, i);
        }
        for (int b = 0; b < P; ++b) {
            const Weight& beta = L.roots_[static_cast<std::size_t>(b)];
            Rational val = L.root_value(beta, i);
            H[static_cast<std::size_t>(Y(b))][static_cast<std::size_t>(Y(b))] = val;
            H[static_cast<std::size_t>(F(b))][static_cast<std::size_t>(F(b))] = -val;
            // [e_i, y_beta] and its omega-image [f_i, f_beta] = -omega([e_i, y_beta]).
            auto [up, cu] = coef_along(shifted(beta, i, 1), commutator(NElem{{Word{i}, Rational(1)}}, y[static_cast<std::size_t>(b)]));
            if (up >= 0 && cu != 0) {
                E[static_cast<std::size_t>(Y(up))][static_cast<std::size_t>(Y(b))] = cu;
                Fm[static_cast<std::size_t>(F(up))][static_cast<std::size_t>(F(b))] = -cu;
            }
            // [f_i, y_beta] and [e_i, f_beta] = -omega([f_i, y_beta]).
            if (b == i) {
                Fm[static_cast<std::size_t>(Hh(i))][static_cast<std::size_t>(Y(b))] = -1;
                E[static_cast<std::size_t>(Hh(i))][static_cast<std::size_t>(F(b))] = 1;
            } else {
                auto [dn, cd] = coef_along(shifted(beta, i, -1), f_action(i, y[static_cast<std::size_t>(b)]));
                if (dn >= 0 && cd != 0) {
                    Fm[static_cast<std::size_t>(Y(dn))][static_cast<std::size_t>(Y(b))] = cd;
                    E[static_cast<std::size_t>(F(dn))][static_cast<std::size_t>(F(b))] = -cd;
                }
            }
        }
    }

    std::vector<RMatrix> adU(static_cast<std::size_t>(D));
    for (int b = 0; b < P; ++b) {
        if (b < n) {
            adU[static_cast<std::size_t>(Y(b))] = adE[static_cast<std::size_t>(b)];
            adU[static_cast<std::size_t>(F(b))] = adF[static_cast<std::size_t>(b)];
        } else {
            const auto& ch = L.chains_[static_cast<std::size_t>(b)];
            adU[static_cast<std::size_t>(Y(b))] = matcomm(adE[static_cast<std::size_t>(ch.j)], adU[static_cast<std::size_t>(Y(ch.parent))]);
            adU[static_cast<std::size_t>(F(b))] = matcomm(adU[static_cast<std::size_t>(F(ch.parent))], adF[static_cast<std::size_t>(ch.j)]);
        }
    }
    for (int i = 0; i < n; ++i) adU[static_cast<std::size_t>(Hh(i))] = adH[static_cast<std::size_t>(i)];

    // Norms n_beta = (y_beta, f_beta) by invariance: ([e_j, y_p], f_beta) = (e_j, [y_p, f_beta]).
    std::vector<Rational> norm(static_cast<std::size_t>(P));
    for (int b = 0; b < P; ++b) {
        if (b < n) {
            norm[static_cast<std::size_t>(b)] = 1;
            continue;
        }
        const auto& ch = L.chains_[static_cast<std::size_t>(b)];
        norm[static_cast<std::size_t>(b)] = adU[static_cast<std::size_t>(Y(ch.parent))][static_cast<std::size_t>(F(ch.j))][static_cast<std::size_t>(F(b))];
        if (norm[static_cast<std::size_t>(b)] <= 0) throw std::logic_error("non-positive root vector norm");
    }

    // Normalization x+ = lambda y, x- = mu f with lambda mu n = 1.
    std::vector<Rational> scale(static_cast<std::size_t>(D), Rational(1));
    std::vector<Rational> lambda(static_cast<std::size_t>(P)), mu(static_cast<std::size_t>(P));
    L.omega_scale_.assign(static_cast<std::size_t>(P), Rational(1));
    for (int b = 0; b < P; ++b) {
        const Rational& nb = norm[static_cast<std::size_t>(b)];
        if (auto s = rational_sqrt(nb)) {
            lambda[static_cast<std::size_t>(b)] = 1 / *s;
            mu[static_cast<std::size_t>(b)] = 1 / *s;
        } else {
            lambda[static_cast<std::size_t>(b)] = 1;
            mu[static_cast<std::size_t>(b)] = 1 / nb;
        }
        scale[static_cast<std::size_t>(Y(b))] = lambda[static_cast<std::size_t>(b)];
        scale[static_cast<std::size_t>(F(b))] = mu[static_cast<std::size_t>(b)];
        L.omega_scale_[static_cast<std::size_t>(b)] = lambda[static_cast<std::size_t>(b)] / mu[static_cast<std::size_t>(b)];
        if (b >= n) {
            auto& ch = L.chains_[static_cast<std::size_t>(b)];
            ch.cplus = lambda[static_cast<std::size_t>(b)] / lambda[static_cast<std::size_t>(ch.parent)];
            ch.cminus = mu[static_cast<std::size_t>(b)] / mu[static_cast<std::size_t>(ch.parent)];
        }
    }

    L.ad_.assign(static_cast<std::size_t>(D), zero_matrix(D));
    for (int b = 0; b < D; ++b)
        for (int r = 0; r < D; ++r)
            for (int c = 0; c < D; ++c) {
                const Rational& v = adU[static_cast<std::size_t>(b)][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (v != 0)
                    L.ad_[static_cast<std::size_t>(b)][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        scale[static_cast<std::size_t>(b)] * scale[static_cast<std::size_t>(c)] * v / scale[static_cast<std::size_t>(r)];
            }

    L.form_ = zero_matrix(D);
    for (int b = 0; b < P; ++b) {
        L.form_[static_cast<std::size_t>(L.xplus(b))][static_cast<std::size_t>(L.xminus(b))] = 1;
        L.form_[static_cast<std::size_t>(L.xminus(b))][static_cast<std::size_t>(L.xplus(b))] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) L.form_[static_cast<std::size_t>(L.hidx(i))][static_cast<std::size_t>(L.hidx(j))] = cartan.B(i, j);

    // Casimir over dual bases.
    RMatrix Binv = invert_dense(cartan.B_matrix());
    for (int b = 0; b < P; ++b) {
        L.casimir_.push_back({L.xplus(b), L.xminus(b), Rational(1)});
        L.casimir_.push_back({L.xminus(b), L.xplus(b), Rational(1)});
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (Binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                L.casimir_.push_back({L.hidx(i), L.hidx(j), Binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});

    std::vector<Rational> ct = L.casimir_action(L.xplus(L.highest_root()));
    L.kappa_ = ct[static_cast<std::size_t>(L.xplus(L.highest_root()))] / 4;
    for (int b = 0; b < D; ++b) {
        std::vector<Rational> v = L.casimir_action(b);
        for (int r = 0; r < D; ++r) {
            Rational expect = (r == b) ? 4 * L.kappa_ : Rational(0);
            if (v[static_cast<std::size_t>(r)] != expect) throw std::logic_error("Casimir is not scalar on the adjoint representation");
        }
    }
    return L;
}

int LieData::root_index(const Weight& w) const {
    auto it = std::find(roots_.begin(), roots_.end(), w);
    return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

int LieData::height(int idx) const {
    const Weight& w = root(idx);
    return std::accumulate(w.begin(), w.end(), 0);
}

Rational LieData::root_value(const Weight& beta, int i) const {
    Rational s = 0;
    for (int k = 0; k < rank(); ++k) s += beta[static_cast<std::size_t>(k)] * cartan_.B(i, k);
    return s;
}

Weight LieData::basis_weight(int b) const {
    const int P = num_pos_roots();
    if (b < P) return root(b);
    if (b < P + rank()) return Weight(static_cast<std::size_t>(rank()), 0);
    Weight w = root(b - P - rank());
    for (auto& x : w) x = -x;
    return w;
}

std::pair<int, Rational> LieData::omega_basis(int b) const {
    const int P = num_pos_roots();
    if (b < P) return {xminus(b), omega_scale(b)};
    if (b < P + rank()) return {b, Rational(1)};
    int r = b - P - rank();
    return {xplus(r), 1 / omega_scale(r)};
}

std::vector<Rational> LieData::bracket(int b1, int b2) const {
    std::vector<Rational> out(static_cast<std::size_t>(dim()));
    const RMatrix& m = ad(b1);
    for (int r = 0; r < dim(); ++r) out[static_cast<std::size_t>(r)] = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(b2)];
    return out;
}

std::vector<TensorTerm> LieData::canonical_r() const {
    std::vector<TensorTerm> out;
    for (int b = 0; b < num_pos_roots(); ++b) out.push_back({xminus(b), xplus(b), Rational(1)});
    return out;
}

std::vector<TensorTerm> LieData::r_i(int i) const {
    std::vector<TensorTerm> out;
    for (int b = 0; b < num_pos_roots(); ++b) {
        Rational v = root_value(root(b), i);
        if (v != 0) out.push_back({xminus(b), xplus(b), -v});
    }
    return out;
}

std::vector<Rational> LieData::casimir_action(int b) const {
    const std::size_t D = static_cast<std::size_t>(dim());
    std::vector<Rational> out(D);
    for (const auto& t : casimir_) {
        const RMatrix& A = ad(t.left);
        const RMatrix& B = ad(t.right);
        for (std::size_t k = 0; k < D; ++k) {
            const Rational& bk = B[k][static_cast<std::size_t>(b)];
            if (bk == 0) continue;
            for (std::size_t r = 0; r < D; ++r)
                if (A[r][k] != 0) out[r] += t.coeff * A[r][k] * bk;
        }
    }
    return out;
}

int LieData::nu(const Weight& beta) const {
    for (int x : beta)
        if (x < 0) return INT_MAX;
    std::map<Weight, int> memo;
    std::function<int(const Weight&)> rec = [&](const Weight& w) -> int {
        if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) return 0;
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        int best = INT_MAX;
        for (const Weight& r : roots_) {
            if (!leq(r, w)) continue;
            Weight rest = w;
            for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= r[k];
            int v = rec(rest);
            if (v != INT_MAX) best = std::min(best, v + 1);
        }
        memo[w] = best;
        return best;
    };
    return rec(beta);
}

LieData LieData::with_flipped_chain_sign(int root) const {
    if (root < rank() || root >= num_pos_roots()) throw std::invalid_argument("chain sign flip needs a non-simple root");
    LieData copy = *this;
    copy.chains_[static_cast<std::size_t>(root)].cplus = -copy.chains_[static_cast<std::size_t>(root)].cplus;
    return copy;
}

}  // namespace yrm
