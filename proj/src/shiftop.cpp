/**
 * @file shiftop.cpp
 * @brief Phi_z images, Yangian-double relation checks and the dual-generator identity.
 */
#include "yrm/shiftop.hpp"

#include "yrm/linalg.hpp"
#include "yrm/rmatrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace yrm {

ShiftFault ShiftFault::parse(const std::string& spec) {
    ShiftFault f;
    if (spec == "phi-sign:x+") f.type = Type::FlipXPlus;
    else if (spec == "phi-sign:h") f.type = Type::FlipH;
    else if (spec == "phi-chain") f.type = Type::ChainRule;
    else throw std::invalid_argument("unknown shift fault '" + spec + "' (expected phi-sign:x+, phi-sign:h or phi-chain)");
    return f;
}

std::string ShiftFault::to_string() const {
    switch (type) {
        case Type::FlipXPlus: return "phi-sign:x+";
        case Type::FlipH: return "phi-sign:h";
        case Type::ChainRule: return "phi-chain";
    }
    return "";
}

ShiftOperator::ShiftOperator(Yangian Y, int N, int K, std::vector<ShiftFault> faults)
    : Y_(std::move(Y)), N_(N), K_(K < 0 ? std::max(N - 1, 0) : K), faults_(std::move(faults)) {
    if (N < 1) throw std::invalid_argument("shift operator checks need N >= 1");
    // Products of up to three images whose factors carry z-degree <= K + 1.
    cutoff_ = N_ + 2 * (K_ + 1);
}

YSeries ShiftOperator::image(Kind kind, int a, int r, int cutoff) const {
    const Truncation tr{cutoff, HPoly::kNoTrunc};
    if (r >= 0) return Y_.tau(Y_.gen(make_key(kind, a, r)), tr);
    const int k = -r - 1;
    int sign = 1;
    for (const ShiftFault& f : faults_) {
        if (f.type == ShiftFault::Type::FlipXPlus && kind == Kind::XPlus && k == 0) sign = -sign;
        if (f.type == ShiftFault::Type::FlipH && kind == Kind::H && k == 0) sign = -sign;
        if (f.type == ShiftFault::Type::ChainRule) sign *= sign_pow(k);
    }
    YSeries out(tr);
    for (int m = 0; m + k + 1 <= cutoff; ++m)
        out.add(-m - k - 1, YElement(Mono{make_key(kind, a, m)}, HPoly(binom(m + k, k) * Rational(sign * sign_pow(m)))));
    return out;
}

const YSeries& ShiftOperator::image(Kind kind, int a, int r) const {
    auto key = std::make_tuple(static_cast<int>(kind), a, r);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, image(kind, a, r, cutoff_)).first->second;
}

YSeries ShiftOperator::mul(const YSeries& a, const YSeries& b) const {
    return series_mul(a, b, [this](const YElement& x, const YElement& y) { return Y_.multiply(x, y); });
}

namespace {

/// Accumulates instances of one relation family into a single result.
struct Family {
    CheckResult res;
    int count = 0;
    void record(const Yangian& Y, const std::string& inst, const YSeries& diff, int N) {
        ++count;
        if (!res.pass) return;
        for (auto it = diff.coeffs().rbegin(); it != diff.coeffs().rend(); ++it) {
            if (it->first < -N) break;
            res.pass = false;
            const auto& [m, c] = *it->second.terms().begin();
            res.first_discrepancy = inst + ": z^" + std::to_string(it->first) + " at " + Y.mono_to_string(m) + ": " + c.to_string();
            return;
        }
    }
    CheckResult done() {
        res.instance += " (" + std::to_string(count) + " instances)";
        return res;
    }
};

std::string mode_text(const char* name, int i, int r) { return std::string(name) + "[" + std::to_string(i + 1) + "," + std::to_string(r) + "]"; }

}  // namespace

Report ShiftOperator::check_double_relations() const {
    const LieData& L = Y_.lie();
    const int n = L.rank();
    const std::string inst = L.cartan().name + " N=" + std::to_string(N_) + " modes [" + std::to_string(-K_) + "," + std::to_string(K_) + "]";
    auto comm = [this](const YSeries& a, const YSeries& b) { return mul(a, b) - mul(b, a); };
    auto X = [this](int sgn, int i, int r) -> const YSeries& { return image(sgn > 0 ? Kind::XPlus : Kind::XMinus, i, r); };
    auto H = [this](int i, int r) -> const YSeries& { return image(Kind::H, i, r); };
    std::vector<int> modes(static_cast<std::size_t>(2 * K_ + 1));
    std::iota(modes.begin(), modes.end(), -K_);

    Family hh{{"relations", "hh " + inst, true, ""}}, h0x{{"relations", "h0x " + inst, true, ""}},
        xh{{"relations", "xh " + inst, true, ""}}, xx{{"relations", "xx " + inst, true, ""}},
        xxh{{"relations", "xxh " + inst, true, ""}}, serre{{"relations", "serre " + inst, true, ""}};

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational dij = L.cartan().dij(i, j);
            for (int r : modes)
                for (int s : modes) {
                    if (i <= j) hh.record(Y_, mode_text("hh", i, r) + mode_text(" ", j, s), comm(H(i, r), H(j, s)), N_);
                    // [x^+_ir, x^-_js] = delta_ij h_{i,r+s}
                    YSeries d = comm(X(1, i, r), X(-1, j, s));
                    if (i == j) d -= H(i, r + s);
                    xxh.record(Y_, mode_text("x+", i, r) + mode_text(" x-", j, s), d, N_);
                }
            for (int sgn : {1, -1}) {
                for (int s : modes) {
                    YSeries d = comm(H(i, 0), X(sgn, j, s)) - X(sgn, j, s).scaled(HPoly(2 * dij * sgn));
                    h0x.record(Y_, mode_text("h", i, 0) + mode_text(sgn > 0 ? " x+" : " x-", j, s), d, N_);
                }
                const HPoly hd = HPoly::monomial(dij * sgn, 1);
                for (int r : modes)
                    for (int s : modes) {
                        if (r + 1 > K_ || s + 1 > K_) continue;
                        const YSeries &xs = X(sgn, j, s), &xs1 = X(sgn, j, s + 1);
                        // [h_{r+1}, x_s] - [h_r, x_{s+1}] = +-hbar d_ij (h_r x_s + x_s h_r)
                        YSeries d = comm(H(i, r + 1), xs) - comm(H(i, r), xs1) - (mul(H(i, r), xs) + mul(xs, H(i, r))).scaled(hd);
                        xh.record(Y_, mode_text("h", i, r) + mode_text(sgn > 0 ? " x+" : " x-", j, s), d, N_);
                        // [x_{i,r+1}, x_js] - [x_ir, x_{j,s+1}] = +-hbar d_ij (x_ir x_js + x_js x_ir)
                        const YSeries& xr = X(sgn, i, r);
                        YSeries e = comm(X(sgn, i, r + 1), xs) - comm(xr, xs1) - (mul(xr, xs) + mul(xs, xr)).scaled(hd);
                        xx.record(Y_, mode_text(sgn > 0 ? "x+" : "x-", i, r) + mode_text(sgn > 0 ? " x+" : " x-", j, s), e, N_);
                    }
            }
        }

    // Serre: sum over permutations of nested commutators, m = 1 - a_ij.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int m = 1 - L.cartan().a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int sgn : {1, -1}) {
                std::vector<int> rs(static_cast<std::size_t>(m), -K_);
                while (true) {
                    if (std::is_sorted(rs.begin(), rs.end()))
                        for (int s : modes) {
                            std::vector<int> perm = rs;
                            YSeries total(Truncation{cutoff_, HPoly::kNoTrunc});
                            do {
                                YSeries acc = X(sgn, j, s);
                                for (auto it = perm.rbegin(); it != perm.rend(); ++it) acc = comm(X(sgn, i, *it), acc);
                                total += acc;
                            } while (std::next_permutation(perm.begin(), perm.end()));
                            // Distinct orderings only: the full sum over S_m is a positive multiple.
                            std::string name = "serre i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + " modes";
                            for (int r : rs) name += " " + std::to_string(r);
                            name += " s=" + std::to_string(s);
                            serre.record(Y_, name, total, N_);
                        }
                    int p = 0;
                    while (p < m && rs[static_cast<std::size_t>(p)] == K_) rs[static_cast<std::size_t>(p++)] = -K_;
                    if (p == m) break;
                    ++rs[static_cast<std::size_t>(p)];
                }
            }
        }

    Report out{hh.done(), h0x.done(), xh.done(), xx.done(), xxh.done()};
    if (n > 1) out.push_back(serre.done());
    return out;
}

Report ShiftOperator::check_dual_identity(int i) const {
    const LieData& L = Y_.lie();
    if (i < 0 || i >= L.rank()) throw std::invalid_argument("node out of range");
    const Truncation tr{N_, HPoly::kNoTrunc};
    const std::string inst = L.cartan().name + " i=" + std::to_string(i + 1) + " N=" + std::to_string(N_);
    UniversalR R(Y_, RConfig{N_, HPoly::kNoTrunc, ZetaTarget::Ones, {}});
    Weight beta(static_cast<std::size_t>(L.rank()), 0);
    beta[static_cast<std::size_t>(i)] = 1;
    const TSeries& block = R.minus_block(beta);

    // x_i^+(z) = sum_m x^+_{i,m} z^{-m-1}
    YSeries xz(tr);
    for (int m = 0; m < N_; ++m) xz.add(-m - 1, Y_.gen(Y_.xplus(i, m)));
    TSeries closed(tr), viaphi(tr);
    for (int n = 0; n < N_; ++n) {
        YElement left(Mono{Y_.xminus(i, n)}, HPoly::monomial(1, 1));
        const YSeries dn = series_derive(xz, n);
        for (const auto& [k, c] : dn.coeffs()) closed.add(k, Y_.tensor({left, c}));
        YSeries phi = series_negate_var(image(Kind::XPlus, i, -n - 1, N_));
        for (const auto& [k, c] : phi.coeffs()) viaphi.add(k, Y_.tensor({left, -c}));
    }
    Report out;
    CheckResult a{"dual", inst + " recursion = divided-derivative form", true, first_difference(Y_, block, closed)};
    a.pass = a.first_discrepancy.empty();
    CheckResult b{"dual", inst + " divided-derivative form = -Phi_{-z} form", true, first_difference(Y_, closed, viaphi)};
    b.pass = b.first_discrepancy.empty();
    CheckResult c{"dual", inst + " left weight -a_i", true, ""};
    for (const auto& [k, coeff] : block.coeffs())
        for (const auto& [t, v] : coeff.terms()) {
            Weight w = Y_.weight(t[0]);
            for (int& x : w) x = -x;
            if (w != beta && c.pass) {
                c.pass = false;
                c.first_discrepancy = "z^" + std::to_string(k) + " at " + tkey_to_string(Y_, t);
            }
        }
    out.push_back(a);
    out.push_back(b);
    out.push_back(c);
    return out;
}

CheckResult ShiftOperator::check_grading() const {
    const LieData& L = Y_.lie();
    CheckResult res{"grading", L.cartan().name + " N=" + std::to_string(N_), true, ""};
    for (Kind kind : {Kind::XPlus, Kind::H, Kind::XMinus}) {
        const int count = kind == Kind::H ? L.rank() : L.num_pos_roots();
        for (int a = 0; a < count; ++a)
            for (int r = -K_ - 1; r <= K_ + 1; ++r)
                for (const auto& [m, c] : image(kind, a, r).coeffs())
                    for (const auto& [mono, v] : c.terms())
                        for (const auto& [e, q] : v.terms())
                            if (Y_.degree(mono) + e != r - m && res.pass) {
                                res.pass = false;
                                res.first_discrepancy = "mode " + std::to_string(r) + " z^" + std::to_string(m) + " at " + Y_.mono_to_string(mono);
                            }
    }
    return res;
}

CheckResult ShiftOperator::check_injectivity() const {
    const LieData& L = Y_.lie();
    CheckResult res{"injectivity", L.cartan().name + " N=" + std::to_string(N_), true, ""};
    std::vector<std::tuple<Kind, int, int>> gens;
    for (Kind kind : {Kind::XPlus, Kind::H, Kind::XMinus}) {
        for (int a = 0; a < L.rank(); ++a)
            for (int r = -1; r <= 1; ++r) gens.emplace_back(kind, a, r);
    }
    const int C = N_ + 2;
    auto eval_classical = [](const YSeries& s) {
        YElement out;
        for (const auto& [k, c] : s.coeffs())
            for (const auto& [m, v] : c.terms()) out.add(m, HPoly(v.coeff(0)));
        return out;
    };
    std::vector<YSeries> imgs;
    for (const auto& [kind, a, r] : gens) imgs.push_back(image(kind, a, r, C));
    std::vector<YElement> rows;
    rows.push_back(Y_.one());
    for (std::size_t p = 0; p < imgs.size(); ++p) {
        rows.push_back(eval_classical(imgs[p]));
        for (std::size_t q = p; q < imgs.size(); ++q) rows.push_back(eval_classical(mul(imgs[p], imgs[q])));
    }
    std::map<Mono, int> cols;
    for (const YElement& e : rows)
        for (const auto& [m, v] : e.terms()) cols.emplace(m, 0);
    int idx = 0;
    for (auto& [m, c] : cols) c = idx++;
    Echelon ech(idx);
    int rank = 0;
    for (const YElement& e : rows) {
        std::vector<std::pair<int, Rational>> v;
        for (const auto& [m, c] : e.terms()) v.emplace_back(cols[m], c.coeff(0));
        if (ech.insert(make_sparse(std::move(v)))) ++rank;
    }
    if (rank != static_cast<int>(rows.size())) {
        res.pass = false;
        res.first_discrepancy = "rank " + std::to_string(rank) + " < " + std::to_string(rows.size()) + " sampled monomials";
    }
    res.instance += " (" + std::to_string(rows.size()) + " monomials)";
    return res;
}

const std::vector<std::string>& shift_check_names() {
    static const std::vector<std::string> names{"relations", "dual", "grading", "injectivity"};
    return names;
}

Report run_shift_checks(const ShiftOperator& S, const std::vector<std::string>& names) {
    Report out;
    for (const std::string& n : names) {
        if (n == "relations") {
            Report r = S.check_double_relations();
            out.insert(out.end(), r.begin(), r.end());
        } else if (n == "dual") {
            for (int i = 0; i < S.yangian().rank(); ++i) {
                Report r = S.check_dual_identity(i);
                out.insert(out.end(), r.begin(), r.end());
            }
        } else if (n == "grading") {
            out.push_back(S.check_grading());
        } else if (n == "injectivity") {
            out.push_back(S.check_injectivity());
        } else {
            throw std::invalid_argument("unknown shift check '" + n + "'");
        }
    }
    return out;
}

}  // namespace yrm
