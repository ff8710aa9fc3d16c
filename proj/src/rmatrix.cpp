/**
 * @file rmatrix.cpp
 * @brief Construction of the Gauss factors R^-, R^0, R^+ and their product.
 */
#include "yrm/rmatrix.hpp"

#include "yrm/linalg.hpp"
#include "yrm/qnum.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace yrm {

std::string factor_name(FactorKind k) {
    switch (k) {
        case FactorKind::Minus: return "minus";
        case FactorKind::Zero: return "zero";
        case FactorKind::Plus: return "plus";
        case FactorKind::Full: return "full";
    }
    return "full";
}

FactorKind parse_factor(const std::string& s) {
    if (s == "minus") return FactorKind::Minus;
    if (s == "zero") return FactorKind::Zero;
    if (s == "plus") return FactorKind::Plus;
    if (s == "full") return FactorKind::Full;
    throw std::invalid_argument("unknown factor '" + s + "' (expected minus, zero, plus or full)");
}

ZetaTarget parse_zeta(const std::string& s) {
    if (s == "ones") return ZetaTarget::Ones;
    if (s == "ramp") return ZetaTarget::Ramp;
    throw std::invalid_argument("unknown zeta target '" + s + "' (expected ones or ramp)");
}

std::string zeta_name(ZetaTarget z) { return z == ZetaTarget::Ones ? "ones" : "ramp"; }

std::vector<Rational> g_series(int N) {
    if (N < 0) throw std::invalid_argument("g_series: negative order");
    // z^{-m} coefficient of g(z+1) - g(z): sum_{k<m} g_k binom(-k, m-k) = -[m == 2].
    std::vector<Rational> g;
    for (int m = 2; m <= N + 1; ++m) {
        Rational rhs = (m == 2) ? Rational(-1) : Rational(0);
        for (int k = 1; k < m - 1; ++k) rhs -= g[static_cast<std::size_t>(k - 1)] * binom(-k, m - k);
        // The unknown g_{m-1} enters with binom(-(m-1), 1) = -(m-1).
        g.push_back(rhs / Rational(-(m - 1)));
    }
    return g;
}

// ---------------------------------------------------------------------------
// Faults

namespace {

Weight parse_weight_text(std::string s, int rank) {
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }), s.end());
    if (rank == 1 && !s.empty() && (s.back() == 'a')) {
        std::string n = s.substr(0, s.size() - 1);
        return Weight{n.empty() ? 1 : std::stoi(n)};
    }
    Weight w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(std::stoi(item));
    if (static_cast<int>(w.size()) != rank) throw std::invalid_argument("weight '" + s + "' has wrong length");
    return w;
}

}  // namespace

Fault Fault::parse(const std::string& spec, const LieData& lie) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("fault spec needs 'kind:argument': " + spec);
    std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
    Fault f;
    try {
        if (kind == "drop-block") {
            f.type = Type::DropBlock;
            f.beta = parse_weight_text(arg, lie.rank());
        } else if (kind == "flip-sign") {
            f.type = Type::FlipSign;
            if (arg.find(',') != std::string::npos || arg.find('(') != std::string::npos || arg.back() == 'a')
                f.root = lie.root_index(parse_weight_text(arg, lie.rank()));
            else
                f.root = std::stoi(arg) - 1;
            if (f.root < lie.rank() || f.root >= lie.num_pos_roots())
                throw std::invalid_argument("flip-sign needs a non-simple positive root");
        } else if (kind == "perturb-g") {
            f.type = Type::PerturbG;
            f.k = std::stoi(arg);
            if (f.k < 1) throw std::invalid_argument("perturb-g index must be >= 1");
        } else {
            throw std::invalid_argument("unknown fault kind '" + kind + "'");
        }
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("bad fault spec '" + spec + "': " + e.what());
    }
    return f;
}

std::string Fault::to_string() const {
    switch (type) {
        case Type::DropBlock: return "drop-block:" + weight_to_string(beta);
        case Type::FlipSign: return "flip-sign:" + std::to_string(root + 1);
        case Type::PerturbG: return "perturb-g:" + std::to_string(k);
    }
    return "";
}

LieData apply_lie_faults(const LieData& lie, const std::vector<Fault>& faults) {
    LieData out = lie;
    for (const Fault& f : faults)
        if (f.type == Fault::Type::FlipSign) out = out.with_flipped_chain_sign(f.root);
    return out;
}

// ---------------------------------------------------------------------------
// Series utilities

TSeries flip_legs(const Yangian& Y, const TSeries& a) {
    return a.map([&Y](const YTensor& t) { return Y.permute(t, {1, 0}); });
}

TSeries map_coeffs(const TSeries& a, const std::function<YTensor(const YTensor&)>& f) {
    return a.map([&f](const YTensor& t) { return f(t); });
}

std::string tkey_to_string(const Yangian& Y, const TKey& t) {
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) out += " (x) ";
        out += Y.mono_to_string(t[k]);
    }
    return out;
}

std::string first_difference(const Yangian& Y, const TSeries& a, const TSeries& b) {
    std::set<int> exps;
    for (const auto& [k, c] : a.coeffs()) exps.insert(k);
    for (const auto& [k, c] : b.coeffs()) exps.insert(k);
    const int low = std::max(a.low(), b.low());
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (*it < low) break;
        YTensor d = a.coeff(*it) - b.coeff(*it);
        if (d.is_zero()) continue;
        const auto& [key, c] = *d.terms().begin();
        return "z^" + std::to_string(*it) + " at " + tkey_to_string(Y, key) + ": difference " + c.to_string();
    }
    return "";
}

// ---------------------------------------------------------------------------
// UniversalR

struct UniversalR::Cache {
    std::map<Weight, TSeries> minus_blocks;
    std::optional<RFactor> minus, zero, plus, full;
    std::optional<TSeries> log_zero, log_A;
};

namespace {

std::vector<Rational> solve_zeta(const LieData& lie, ZetaTarget target) {
    const int n = lie.rank();
    std::vector<Rational> t(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        if (target == ZetaTarget::Ones) t[static_cast<std::size_t>(j)] = 1;
        // With a single node the ramp (1) would coincide with the default target.
        else t[static_cast<std::size_t>(j)] = (n == 1) ? 2 : j + 1;
    }
    // alpha_j(zeta) = sum_i c_i B_ij, and B is symmetric.
    auto Binv = invert_dense(lie.cartan().B_matrix());
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i)] += Binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(j)];
    return c;
}

bool is_zero_weight(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

int height_of(const Weight& w) {
    int h = 0;
    for (int x : w) h += x;
    return h;
}

}  // namespace

std::map<Weight, TSeries> split_by_weight(const Yangian& Y, const TSeries& s, int leg, bool negate) {
    std::map<Weight, TSeries> out;
    for (const auto& [k, c] : s.coeffs()) {
        std::map<Weight, YTensor> parts;
        for (const auto& [t, ct] : c.terms()) {
            Weight w = Y.weight(t[static_cast<std::size_t>(leg)]);
            if (negate)
                for (int& x : w) x = -x;
            parts[w].add(t, ct);
        }
        for (auto& [w, p] : parts) {
            if (is_zero_weight(w)) continue;
            auto it = out.find(w);
            if (it == out.end()) it = out.emplace(w, TSeries(s.truncation())).first;
            it->second.add(k, p);
        }
    }
    return out;
}

UniversalR::UniversalR(Yangian Y, RConfig cfg)
    : Y_(std::move(Y)), cfg_(std::move(cfg)), cache_(std::make_shared<Cache>()) {
    if (cfg_.N < 0) throw std::invalid_argument("truncation order must be >= 0");
    zeta_ = solve_zeta(Y_.lie(), cfg_.zeta);
    for (const Weight& b : block_weights())
        if (beta_zeta(b) == 0) throw std::invalid_argument("zeta is not regular: beta(zeta) = 0 for " + weight_to_string(b));
    g_ = g_series(cfg_.N);
    for (const Fault& f : cfg_.faults)
        if (f.type == Fault::Type::PerturbG && f.k <= static_cast<int>(g_.size())) g_[static_cast<std::size_t>(f.k - 1)] += 1;
}

Rational UniversalR::beta_zeta(const Weight& beta) const {
    const LieData& L = Y_.lie();
    Rational v = 0;
    for (int i = 0; i < L.rank(); ++i) v += zeta_[static_cast<std::size_t>(i)] * L.root_value(beta, i);
    return v;
}

std::vector<Weight> UniversalR::block_weights() const {
    const LieData& L = Y_.lie();
    std::set<Weight> level{Weight(static_cast<std::size_t>(L.rank()), 0)}, all;
    for (int k = 1; k <= cfg_.N; ++k) {
        std::set<Weight> next;
        for (const Weight& w : level)
            for (const Weight& r : L.positive_roots()) {
                Weight s = w;
                for (std::size_t q = 0; q < s.size(); ++q) s[q] += r[q];
                next.insert(s);
            }
        all.insert(next.begin(), next.end());
        level = std::move(next);
    }
    std::vector<Weight> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return height_of(a) < height_of(b); });
    return out;
}

TSeries UniversalR::mul(const TSeries& a, const TSeries& b) const {
    return series_mul(a, b, [this](const YTensor& x, const YTensor& y) { return Y_.tmul(x, y); });
}

TSeries UniversalR::one() const { return TSeries(truncation(), YTensor(TKey{Mono{}, Mono{}}, HPoly(1))); }

const TSeries& UniversalR::minus_block(const Weight& beta) {
    auto it = cache_->minus_blocks.find(beta);
    if (it != cache_->minus_blocks.end()) return it->second;
    const LieData& L = Y_.lie();
    const Truncation tr = truncation();
    if (is_zero_weight(beta)) return cache_->minus_blocks.emplace(beta, one()).first->second;
    const int nu = L.nu(beta);
    if (nu == INT_MAX || nu > cfg_.N) return cache_->minus_blocks.emplace(beta, TSeries(tr)).first->second;

    // X(z) = sum_alpha alpha(zeta) R^-_{beta-alpha}(z) (x_alpha^- (x) x_alpha^+)
    TSeries X(tr);
    for (int a = 0; a < L.num_pos_roots(); ++a) {
        Weight rest = beta;
        bool ok = true;
        for (std::size_t q = 0; q < rest.size(); ++q) {
            rest[q] -= L.root(a)[q];
            if (rest[q] < 0) ok = false;
        }
        if (!ok) continue;
        const TSeries& lower = minus_block(rest);
        if (lower.is_zero()) continue;
        const Rational av = beta_zeta(L.root(a));
        YTensor pair(TKey{Mono{Y_.xminus(a, 0)}, Mono{Y_.xplus(a, 0)}}, HPoly(av));
        for (const auto& [k, c] : lower.coeffs()) X.add(k, Y_.tmul(c, pair));
    }

    // R^-_beta = hbar sum_p T^p X / (z beta(zeta))^{p+1}
    const Rational bz = beta_zeta(beta);
    const YElement T = Y_.cartan_T(zeta_);
    TSeries out(tr);
    for (const auto& [k, c] : X.coeffs()) {
        YTensor cur = c;
        Rational scale = 1 / bz;
        for (int p = 0; k - p - 1 >= -cfg_.N; ++p) {
            out.add(k - p - 1, cur * HPoly::monomial(scale, 1));
            if (k - p - 2 < -cfg_.N) break;
            cur = Y_.adjoint(T, cur);
            if (cfg_.hbar_order != HPoly::kNoTrunc) cur = drop_hbar_from(cur, cfg_.hbar_order);
            scale /= bz;
        }
    }
    return cache_->minus_blocks.emplace(beta, std::move(out)).first->second;
}

const RFactor& UniversalR::minus() {
    if (cache_->minus) return *cache_->minus;
    RFactor f;
    f.kind = FactorKind::Minus;
    f.N = cfg_.N;
    f.series = one();
    for (const Weight& b : block_weights()) {
        bool dropped = false;
        for (const Fault& ft : cfg_.faults)
            if (ft.type == Fault::Type::DropBlock && ft.beta == b) dropped = true;
        const TSeries& blk = minus_block(b);
        if (dropped || blk.is_zero()) continue;
        f.blocks.emplace(b, blk);
        f.series += blk;
    }
    cache_->minus = std::move(f);
    return *cache_->minus;
}

TSeries UniversalR::cartan_pipeline(const TSeries& seed, bool divide) {
    const LieData& L = Y_.lie();
    const int n = L.rank();
    const int N = cfg_.N;
    const Truncation full{N, HPoly::kNoTrunc};
    QNumMatrix q = qnum_C(L.cartan(), L.kappa());
    const Rational two_kappa = 2 * L.kappa();
    TSeries seed_full = seed.retruncated(full);

    std::vector<std::vector<YElement>> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < N; ++r) t[static_cast<std::size_t>(i)].push_back(Y_.derived_t(i, r));

    // Divided derivatives of the seed.
    std::vector<TSeries> dseed;
    for (int m = 0; m < N; ++m) dseed.push_back(series_derive(seed_full, m));

    TSeries total(full);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const LaurentPoly& cij = q.C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (cij.is_zero()) continue;
            // B_i(d) (x) B_j(-d) = hbar^2 sum_{r,s} (-1)^s binom(r+s, r) t_ir (x) t_js d^{(r+s)}
            TSeries D(full);
            for (int r = 0; r < N; ++r)
                for (int s = 0; r + s < N; ++s) {
                    YTensor ts = Y_.tensor({t[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)],
                                            t[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]});
                    HPoly coeff = HPoly::monomial(binom(r + s, r) * Rational(sign_pow(s)), 2);
                    for (const auto& [k, c] : dseed[static_cast<std::size_t>(r + s)].coeffs()) {
                        // Seed coefficients are scalar multiples of the identity tensor.
                        HPoly scal = c.coeff(TKey{Mono{}, Mono{}});
                        D.add(k, ts * (coeff * scal));
                    }
                }
            // T^{2 kappa} c_ij(T): T^e shifts z by e hbar/2.
            for (const auto& [e, ce] : cij.terms()) total += series_shift(D, two_kappa + Rational(e)).scaled(HPoly(ce));
        }
    if (divide) {
        total = total.map([](const YTensor& c) {
            YTensor out;
            for (const auto& [k, v] : c.terms()) out.add(k, v.divided_by_hbar_pow(2));
            return out;
        });
        total = total.scaled(HPoly(1 / (two_kappa * two_kappa)));
    }
    return total;
}

const TSeries& UniversalR::log_zero() {
    if (cache_->log_zero) return *cache_->log_zero;
    const Rational two_kappa = 2 * Y_.lie().kappa();
    // g(z / 2 kappa hbar) = sum_k g_k (2 kappa hbar)^k z^{-k}
    TSeries seed(Truncation{cfg_.N, HPoly::kNoTrunc});
    for (int k = 1; k <= cfg_.N; ++k)
        seed.add(-k, YTensor(TKey{Mono{}, Mono{}}, HPoly::monomial(g_[static_cast<std::size_t>(k - 1)] * pow(two_kappa, k), k)));
    cache_->log_zero = cartan_pipeline(seed, true).retruncated(truncation());
    return *cache_->log_zero;
}

const TSeries& UniversalR::log_A() {
    if (cache_->log_A) return *cache_->log_A;
    TSeries seed(Truncation{cfg_.N, HPoly::kNoTrunc});
    seed.add(-2, YTensor(TKey{Mono{}, Mono{}}, HPoly(-1)));
    cache_->log_A = cartan_pipeline(seed, false).retruncated(truncation());
    return *cache_->log_A;
}

const RFactor& UniversalR::zero() {
    if (cache_->zero) return *cache_->zero;
    RFactor f;
    f.kind = FactorKind::Zero;
    f.N = cfg_.N;
    YTensor id(TKey{Mono{}, Mono{}}, HPoly(1));
    f.series = series_exp(log_zero(), id, [this](const YTensor& x, const YTensor& y) { return Y_.tmul(x, y); });
    cache_->zero = std::move(f);
    return *cache_->zero;
}

const RFactor& UniversalR::plus() {
    if (cache_->plus) return *cache_->plus;
    RFactor f;
    f.kind = FactorKind::Plus;
    f.N = cfg_.N;
    TSeries flipped = series_negate_var(flip_legs(Y_, minus().series));
    YTensor id(TKey{Mono{}, Mono{}}, HPoly(1));
    f.series = series_invert(flipped, id, [this](const YTensor& x, const YTensor& y) { return Y_.tmul(x, y); });
    f.blocks = split_by_weight(Y_, f.series, 0, false);
    cache_->plus = std::move(f);
    return *cache_->plus;
}

const RFactor& UniversalR::full() {
    if (cache_->full) return *cache_->full;
    RFactor f;
    f.kind = FactorKind::Full;
    f.N = cfg_.N;
    f.series = mul(mul(plus().series, zero().series), minus().series);
    cache_->full = std::move(f);
    return *cache_->full;
}

const RFactor& UniversalR::factor(FactorKind k) {
    switch (k) {
        case FactorKind::Minus: return minus();
        case FactorKind::Zero: return zero();
        case FactorKind::Plus: return plus();
        case FactorKind::Full: return full();
    }
    return full();
}

}  // namespace yrm
