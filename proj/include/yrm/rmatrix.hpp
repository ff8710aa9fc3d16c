/**
 * @file rmatrix.hpp
 * @brief Gauss factors R^-(z), R^0(z), R^+(z) of the universal R-matrix of Y_h(g), their
 *        product R(z), and exact verifiers for the identities they satisfy.
 *
 * All series are truncated at z^{-N}. Coefficients live in the tensor square
 * (or cube) of the Yangian and are kept in PBW normal form.
 */
#pragma once

#include "yrm/report.hpp"
#include "yrm/yangian.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace yrm {

using TSeries = ZSeries<YTensor>;

enum class FactorKind { Minus, Zero, Plus, Full };

std::string factor_name(FactorKind k);
/// Parses "minus", "zero", "plus" or "full".
FactorKind parse_factor(const std::string& s);

/// Truncated coefficients of a factor; `blocks` is filled for R^- (by right weight) and R^+ (by left weight).
struct RFactor {
    FactorKind kind = FactorKind::Full;
    int N = 0;
    TSeries series;
    std::map<Weight, TSeries> blocks;
};

/// g_1..g_N of the solution of -z^{-2} = g(z+1) - g(z) in z^{-1}Q[[z^{-1}]]; index k-1 holds g_k.
std::vector<Rational> g_series(int N);

enum class ZetaTarget { Ones, Ramp };
ZetaTarget parse_zeta(const std::string& s);
std::string zeta_name(ZetaTarget z);

/// Deliberate corruptions used to show that the verifiers can fail.
struct Fault {
    enum class Type { DropBlock, FlipSign, PerturbG };
    Type type = Type::DropBlock;
    Weight beta;   ///< DropBlock
    int root = -1; ///< FlipSign: 0-based root index
    int k = 0;     ///< PerturbG: 1-based index of g_k

    /// "drop-block:2a" (rank one), "drop-block:(1,1)", "flip-sign:(1,1)", "flip-sign:3", "perturb-g:2".
    static Fault parse(const std::string& spec, const LieData& lie);
    std::string to_string() const;
};

/// Lie data with every FlipSign fault applied.
LieData apply_lie_faults(const LieData& lie, const std::vector<Fault>& faults);

struct RConfig {
    int N = 0;
    int hbar_order = HPoly::kNoTrunc;
    ZetaTarget zeta = ZetaTarget::Ones;
    std::vector<Fault> faults;
};

/**
 * @brief Lazily computes and memoizes the factors for one Yangian and one configuration.
 */
class UniversalR {
public:
    UniversalR(Yangian Y, RConfig cfg);

    const Yangian& yangian() const { return Y_; }
    const RConfig& config() const { return cfg_; }
    Truncation truncation() const { return {cfg_.N, cfg_.hbar_order}; }

    /// Coefficients c with T(zeta) = sum_i c_i t_{i1} and alpha_j(zeta) equal to the target.
    const std::vector<Rational>& zeta_coeffs() const { return zeta_; }
    /// beta(zeta).
    Rational beta_zeta(const Weight& beta) const;

    /// Positive-cone weights with nu(beta) <= N, ordered by height then lexicographically.
    std::vector<Weight> block_weights() const;

    /// R^-_beta(z); zero when nu(beta) > N.
    const TSeries& minus_block(const Weight& beta);
    const RFactor& minus();
    /// log R^0(z), the solution S(z) of the difference equation.
    const TSeries& log_zero();
    const RFactor& zero();
    /// L(z), whose exponential A(z) satisfies R^0(z + 2 kappa hbar) = A(z) R^0(z).
    const TSeries& log_A();
    const RFactor& plus();
    const RFactor& full();
    const RFactor& factor(FactorKind k);

    /// Tensor-square product preserving factor order.
    TSeries mul(const TSeries& a, const TSeries& b) const;
    TSeries one() const;

private:
    struct Cache;
    Yangian Y_;
    RConfig cfg_;
    std::vector<Rational> zeta_;
    std::vector<Rational> g_;
    std::shared_ptr<Cache> cache_;

    TSeries cartan_pipeline(const TSeries& seed, bool divide);
};

// ---------------------------------------------------------------------------
// Series utilities on tensors.

/// Leg flip of every coefficient of an arity-2 series.
TSeries flip_legs(const Yangian& Y, const TSeries& a);
/// Applies f to every tensor coefficient.
TSeries map_coeffs(const TSeries& a, const std::function<YTensor(const YTensor&)>& f);
/// First differing (z power, tensor key) of two series through z^{-N}; empty if equal.
std::string first_difference(const Yangian& Y, const TSeries& a, const TSeries& b);
std::string tkey_to_string(const Yangian& Y, const TKey& t);
/// Splits the nonconstant part of a series by the weight of one leg (negated on request); weight zero is skipped.
std::map<Weight, TSeries> split_by_weight(const Yangian& Y, const TSeries& s, int leg, bool negate);

// ---------------------------------------------------------------------------
// Verifiers. Each returns one CheckResult per instance; failures are reported, not thrown.

/// R(z) R_21(-z) = 1.
CheckResult verify_unitarity(UniversalR& R);
/// tau_z (x) id (Delta^op x) R(z) = R(z) tau_z (x) id (Delta x) through z^{-N}, with R computed at N+1.
Report verify_intertwiner(UniversalR& R);
/// (Delta (x) id)R = R_13 R_23 and (id (x) Delta)R = R_13 R_12.
Report verify_cabling(UniversalR& R);
/// (R - 1)/hbar mod hbar equals the expansion of Omega/(z + t - w).
CheckResult verify_semiclassical(UniversalR& R);
/// R^- for the two zeta targets agree exactly.
CheckResult verify_zeta_independence(UniversalR& R);
/// (omega (x) omega)R = R, (omega (x) omega)R^+- = R^-+, (varsigma (x) varsigma)R = R_21.
Report verify_chevalley(UniversalR& R);
/// hbar^{nu(beta)} per weight block of R^+-, and Drinfeld-Gavarini divisibility on both legs of every factor.
Report verify_divisibility(UniversalR& R);
/// R^0(z + 2 kappa hbar) = exp(L(z)) R^0(z).
CheckResult verify_difference_equation(UniversalR& R);
/// The z^{-n} coefficient of every factor is homogeneous of degree n; weight balance.
Report verify_homogeneity(UniversalR& R);
/// (tau_a (x) tau_b) R(z) = R(z + a - b) for a sample of rational a, b.
CheckResult verify_shift(UniversalR& R);

/// Names accepted by run_checks.
const std::vector<std::string>& rmatrix_check_names();
/// Runs the named checks ("unitarity", "intertwiner", ...).
Report run_rmatrix_checks(UniversalR& R, const std::vector<std::string>& names);

}  // namespace yrm
