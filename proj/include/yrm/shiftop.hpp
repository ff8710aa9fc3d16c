/**
 * @file shiftop.hpp
 * @brief The formal shift operator Phi_z on Yangian-double generators of arbitrary integer
 *        mode, and checks of the double relations and the dual-generator identity.
 *
 * Nonnegative modes map to tau_z images (polynomials in z). A mode -k-1 maps to
 * (-1)^{k+1} d_z^{(k)} of x(-z), i.e. sum_m (-1)^m binom(m+k, k) x_m z^{-m-k-1}.
 */
#pragma once

#include "yrm/report.hpp"
#include "yrm/yangian.hpp"

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace yrm {

using YSeries = ZSeries<YElement>;

/// Sign corruptions of the negative-mode images.
struct ShiftFault {
    enum class Type {
        FlipXPlus,   ///< negate Phi(x^+_{i,-1})
        FlipH,       ///< negate Phi(h_{i,-1})
        ChainRule,   ///< read d^{(k)} x(-z) as (d^{(k)} x)(-z), an extra (-1)^k
    };
    Type type = Type::FlipXPlus;

    /// "phi-sign:x+", "phi-sign:h", "phi-chain".
    static ShiftFault parse(const std::string& spec);
    std::string to_string() const;
};

/**
 * @brief Phi_z images truncated at a z-cutoff, with relation and identity checks.
 */
class ShiftOperator {
public:
    /// Checks compare through z^{-N}; the mode window is [-K, K] (K < 0 selects N - 1).
    ShiftOperator(Yangian Y, int N, int K = -1, std::vector<ShiftFault> faults = {});

    const Yangian& yangian() const { return Y_; }
    int order() const { return N_; }
    int window() const { return K_; }

    /// Phi_z(g) for g of the given kind, root/node index a and integer mode r, truncated at z^{-cutoff}.
    YSeries image(Kind kind, int a, int r, int cutoff) const;
    /// Same, with the cutoff used by the relation checks.
    const YSeries& image(Kind kind, int a, int r) const;

    /// Every defining relation (hh, h0x, xh, xx, xxh, Serre) with all modes in [-K, K]; one result per family.
    Report check_double_relations() const;
    /// R^-_{a_i}(z) = sum_n hbar x^-_{i,n} (x) d^{(n)} x_i^+(z) = -sum_n hbar x^-_{i,n} (x) Phi_{-z}(x^+_{i,-n-1}).
    Report check_dual_identity(int i) const;
    /// The z^m coefficient of the image of a mode-r generator has degree r - m.
    CheckResult check_grading() const;
    /// Images of ordered monomials of length <= 2 in generators with modes in [-1, 1], evaluated at z = 1 mod hbar, are independent.
    CheckResult check_injectivity() const;

private:
    Yangian Y_;
    int N_;
    int K_;
    int cutoff_;
    std::vector<ShiftFault> faults_;
    mutable std::map<std::tuple<int, int, int>, YSeries> cache_;

    YSeries mul(const YSeries& a, const YSeries& b) const;
};

/// Names accepted by run_shift_checks: "relations", "dual", "grading", "injectivity".
const std::vector<std::string>& shift_check_names();
Report run_shift_checks(const ShiftOperator& S, const std::vector<std::string>& names);

}  // namespace yrm
