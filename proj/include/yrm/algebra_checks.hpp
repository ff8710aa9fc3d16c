/**
 * @file algebra_checks.hpp
 * @brief Report-producing checks on the Yangian itself: Hopf axioms, PBW slice census
 *        and q-number positivity.
 */
#pragma once

#include "yrm/report.hpp"
#include "yrm/yangian.hpp"

#include <random>
#include <string>
#include <vector>

namespace yrm {

/// Random element of degree <= maxdeg: `terms` normal-ordered random words of length <= maxlen.
YElement random_element(const Yangian& Y, std::mt19937& rng, int maxdeg, int terms = 2, int maxlen = 3);

/// Coassociativity, both counit laws and both antipode laws on one element; empty string if all hold.
std::string hopf_discrepancy(const Yangian& Y, const YElement& x);

/// Hopf axioms on every generator of mode <= maxdeg plus `random_count` random elements of degree <= maxdeg.
CheckResult check_hopf(const Yangian& Y, int maxdeg = 3, int random_count = 50, unsigned seed = 1);

/// columns - rank = PBW count in every slice of Y^+ with height and degree <= maxdeg.
CheckResult check_census(const Yangian& Y, int maxdeg);

/// C(v) exists with entries in N[v, v^-1] and C B = [2 kappa]_v Id.
CheckResult check_qnum(const LieData& lie);

/// Names accepted by run_algebra_checks: "hopf", "census", "qnum".
const std::vector<std::string>& algebra_check_names();
/// Census degree bound is `census_degree`.
Report run_algebra_checks(const Yangian& Y, const std::vector<std::string>& names, int census_degree);

}  // namespace yrm
