/**
 * @file test_shiftop.cpp
 * @brief Tests of the shift operator on negative modes and the double relations.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yrm/shiftop.hpp"

using namespace yrm;

namespace {

Yangian make(const std::string& type) { return Yangian(LieData::build(CartanDatum::named(type))); }

void require_all(const Report& r) {
    for (const auto& c : r) CHECK_MESSAGE(c.pass, c.check << " " << c.instance << ": " << c.first_discrepancy);
}

bool any_fail(const Report& r) { return !all_pass(r); }

}  // namespace

TEST_CASE("negative-mode images have the binomial closed form") {
    Yangian Y = make("A1");
    ShiftOperator S(Y, 3);
    // Phi(x_{-2}) = sum_m (-1)^m (m+1) x_m z^{-m-2}
    YSeries img = S.image(Kind::XPlus, 0, -2, 4);
    CHECK(img.coeff(-2) == Y.gen(Y.xplus(0, 0)));
    CHECK(img.coeff(-3) == Y.gen(Y.xplus(0, 1)) * HPoly(-2));
    CHECK(img.coeff(-4) == Y.gen(Y.xplus(0, 2)) * HPoly(3));
    CHECK(img.coeff(-1).is_zero());
    // Nonnegative modes are polynomial in z.
    YSeries pos = S.image(Kind::H, 0, 1, 4);
    CHECK(pos.coeff(1) == Y.gen(Y.h(0, 0)));
    CHECK(pos.coeff(0) == Y.gen(Y.h(0, 1)));
}

TEST_CASE("A1 double relations with modes in [-2, 2]") {
    ShiftOperator S(make("A1"), 3);
    CHECK(S.window() == 2);
    Report r = S.check_double_relations();
    CHECK(r.size() == 5);
    require_all(r);
}

TEST_CASE("A2 double relations including Serre") {
    ShiftOperator S(make("A2"), 2);
    Report r = S.check_double_relations();
    CHECK(r.size() == 6);
    require_all(r);
}

TEST_CASE("dual identity, grading and injectivity") {
    for (const std::string type : {"A1", "A2", "B2"}) {
        ShiftOperator S(make(type), type == "A1" ? 4 : 2);
        require_all(run_shift_checks(S, {"dual", "grading", "injectivity"}));
    }
}

TEST_CASE("every sign fault breaks a relation") {
    for (const std::string spec : {"phi-sign:x+", "phi-sign:h", "phi-chain"}) {
        ShiftOperator S(make("A1"), 3, -1, {ShiftFault::parse(spec)});
        CHECK_MESSAGE(any_fail(S.check_double_relations()), spec);
        CHECK(ShiftFault::parse(spec).to_string() == spec);
    }
    CHECK_THROWS_AS(ShiftFault::parse("phi-sign:x-"), std::invalid_argument);
    CHECK_THROWS_AS(ShiftOperator(make("A1"), 0), std::invalid_argument);
}
