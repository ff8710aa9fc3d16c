/**
 * @file test_qnum.cpp
 * @brief Laurent polynomials, q-integers and C(v) = [2 kappa]_v B(v)^{-1}.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yrm/qnum.hpp"

using namespace yrm;

namespace {

LaurentPoly v(int k) { return LaurentPoly::monomial(1, k); }

}  // namespace

TEST_CASE("q-integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == LaurentPoly(1));
    CHECK(qint(2) == v(1) + v(-1));
    CHECK(qint(3) == v(2) + LaurentPoly(1) + v(-2));
    CHECK(qint(-2) == -qint(2));
    // [m]_v (v - v^-1) = v^m - v^-m
    for (int m = -5; m <= 5; ++m) CHECK(qint(m) * (v(1) - v(-1)) == v(m) - v(-m));
    CHECK(qint(2).to_string() == "v + v^-1");
}

TEST_CASE("Laurent division") {
    LaurentPoly a = qint(6);
    // [6] = [2] (v^4 + 1 + v^-4)
    CHECK(a.divided_exactly(qint(2)) == v(4) + LaurentPoly(1) + v(-4));
    CHECK(qint(6).divided_exactly(qint(3)) == v(3) + v(-3));
    CHECK_THROWS_AS(qint(3).divided_exactly(qint(2)), std::domain_error);
}

TEST_CASE("C(v) for A1 and A2 against hand-computed adjugates") {
    auto A1 = CartanDatum::named("A1");
    auto q1 = qnum_C(A1, LieData::build(A1).kappa());
    CHECK(q1.C[0][0] == LaurentPoly(1));

    auto A2 = CartanDatum::named("A2");
    auto q2 = qnum_C(A2, LieData::build(A2).kappa());
    CHECK(qdet(q2.B) == qint(3));
    CHECK(q2.C[0][0] == qint(2));
    CHECK(q2.C[0][1] == LaurentPoly(1));
    CHECK(q2.C[1][0] == LaurentPoly(1));
    CHECK(q2.C[1][1] == qint(2));
}

TEST_CASE("C(v) positivity, bar symmetry and C B = [2 kappa] Id") {
    for (const char* name : {"A1", "A2", "A3", "B2", "G2"}) {
        INFO(name);
        auto c = CartanDatum::named(name);
        auto q = qnum_C(c, LieData::build(c).kappa());
        auto CB = qmat_mul(q.C, q.B);
        for (std::size_t i = 0; i < CB.size(); ++i)
            for (std::size_t j = 0; j < CB.size(); ++j) {
                CHECK(CB[i][j] == (i == j ? q.two_kappa : LaurentPoly()));
                CHECK(q.C[i][j].in_natural_span());
                CHECK(q.C[i][j].bar() == q.C[i][j]);
            }
    }
}

TEST_CASE("wrong kappa is rejected") {
    auto A2 = CartanDatum::named("A2");
    CHECK_THROWS_AS(qnum_C(A2, Rational(1)), std::logic_error);
    CHECK_THROWS_AS(qnum_C(A2, frac(1, 4)), std::logic_error);
}
