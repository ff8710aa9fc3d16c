/**
 * @file test_scalars.cpp
 * @brief Rationals, hbar polynomials and truncated Laurent series.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yrm/hpoly.hpp"
#include "yrm/lincomb.hpp"
#include "yrm/series.hpp"

#include <random>
#include <string>

using namespace yrm;

namespace {

using Z = ZSeries<HPoly>;

/// Noncommuting test coefficients: words over {a, b} with HPoly coefficients.
using NC = LinComb<std::string>;

NC nc(const std::string& w, const HPoly& c = HPoly(1)) { return NC(w, c); }

NC nc_mul(const NC& x, const NC& y) {
    NC r;
    for (const auto& [wa, ca] : x.terms())
        for (const auto& [wb, cb] : y.terms()) r.add(wa + wb, ca * cb);
    return r;
}

Z series(Truncation t, std::initializer_list<std::pair<int, HPoly>> terms) {
    Z s(t);
    for (const auto& [k, c] : terms) s.add(k, c);
    return s;
}

HPoly random_hpoly(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> d(-3, 3);
    HPoly p;
    for (int k = 0; k <= deg; ++k) p += HPoly::monomial(frac(d(rng), 1 + (d(rng) + 3)), k);
    return p;
}

Z random_series(std::mt19937& rng, Truncation t) {
    Z s(t);
    for (int k = -t.z_cutoff; k <= 0; ++k) s.add(k, random_hpoly(rng, 2));
    return s;
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(to_string(frac(6, -4)) == "-3/2");
    CHECK(to_string(frac(6, 3)) == "2");
    CHECK_THROWS_AS(frac(1, 0), std::domain_error);
    CHECK(parse_rational("-3/6") == frac(-1, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK(binom(-1, 2) == 1);
    CHECK(binom(-2, 3) == -4);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(frac(1, 2), 2) == frac(-1, 8));
    CHECK(factorial(5) == 120);
    CHECK(pow(frac(2, 3), 3) == frac(8, 27));
}

TEST_CASE("hpoly arithmetic examples") {
    HPoly h = HPoly::hbar();
    CHECK((HPoly(1) + h) * (HPoly(1) - h) == HPoly(1) - h * h);
    HPoly ht = h.with_truncation(2);
    CHECK((ht * ht).is_zero());
    CHECK(HPoly(frac(1, 2)) + h * frac(1, 3) + HPoly(frac(1, 2)) == HPoly(1) + h * frac(1, 3));
}

TEST_CASE("hpoly truncation contexts") {
    HPoly a = HPoly::hbar().with_truncation(2);
    HPoly b = HPoly::hbar().with_truncation(3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    HPoly c = a * HPoly(5);
    CHECK(c.truncation() == 2);
}

TEST_CASE("hpoly text round trip") {
    HPoly p = HPoly(1) - HPoly::monomial(frac(1, 2), 2) + HPoly::monomial(frac(3, 2), 1);
    CHECK(p.to_string() == "1 + 3/2*h - 1/2*h^2");
    CHECK(HPoly::parse(p.to_string()) == p);
    CHECK(HPoly::parse("-h^3") == -HPoly::monomial(1, 3));
    CHECK(HPoly().to_string() == "0");
    CHECK_THROWS(HPoly::parse("1 + q"));
}

TEST_CASE("hpoly division by hbar") {
    HPoly p = HPoly::monomial(2, 2) + HPoly::monomial(1, 3);
    CHECK(p.divided_by_hbar_pow(2) == HPoly(2) + HPoly::hbar());
    CHECK_THROWS_AS(p.divided_by_hbar_pow(3), std::domain_error);
}

TEST_CASE("hpoly ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        HPoly a = random_hpoly(rng, 3).with_truncation(4), b = random_hpoly(rng, 3).with_truncation(4),
              c = random_hpoly(rng, 3).with_truncation(4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("zseries multiplication examples") {
    Truncation t{2, HPoly::kNoTrunc};
    Z a = series(t, {{0, HPoly(1)}, {-1, HPoly(1)}});
    Z b = series(t, {{0, HPoly(1)}, {-1, HPoly(-1)}});
    CHECK(series_mul(a, b) == series(t, {{0, HPoly(1)}, {-2, HPoly(-1)}}));
    CHECK(series_mul(series(t, {{-1, HPoly(1)}}), series(t, {{-2, HPoly(1)}})).is_zero());

    ZSeries<NC> x(t), y(t);
    x.add(0, nc(""));
    x.add(-1, nc("a"));
    y.add(0, nc(""));
    y.add(-1, nc("b"));
    ZSeries<NC> xy = series_mul(x, y, nc_mul);
    CHECK(xy.coeff(0) == nc(""));
    CHECK(xy.coeff(-1) == nc("a") + nc("b"));
    CHECK(xy.coeff(-2) == nc("ab"));
}

TEST_CASE("zseries inversion examples") {
    Truncation t3{3, HPoly::kNoTrunc};
    Z a = series(t3, {{0, HPoly(1)}, {-1, HPoly(-1)}});
    CHECK(series_invert(a, HPoly(1), [](const HPoly& x, const HPoly& y) { return x * y; }) ==
          series(t3, {{0, HPoly(1)}, {-1, HPoly(1)}, {-2, HPoly(1)}, {-3, HPoly(1)}}));
    Z one(t3, HPoly(1));
    CHECK(series_invert(one, HPoly(1), [](const HPoly& x, const HPoly& y) { return x * y; }) == one);

    Truncation t2{2, HPoly::kNoTrunc};
    ZSeries<NC> s(t2, nc(""));
    s.add(-1, nc("c", HPoly::hbar()));
    ZSeries<NC> inv = series_invert(s, nc(""), nc_mul);
    CHECK(inv.coeff(-1) == nc("c", -HPoly::hbar()));
    CHECK(inv.coeff(-2) == nc("cc", HPoly::monomial(1, 2)));
    ZSeries<NC> back = series_mul(s, inv, nc_mul);
    CHECK(back == ZSeries<NC>(t2, nc("")));

    Z bad = series(t3, {{0, HPoly(2)}});
    CHECK_THROWS_AS(series_invert(bad, HPoly(1), [](const HPoly& x, const HPoly& y) { return x * y; }), std::invalid_argument);
}

TEST_CASE("zseries shift examples") {
    Truncation t{3, 3};
    Z zinv = series(t, {{-1, HPoly(1)}});
    CHECK(series_shift(zinv, 1) ==
          series(t, {{-1, HPoly(1)}, {-2, HPoly::monomial(frac(-1, 2), 1)}, {-3, HPoly::monomial(frac(1, 4), 2)}}));
    CHECK(series_shift(zinv, 0) == zinv);
    Truncation t2{2, HPoly::kNoTrunc};
    CHECK(series_shift(series(t2, {{-1, HPoly(1)}}), 2) == series(t2, {{-1, HPoly(1)}, {-2, -HPoly::hbar()}}));
}

TEST_CASE("zseries derivative examples") {
    Truncation t{4, HPoly::kNoTrunc};
    Z zinv = series(t, {{-1, HPoly(1)}});
    CHECK(series_derive(zinv, 1) == series(t, {{-2, HPoly(-1)}}));
    CHECK(series_derive(zinv, 2) == series(t, {{-3, HPoly(1)}}));
    CHECK(series_derive(zinv, 0) == zinv);
}

TEST_CASE("zseries properties on random series") {
    std::mt19937 rng(11);
    Truncation t{4, 6};
    auto mul = [](const HPoly& x, const HPoly& y) { return x * y; };
    for (int it = 0; it < 20; ++it) {
        Z a = random_series(rng, t), b = random_series(rng, t), c = random_series(rng, t);
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
        // Shift is a ring morphism and invertible.
        CHECK(series_shift(series_mul(a, b), 3) == series_mul(series_shift(a, 3), series_shift(b, 3)));
        CHECK(series_shift(series_shift(a, 3), -3) == a);
        // Divided powers compose with a binomial factor.
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n)
                CHECK(series_derive(series_derive(a, n), m) == series_derive(a, m + n).scaled(HPoly(binom(m + n, n))));
        // Two-sided inverse of unipotent series.
        Z u(t, HPoly(1));
        for (const auto& [k, v] : a.coeffs())
            if (k < 0) u.add(k, v);
        Z inv = series_invert(u, HPoly(1), mul);
        CHECK(series_mul(u, inv) == Z(t, HPoly(1)));
        CHECK(series_mul(inv, u) == Z(t, HPoly(1)));
    }
}

TEST_CASE("zseries context mismatch is an error") {
    Z a(Truncation{2, HPoly::kNoTrunc}), b(Truncation{3, HPoly::kNoTrunc});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(series_mul(a, b), std::invalid_argument);
}

TEST_CASE("zseries exp") {
    Truncation t{3, HPoly::kNoTrunc};
    Z a = series(t, {{-1, HPoly(1)}});
    Z e = series_exp(a, HPoly(1), [](const HPoly& x, const HPoly& y) { return x * y; });
    CHECK(e == series(t, {{0, HPoly(1)}, {-1, HPoly(1)}, {-2, HPoly(frac(1, 2))}, {-3, HPoly(frac(1, 6))}}));
}
