/**
 * @file test_liealg.cpp
 * @brief Root systems, structure constants, invariant form, Casimir and nu.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yrm/liealg.hpp"

#include <algorithm>
#include <functional>

using namespace yrm;

namespace {

const char* kTypes[] = {"A1", "A2", "A3", "B2", "G2"};

/// Brute force: smallest k such that beta is a sum of k positive roots (multisets by recursion on k).
int nu_by_enumeration(const std::vector<Weight>& roots, const Weight& beta, int kmax) {
    std::function<bool(const Weight&, int, std::size_t)> reach = [&](const Weight& w, int k, std::size_t from) {
        if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) return k == 0;
        if (k == 0) return false;
        for (std::size_t r = from; r < roots.size(); ++r) {
            Weight rest = w;
            bool ok = true;
            for (std::size_t i = 0; i < w.size(); ++i) {
                rest[i] -= roots[r][i];
                ok = ok && rest[i] >= 0;
            }
            if (ok && reach(rest, k - 1, r)) return true;
        }
        return false;
    };
    for (int k = 0; k <= kmax; ++k)
        if (reach(beta, k, 0)) return k;
    return INT_MAX;
}

std::vector<Rational> combine(const LieData& L, const std::vector<Rational>& coeffs, int b) {
    // [sum_c coeffs_c e_c, e_b]
    std::vector<Rational> out(static_cast<std::size_t>(L.dim()));
    for (int c = 0; c < L.dim(); ++c) {
        if (coeffs[static_cast<std::size_t>(c)] == 0) continue;
        auto v = L.bracket(c, b);
        for (int r = 0; r < L.dim(); ++r) out[static_cast<std::size_t>(r)] += coeffs[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(r)];
    }
    return out;
}

}  // namespace

TEST_CASE("named Cartan data and validation") {
    auto c = CartanDatum::named("G2");
    CHECK(c.d == std::vector<int>{1, 3});
    CHECK(c.B(0, 1) == -3);
    CHECK(CartanDatum::from_matrix({{2, -1}, {-2, 2}}).d == std::vector<int>{2, 1});
    CHECK(CartanDatum::from_matrix({{2, -3}, {-1, 2}}).d == std::vector<int>{1, 3});
    CHECK_THROWS_AS(CartanDatum::named("E8"), std::invalid_argument);
    CHECK_THROWS_AS(CartanDatum::from_matrix({{2, -2}, {-2, 2}}), std::invalid_argument);  // affine
    CHECK_THROWS_AS(CartanDatum::from_matrix({{2, 0}, {0, 2}}), std::invalid_argument);    // disconnected
    CHECK_THROWS_AS(CartanDatum::from_matrix({{2, -1}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(CartanDatum::from_matrix({{2, -1}, {-1, 2}}, std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("root counts and dimensions") {
    const std::pair<const char*, int> expect[] = {{"A1", 1}, {"A2", 3}, {"A3", 6}, {"B2", 4}, {"G2", 6}};
    for (auto [name, count] : expect) {
        auto L = LieData::build(CartanDatum::named(name));
        CHECK(L.num_pos_roots() == count);
        for (int i = 0; i < L.rank(); ++i) CHECK(L.height(i) == 1);
    }
    CHECK(LieData::build(CartanDatum::named("A1")).dim() == 3);
    CHECK(LieData::build(CartanDatum::named("A2")).dim() == 8);
    auto G = LieData::build(CartanDatum::named("G2"));
    CHECK(G.root(G.highest_root()) == Weight{3, 2});
}

TEST_CASE("Chevalley normalization and form") {
    for (const char* name : kTypes) {
        auto L = LieData::build(CartanDatum::named(name));
        INFO(name);
        for (int i = 0; i < L.rank(); ++i) {
            auto hb = L.bracket(L.xplus(i), L.xminus(i));
            for (int r = 0; r < L.dim(); ++r) CHECK(hb[static_cast<std::size_t>(r)] == (r == L.hidx(i) ? 1 : 0));
        }
        for (int b = 0; b < L.num_pos_roots(); ++b) CHECK(L.form(L.xplus(b), L.xminus(b)) == 1);
        for (int i = 0; i < L.rank(); ++i)
            for (int j = 0; j < L.rank(); ++j) {
                CHECK(L.root_value(L.root(j), i) == L.cartan().B(i, j));
                CHECK(L.form(L.hidx(i), L.hidx(j)) == L.cartan().B(i, j));
            }
    }
}

TEST_CASE("Jacobi identity, form invariance and symmetry") {
    for (const char* name : kTypes) {
        auto L = LieData::build(CartanDatum::named(name));
        INFO(name);
        const int D = L.dim();
        for (int a = 0; a < D; ++a)
            for (int b = 0; b < D; ++b) {
                CHECK(L.form(a, b) == L.form(b, a));
                auto ab = L.bracket(a, b);
                auto ba = L.bracket(b, a);
                for (int r = 0; r < D; ++r) CHECK(ab[static_cast<std::size_t>(r)] == -ba[static_cast<std::size_t>(r)]);
                for (int c = 0; c < D; ++c) {
                    // [[a,b],c] = [a,[b,c]] - [b,[a,c]]
                    auto lhs = combine(L, ab, c);
                    auto bc = L.bracket(b, c);
                    auto ac = L.bracket(a, c);
                    std::vector<Rational> rhs(static_cast<std::size_t>(D));
                    for (int k = 0; k < D; ++k) {
                        auto x = L.bracket(a, k), y = L.bracket(b, k);
                        for (int r = 0; r < D; ++r)
                            rhs[static_cast<std::size_t>(r)] += bc[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(r)] -
                                                                 ac[static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(r)];
                    }
                    CHECK(lhs == rhs);
                    // (a, [b, c]) = ([a, b], c)
                    Rational l = 0, rr = 0;
                    for (int k = 0; k < D; ++k) {
                        l += L.form(a, k) * bc[static_cast<std::size_t>(k)];
                        rr += ab[static_cast<std::size_t>(k)] * L.form(k, c);
                    }
                    CHECK(l == rr);
                }
            }
    }
}

TEST_CASE("omega is a Lie anti-automorphism") {
    for (const char* name : kTypes) {
        auto L = LieData::build(CartanDatum::named(name));
        INFO(name);
        const int D = L.dim();
        for (int a = 0; a < D; ++a)
            for (int b = 0; b < D; ++b) {
                // omega([a,b]) = [omega b, omega a]
                auto ab = L.bracket(a, b);
                std::vector<Rational> lhs(static_cast<std::size_t>(D));
                for (int r = 0; r < D; ++r) {
                    if (ab[static_cast<std::size_t>(r)] == 0) continue;
                    auto [img, s] = L.omega_basis(r);
                    lhs[static_cast<std::size_t>(img)] += s * ab[static_cast<std::size_t>(r)];
                }
                auto [oa, sa] = L.omega_basis(a);
                auto [ob, sb] = L.omega_basis(b);
                auto rhs = L.bracket(ob, oa);
                for (auto& x : rhs) x *= sa * sb;
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("Casimir tensor") {
    auto A1 = LieData::build(CartanDatum::named("A1"));
    // x+ (x) x- + x- (x) x+ + h (x) h / 2
    REQUIRE(A1.casimir().size() == 3);
    CHECK(A1.casimir()[2].left == A1.hidx(0));
    CHECK(A1.casimir()[2].coeff == frac(1, 2));
    auto r = A1.r_i(0);
    REQUIRE(r.size() == 1);
    CHECK(r[0].left == A1.xminus(0));
    CHECK(r[0].right == A1.xplus(0));
    CHECK(r[0].coeff == -2);
    CHECK(A1.canonical_r().size() == 1);

    for (const char* name : kTypes) {
        auto L = LieData::build(CartanDatum::named(name));
        INFO(name);
        const int D = L.dim();
        // [x (x) 1 + 1 (x) x, Omega] = 0 as a tensor in g (x) g.
        for (int x = 0; x < D; ++x) {
            std::vector<Rational> t(static_cast<std::size_t>(D * D));
            for (const auto& term : L.casimir()) {
                auto l = L.bracket(x, term.left);
                auto rr = L.bracket(x, term.right);
                for (int k = 0; k < D; ++k) {
                    t[static_cast<std::size_t>(k * D + term.right)] += term.coeff * l[static_cast<std::size_t>(k)];
                    t[static_cast<std::size_t>(term.left * D + k)] += term.coeff * rr[static_cast<std::size_t>(k)];
                }
            }
            CHECK(std::all_of(t.begin(), t.end(), [](const Rational& v) { return v == 0; }));
        }
    }
}

TEST_CASE("kappa from the Casimir eigenvalue") {
    CHECK(LieData::build(CartanDatum::named("A1")).kappa() == 1);
    CHECK(LieData::build(CartanDatum::named("A2")).kappa() == frac(3, 2));
    CHECK(LieData::build(CartanDatum::named("A3")).kappa() == 2);
    CHECK(LieData::build(CartanDatum::named("B2")).kappa() == 3);
    CHECK(LieData::build(CartanDatum::named("G2")).kappa() == 6);
}

TEST_CASE("nu by dynamic programming against enumeration") {
    auto A1 = LieData::build(CartanDatum::named("A1"));
    for (int n = 0; n <= 5; ++n) CHECK(A1.nu({n}) == n);
    auto A2 = LieData::build(CartanDatum::named("A2"));
    CHECK(A2.nu({1, 1}) == 1);
    CHECK(A2.nu({2, 0}) == 2);
    CHECK(A2.nu({-1, 0}) == INT_MAX);
    for (const char* name : kTypes) {
        auto L = LieData::build(CartanDatum::named(name));
        INFO(name);
        const int n = L.rank();
        std::vector<Weight> ws;
        std::function<void(Weight&, int)> gen = [&](Weight& w, int i) {
            if (i == n) {
                ws.push_back(w);
                return;
            }
            for (int k = 0; k <= (n > 2 ? 2 : 4); ++k) {
                w[static_cast<std::size_t>(i)] = k;
                gen(w, i + 1);
            }
        };
        Weight w(static_cast<std::size_t>(n), 0);
        gen(w, 0);
        for (const auto& beta : ws) {
            int v = L.nu(beta);
            CHECK(v == nu_by_enumeration(L.positive_roots(), beta, 12));
            CHECK((v == 1) == (L.root_index(beta) >= 0));
            for (const auto& gamma : ws) {
                Weight s = beta;
                for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] += gamma[static_cast<std::size_t>(i)];
                CHECK(L.nu(s) <= v + L.nu(gamma));
            }
        }
    }
}

TEST_CASE("root chains") {
    auto A2 = LieData::build(CartanDatum::named("A2"));
    const auto& ch = A2.chain(2);
    CHECK(ch.j == 0);
    CHECK(ch.parent == 1);
    CHECK(A2.seed(2) == 1);
    // x+_theta = cplus [x+_1, x+_2]
    auto v = A2.bracket(A2.xplus(0), A2.xplus(1));
    CHECK(v[static_cast<std::size_t>(A2.xplus(2))] * ch.cplus == 1);
    auto B2 = LieData::build(CartanDatum::named("B2"));
    for (int b = 0; b < B2.num_pos_roots(); ++b) CHECK(B2.omega_scale(b) > 0);
}
