/**
 * @file acceptance.cpp
 * @brief Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
 *
 * Usage: acceptance [criterion numbers...]  (default: all)
 */
#include "yrm/algebra_checks.hpp"
#include "yrm/rmatrix.hpp"
#include "yrm/shiftop.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace yrm;

namespace {

Yangian make(const std::string& type) { return Yangian(LieData::build(CartanDatum::named(type))); }

/// Outcome of one criterion: pass flag plus a note on the first failure.
struct Outcome {
    bool pass = true;
    std::string note;
    int instances = 0;

    void require(bool ok, const std::string& what) {
        ++instances;
        if (!ok && pass) {
            pass = false;
            note = what;
        }
    }
    void require(const CheckResult& c) { require(c.pass, c.check + " " + c.instance + ": " + c.first_discrepancy); }
    void require(const Report& r) {
        for (const CheckResult& c : r) require(c);
    }
    /// The report must contain at least one failure.
    void require_failure(const Report& r, const std::string& what) { require(!all_pass(r), what + " went undetected"); }
};

Report all_rmatrix_checks(UniversalR& R) { return run_rmatrix_checks(R, rmatrix_check_names()); }

/// sum_n hbar x^-_{i,n} (x) d^{(n)} x^+_i(z), built from binomials without the recursion.
TSeries rank_one_closed_form(const Yangian& Y, int i, int N) {
    TSeries out(Truncation{N, HPoly::kNoTrunc});
    for (int p = 0; p < N; ++p)
        for (int n = 0; n <= p; ++n)
            out.add(-p - 1, YTensor(TKey{Mono{Y.xminus(i, n)}, Mono{Y.xplus(i, p - n)}},
                                    HPoly::monomial(binom(p, n) * Rational(sign_pow(n)), 1)));
    return out;
}

Outcome c1_rank_one() {
    Outcome o;
    for (const char* type : {"A1", "A2", "A3", "B2", "G2"}) {
        Yangian Y = make(type);
        UniversalR R(Y, RConfig{4});
        for (int i = 0; i < Y.rank(); ++i) {
            Weight beta(static_cast<std::size_t>(Y.rank()), 0);
            beta[static_cast<std::size_t>(i)] = 1;
            const TSeries& block = R.minus_block(beta);
            const TSeries oracle = rank_one_closed_form(Y, i, 4);
            o.require(block == oracle, std::string(type) + " node " + std::to_string(i + 1) + ": " + first_difference(Y, block, oracle));
        }
    }
    return o;
}

Outcome c2_unitarity() {
    Outcome o;
    for (const auto& [type, N] : {std::pair{"A1", 4}, std::pair{"A2", 3}}) {
        UniversalR R(make(type), RConfig{N});
        o.require(verify_unitarity(R));
    }
    return o;
}

Outcome c3_intertwiner() {
    Outcome o;
    for (const auto& [type, N] : {std::pair{"A1", 3}, std::pair{"A2", 2}}) {
        UniversalR R(make(type), RConfig{N});
        const Report r = verify_intertwiner(R);
        // x_{i0}^+, x_{i0}^-, h_{i0}, t_{i1} for every node.
        o.require(static_cast<int>(r.size()) == 4 * R.yangian().rank(), std::string(type) + ": wrong number of instances");
        o.require(r);
    }
    return o;
}

Outcome c4_cabling() {
    Outcome o;
    UniversalR R(make("A1"), RConfig{2});
    o.require(verify_cabling(R));
    return o;
}

Outcome c5_semiclassical() {
    Outcome o;
    for (const char* type : {"A1", "A2"}) {
        UniversalR R(make(type), RConfig{3});
        o.require(verify_semiclassical(R));
    }
    return o;
}

Outcome c6_zeta() {
    Outcome o;
    for (const auto& [type, N] : {std::pair{"A1", 4}, std::pair{"A2", 3}}) {
        UniversalR R(make(type), RConfig{N});
        o.require(verify_zeta_independence(R));
    }
    return o;
}

Outcome c7_chevalley() {
    Outcome o;
    UniversalR R(make("A1"), RConfig{3});
    o.require(verify_chevalley(R));
    return o;
}

Outcome c8_divisibility() {
    Outcome o;
    for (const auto& [type, N] : {std::pair{"A1", 4}, std::pair{"A2", 3}}) {
        UniversalR R(make(type), RConfig{N});
        o.require(verify_divisibility(R));
    }
    return o;
}

Outcome c9_difference() {
    Outcome o;
    for (const char* type : {"A1", "A2"}) {
        UniversalR R(make(type), RConfig{3});
        o.require(verify_difference_equation(R));
    }
    return o;
}

Outcome c10_census() {
    Outcome o;
    o.require(check_census(make("A1"), 6));
    o.require(check_census(make("A2"), 4));
    return o;
}

Outcome c11_qnum() {
    Outcome o;
    for (const char* type : {"A1", "A2", "A3", "B2", "G2"}) o.require(check_qnum(LieData::build(CartanDatum::named(type))));
    return o;
}

Outcome c12_double_relations() {
    Outcome o;
    const Yangian Y = make("A1");
    ShiftOperator S(Y, 3);
    o.require(S.window() == 2, "mode window is not [-2, 2]");
    o.require(S.check_double_relations());
    for (const char* spec : {"phi-sign:x+", "phi-sign:h", "phi-chain"}) {
        ShiftOperator bad(Y, 3, 2, {ShiftFault::parse(spec)});
        o.require_failure(bad.check_double_relations(), spec);
    }
    return o;
}

Outcome c13_hopf() {
    Outcome o;
    for (const char* type : {"A1", "A2"}) o.require(check_hopf(make(type), 3, 50, 2024));
    return o;
}

Outcome c14_mutations() {
    Outcome o;
    const LieData A1 = LieData::build(CartanDatum::named("A1"));
    const LieData A2 = LieData::build(CartanDatum::named("A2"));
    auto suite_with = [](const LieData& lie, int N, const std::string& spec) {
        RConfig cfg{N};
        cfg.faults.push_back(Fault::parse(spec, lie));
        UniversalR R(Yangian(apply_lie_faults(lie, cfg.faults)), cfg);
        return all_rmatrix_checks(R);
    };
    // Control: the unmutated suites pass, so a failure below is caused by the mutation.
    {
        UniversalR R(Yangian(A1), RConfig{3});
        o.require(all_rmatrix_checks(R));
        UniversalR R2(Yangian(A2), RConfig{2});
        o.require(all_rmatrix_checks(R2));
    }
    o.require_failure(suite_with(A1, 3, "drop-block:2a"), "A1 drop-block:2a");
    o.require_failure(suite_with(A2, 2, "drop-block:(1,1)"), "A2 drop-block:(1,1)");
    o.require_failure(suite_with(A2, 2, "flip-sign:(1,1)"), "A2 flip-sign:(1,1)");
    for (int k = 1; k <= 3; ++k) o.require_failure(suite_with(A1, 3, "perturb-g:" + std::to_string(k)), "A1 perturb-g:" + std::to_string(k));
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "rank-one blocks equal the closed form (A1, A2, A3, B2, G2 at N=4)", c1_rank_one},
        {2, "unitarity R(z) R21(-z) = 1 (A1 N=4, A2 N=3)", c2_unitarity},
        {3, "intertwiner equation on x+-_i0, h_i0, t_i1 (A1 N=3, A2 N=2)", c3_intertwiner},
        {4, "cabling identities through z^-2 (A1)", c4_cabling},
        {5, "semiclassical limit Omega/(z + t - w) (A1, A2 at N=3)", c5_semiclassical},
        {6, "zeta independence of R^- (A1 N=4, A2 N=3)", c6_zeta},
        {7, "Chevalley suite through z^-3 (A1)", c7_chevalley},
        {8, "hbar divisibility and Drinfeld-Gavarini membership (A1 N=4, A2 N=3)", c8_divisibility},
        {9, "R^0 difference equation through z^-3 (A1, A2)", c9_difference},
        {10, "PBW census (A1 degree <= 6, A2 degree <= 4)", c10_census},
        {11, "q-number matrix positivity and C B = [2 kappa] Id (A1, A2, A3, B2, G2)", c11_qnum},
        {12, "double relations with modes in [-2, 2] (A1 N=3); sign faults caught", c12_double_relations},
        {13, "Hopf axioms on generators and 50 random elements (A1, A2)", c13_hopf},
        {14, "mutations caught: dropped block, flipped sign, perturbed g_k", c14_mutations},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : all) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << o.instances
                  << " instances, " << static_cast<int>(secs * 1000) / 1000.0 << "s]";
        if (!o.pass) std::cout << " -- " << o.note;
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
