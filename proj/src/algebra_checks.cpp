/**
 * @file algebra_checks.cpp
 * @brief Hopf axioms, PBW census and q-number checks.
 */
#include "yrm/algebra_checks.hpp"

#include "yrm/qnum.hpp"

#include <functional>
#include <stdexcept>

namespace yrm {

YElement random_element(const Yangian& Y, std::mt19937& rng, int maxdeg, int terms, int maxlen) {
    const LieData& L = Y.lie();
    std::uniform_int_distribution<int> kind(0, 2), len(1, maxlen), coef(-3, 3);
    YElement out;
    for (int t = 0; t < terms; ++t) {
        std::vector<Key> w;
        int budget = std::uniform_int_distribution<int>(0, maxdeg)(rng);
        const int n = len(rng);
        for (int l = 0; l < n; ++l) {
            const int mode = l + 1 == n ? budget : std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= mode;
            const int k = kind(rng);
            if (k == 1) {
                w.push_back(Y.h(std::uniform_int_distribution<int>(0, L.rank() - 1)(rng), mode));
            } else {
                const int root = std::uniform_int_distribution<int>(0, L.num_pos_roots() - 1)(rng);
                w.push_back(k == 0 ? Y.xplus(root, mode) : Y.xminus(root, mode));
            }
        }
        int c = coef(rng);
        if (c == 0) c = 1;
        out += Y.normal_form(w, HPoly(Rational(c)));
    }
    return out;
}

std::string hopf_discrepancy(const Yangian& Y, const YElement& x) {
    const YTensor d = Y.coproduct(x);
    auto cop = [&](const YElement& a) { return Y.coproduct(a); };
    if (Y.map_leg_tensor(d, 0, cop) != Y.map_leg_tensor(d, 1, cop)) return "coassociativity";
    YElement e1, e2;
    for (const auto& [t, c] : d.terms()) {
        e1.add(t[1], Y.counit(YElement(t[0], HPoly(1))) * c);
        e2.add(t[0], Y.counit(YElement(t[1], HPoly(1))) * c);
    }
    if (e1 != x) return "(counit x id) Delta";
    if (e2 != x) return "(id x counit) Delta";
    const YElement unit = Y.one() * Y.counit(x);
    auto S = [&](const YElement& a) { return Y.antipode(a); };
    if (Y.mult_legs(Y.map_leg(d, 0, S)) != unit) return "m (S x id) Delta";
    if (Y.mult_legs(Y.map_leg(d, 1, S)) != unit) return "m (id x S) Delta";
    return "";
}

CheckResult check_hopf(const Yangian& Y, int maxdeg, int random_count, unsigned seed) {
    const LieData& L = Y.lie();
    std::vector<YElement> sample;
    for (int r = 0; r <= maxdeg; ++r) {
        for (int b = 0; b < L.num_pos_roots(); ++b) {
            sample.push_back(Y.gen(Y.xplus(b, r)));
            sample.push_back(Y.gen(Y.xminus(b, r)));
        }
        for (int i = 0; i < L.rank(); ++i) sample.push_back(Y.gen(Y.h(i, r)));
    }
    const std::size_t gens = sample.size();
    std::mt19937 rng(seed);
    for (int k = 0; k < random_count; ++k) sample.push_back(random_element(Y, rng, maxdeg));
    CheckResult res{"hopf",
                    L.cartan().name + " " + std::to_string(gens) + " generators + " + std::to_string(random_count) +
                        " random elements of degree <= " + std::to_string(maxdeg),
                    true, ""};
    for (const YElement& x : sample) {
        std::string bad = hopf_discrepancy(Y, x);
        if (!bad.empty()) {
            res.pass = false;
            res.first_discrepancy = bad + " fails on " + Y.element_to_string(x);
            break;
        }
    }
    return res;
}

CheckResult check_census(const Yangian& Y, int maxdeg) {
    const int n = Y.rank();
    std::vector<Weight> weights;
    std::function<void(Weight&, int, int)> rec = [&](Weight& w, int i, int left) {
        if (i == n) {
            if (left < maxdeg) weights.push_back(w);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            w.push_back(k);
            rec(w, i + 1, left - k);
            w.pop_back();
        }
    };
    Weight w;
    rec(w, 0, maxdeg);
    CheckResult res{"census", Y.lie().cartan().name + " height, degree <= " + std::to_string(maxdeg), true, ""};
    int slices = 0;
    for (const Weight& beta : weights)
        for (int d = 0; d <= maxdeg; ++d) {
            const SliceStats st = Y.plus_slice(beta, d);
            ++slices;
            if (st.columns - st.rank != st.pbw && res.pass) {
                res.pass = false;
                std::string b;
                for (int x : beta) b += (b.empty() ? "" : ",") + std::to_string(x);
                res.first_discrepancy = "weight (" + b + ") degree " + std::to_string(d) + ": " + std::to_string(st.columns) +
                                        " - " + std::to_string(st.rank) + " != " + std::to_string(st.pbw);
            }
        }
    res.instance += " (" + std::to_string(slices) + " slices)";
    return res;
}

CheckResult check_qnum(const LieData& lie) {
    CheckResult res{"qnum", lie.cartan().name, true, ""};
    try {
        const QNumMatrix q = qnum_C(lie.cartan(), lie.kappa());
        const QMatrix CB = qmat_mul(q.C, q.B);
        const std::size_t n = q.C.size();
        for (std::size_t i = 0; i < n && res.pass; ++i)
            for (std::size_t j = 0; j < n && res.pass; ++j) {
                const std::string at = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                if (!q.C[i][j].in_natural_span()) {
                    res.pass = false;
                    res.first_discrepancy = "C " + at + " = " + q.C[i][j].to_string();
                } else if (CB[i][j] != (i == j ? q.two_kappa : LaurentPoly())) {
                    res.pass = false;
                    res.first_discrepancy = "C B " + at + " = " + CB[i][j].to_string();
                }
            }
    } catch (const std::exception& e) {
        res.pass = false;
        res.first_discrepancy = e.what();
    }
    return res;
}

const std::vector<std::string>& algebra_check_names() {
    static const std::vector<std::string> names{"hopf", "census", "qnum"};
    return names;
}

Report run_algebra_checks(const Yangian& Y, const std::vector<std::string>& names, int census_degree) {
    Report out;
    for (const std::string& n : names) {
        if (n == "hopf") out.push_back(check_hopf(Y));
        else if (n == "census") out.push_back(check_census(Y, census_degree));
        else if (n == "qnum") out.push_back(check_qnum(Y.lie()));
        else throw std::invalid_argument("unknown algebra check '" + n + "'");
    }
    return out;
}

}  // namespace yrm
