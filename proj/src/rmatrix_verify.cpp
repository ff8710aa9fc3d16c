/**
 * @file rmatrix_verify.cpp
 * @brief Exact verifiers for the identities satisfied by the R-matrix factors.
 */
#include "yrm/rmatrix.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace yrm {

namespace {

CheckResult compare(const Yangian& Y, const std::string& check, const std::string& instance, const TSeries& a,
                    const TSeries& b) {
    CheckResult r{check, instance, true, first_difference(Y, a, b)};
    r.pass = r.first_discrepancy.empty();
    return r;
}

std::string instance_name(const UniversalR& R) {
    return R.yangian().lie().cartan().name + " N=" + std::to_string(R.config().N);
}

/// Key of a Lie algebra basis element at a given mode.
Key basis_key(const Yangian& Y, int b, int mode) {
    const LieData& L = Y.lie();
    const int P = L.num_pos_roots();
    if (b < P) return Y.xplus(b, mode);
    if (b < P + L.rank()) return Y.h(b - P, mode);
    return Y.xminus(b - P - L.rank(), mode);
}

/// Image of x under tau_z (x) id applied to an arity-2 tensor.
TSeries tau_first_leg(const Yangian& Y, const YTensor& a, Truncation tr) {
    TSeries out(tr);
    for (const auto& [t, c] : a.terms()) {
        ZSeries<YElement> img = Y.tau(YElement(t[0], c), tr);
        for (const auto& [k, e] : img.coeffs()) out.add(k, Y.tensor({e, YElement(t[1], HPoly(1))}));
    }
    return out;
}

YTensor omega2(const Yangian& Y, const YTensor& a) {
    auto w = [&Y](const YElement& x) { return Y.omega(x); };
    return Y.map_leg(Y.map_leg(a, 0, w), 1, w);
}

YTensor varsigma2(const Yangian& Y, const YTensor& a) {
    auto s = [&Y](const YElement& x) { return Y.varsigma(x); };
    return Y.map_leg(Y.map_leg(a, 0, s), 1, s);
}

/// R(z + c) for a rational constant c, re-expanded in z^{-1}.
TSeries scalar_shift(const TSeries& a, const Rational& c) {
    TSeries out(a.truncation());
    for (const auto& [k, v] : a.coeffs())
        for (int l = 0; k - l >= a.low(); ++l) {
            if (k >= 0 && l > k) break;
            Rational b = binom(k, l) * pow(c, l);
            if (b != 0) out.add(k - l, v * HPoly(b));
        }
    return out;
}

}  // namespace

CheckResult verify_unitarity(UniversalR& R) {
    const Yangian& Y = R.yangian();
    TSeries lhs = R.mul(R.full().series, series_negate_var(flip_legs(Y, R.full().series)));
    return compare(Y, "unitarity", instance_name(R), lhs, R.one());
}

Report verify_intertwiner(UniversalR& R) {
    const Yangian& Y = R.yangian();
    RConfig cfg = R.config();
    cfg.N += 1;
    UniversalR R1(Y, cfg);
    const Truncation tr = R1.truncation();
    const TSeries& Rz = R1.full().series;
    const LieData& L = Y.lie();
    std::vector<std::pair<std::string, YElement>> gens;
    for (int i = 0; i < L.rank(); ++i) {
        std::string node = std::to_string(i + 1);
        gens.emplace_back("x+[" + node + ",0]", Y.gen(Y.xplus(i, 0)));
        gens.emplace_back("x-[" + node + ",0]", Y.gen(Y.xminus(i, 0)));
        gens.emplace_back("h[" + node + ",0]", Y.gen(Y.h(i, 0)));
        gens.emplace_back("t[" + node + ",1]", Y.derived_t(i, 1));
    }
    Report out;
    for (const auto& [name, x] : gens) {
        YTensor d = Y.coproduct(x);
        TSeries D = tau_first_leg(Y, d, tr);
        TSeries Dop = tau_first_leg(Y, Y.permute(d, {1, 0}), tr);
        TSeries lhs = R1.mul(Dop, Rz), rhs = R1.mul(Rz, D);
        // Coefficients below z^{-N} see the missing z^{-N-2} term of R.
        TSeries l = lhs.retruncated(R.truncation()), r = rhs.retruncated(R.truncation());
        out.push_back(compare(Y, "intertwiner", instance_name(R) + " x=" + name, l, r));
    }
    return out;
}

Report verify_cabling(UniversalR& R) {
    const Yangian& Y = R.yangian();
    const TSeries& Rz = R.full().series;
    auto delta = [&Y](const YElement& x) { return Y.coproduct(x); };
    auto mul3 = [&Y](const YTensor& a, const YTensor& b) { return Y.tmul(a, b); };
    auto emb = [&](const std::vector<int>& pos) {
        return Rz.map([&](const YTensor& c) { return Y.embed(c, 3, pos); });
    };
    TSeries R12 = emb({0, 1}), R13 = emb({0, 2}), R23 = emb({1, 2});
    TSeries lhs1 = Rz.map([&](const YTensor& c) { return Y.map_leg_tensor(c, 0, delta); });
    TSeries lhs2 = Rz.map([&](const YTensor& c) { return Y.map_leg_tensor(c, 1, delta); });
    Report out;
    out.push_back(compare(Y, "cabling", instance_name(R) + " (Delta x id)R = R13 R23", lhs1, series_mul(R13, R23, mul3)));
    out.push_back(compare(Y, "cabling", instance_name(R) + " (id x Delta)R = R13 R12", lhs2, series_mul(R13, R12, mul3)));
    return out;
}

CheckResult verify_semiclassical(UniversalR& R) {
    const Yangian& Y = R.yangian();
    const LieData& L = Y.lie();
    const TSeries& Rz = R.full().series;
    const int N = R.config().N;
    CheckResult res{"semiclassical", instance_name(R), true, ""};
    TSeries got(Truncation{N, HPoly::kNoTrunc}), want(Truncation{N, HPoly::kNoTrunc});
    for (const auto& [k, c] : Rz.coeffs()) {
        if (k == 0) continue;
        for (const auto& [t, v] : c.terms()) {
            if (v.valuation() < 1) {
                res.pass = false;
                res.first_discrepancy = "z^" + std::to_string(k) + " at " + tkey_to_string(Y, t) + ": coefficient not divisible by hbar";
                return res;
            }
            got.add(k, YTensor(t, HPoly(v.coeff(1))));
        }
    }
    // Omega/(z + t - w): z^{-p-1} coefficient sum_j binom(p, j) (-1)^j a_j (x) a'_{p-j}
    for (int p = 0; p < N; ++p)
        for (const TensorTerm& term : L.casimir())
            for (int j = 0; j <= p; ++j) {
                TKey key{Mono{basis_key(Y, term.left, j)}, Mono{basis_key(Y, term.right, p - j)}};
                want.add(-p - 1, YTensor(key, HPoly(binom(p, j) * Rational(sign_pow(j)) * term.coeff)));
            }
    res.first_discrepancy = first_difference(Y, got, want);
    res.pass = res.first_discrepancy.empty();
    return res;
}

CheckResult verify_zeta_independence(UniversalR& R) {
    const Yangian& Y = R.yangian();
    RConfig a = R.config(), b = R.config();
    a.zeta = ZetaTarget::Ones;
    b.zeta = ZetaTarget::Ramp;
    UniversalR Ra(Y, a), Rb(Y, b);
    return compare(Y, "zeta", instance_name(R) + " ones vs ramp", Ra.minus().series, Rb.minus().series);
}

Report verify_chevalley(UniversalR& R) {
    const Yangian& Y = R.yangian();
    auto w = [&Y](const YTensor& c) { return omega2(Y, c); };
    auto s = [&Y](const YTensor& c) { return varsigma2(Y, c); };
    const std::string inst = instance_name(R);
    Report out;
    out.push_back(compare(Y, "chevalley", inst + " (w x w)R = R", map_coeffs(R.full().series, w), R.full().series));
    out.push_back(compare(Y, "chevalley", inst + " (w x w)R+ = R-", map_coeffs(R.plus().series, w), R.minus().series));
    out.push_back(compare(Y, "chevalley", inst + " (w x w)R- = R+", map_coeffs(R.minus().series, w), R.plus().series));
    out.push_back(compare(Y, "chevalley", inst + " (s x s)R = R21", map_coeffs(R.full().series, s), flip_legs(Y, R.full().series)));
    return out;
}

Report verify_divisibility(UniversalR& R) {
    const Yangian& Y = R.yangian();
    const LieData& L = Y.lie();
    const std::string inst = instance_name(R);
    Report out;
    for (FactorKind kind : {FactorKind::Minus, FactorKind::Plus}) {
        const RFactor& f = R.factor(kind);
        CheckResult r{"divisibility", inst + " hbar^nu blocks of " + factor_name(kind), true, ""};
        for (const auto& [beta, blk] : f.blocks) {
            const int nu = L.nu(beta);
            for (const auto& [k, c] : blk.coeffs()) {
                if (c.hbar_valuation() < nu) {
                    r.pass = false;
                    r.first_discrepancy = "block " + weight_to_string(beta) + " z^" + std::to_string(k) +
                                          ": hbar valuation " + std::to_string(c.hbar_valuation()) + " < nu = " + std::to_string(nu);
                    break;
                }
            }
            if (!r.pass) break;
        }
        out.push_back(r);
    }
    for (FactorKind kind : {FactorKind::Minus, FactorKind::Zero, FactorKind::Plus, FactorKind::Full}) {
        for (int leg = 0; leg < 2; ++leg) {
            CheckResult r{"divisibility", inst + " Drinfeld-Gavarini leg " + std::to_string(leg + 1) + " of " + factor_name(kind), true, ""};
            for (const auto& [k, c] : R.factor(kind).series.coeffs()) {
                for (const auto& [t, v] : c.terms()) {
                    const int len = static_cast<int>(t[static_cast<std::size_t>(leg)].size());
                    if (v.valuation() < len) {
                        r.pass = false;
                        r.first_discrepancy = "z^" + std::to_string(k) + " at " + tkey_to_string(Y, t) + ": coefficient " +
                                              v.to_string() + " not divisible by hbar^" + std::to_string(len);
                        break;
                    }
                }
                if (!r.pass) break;
            }
            out.push_back(r);
        }
    }
    return out;
}

CheckResult verify_difference_equation(UniversalR& R) {
    const Yangian& Y = R.yangian();
    const TSeries& R0 = R.zero().series;
    YTensor id(TKey{Mono{}, Mono{}}, HPoly(1));
    TSeries A = series_exp(R.log_A(), id, [&Y](const YTensor& x, const YTensor& y) { return Y.tmul(x, y); });
    TSeries lhs = series_shift(R0, 4 * Y.lie().kappa());
    return compare(Y, "difference", instance_name(R), lhs, R.mul(A, R0));
}

Report verify_homogeneity(UniversalR& R) {
    const Yangian& Y = R.yangian();
    const std::string inst = instance_name(R);
    Report out;
    for (FactorKind kind : {FactorKind::Minus, FactorKind::Zero, FactorKind::Plus, FactorKind::Full}) {
        CheckResult r{"homogeneity", inst + " " + factor_name(kind), true, ""};
        for (const auto& [k, c] : R.factor(kind).series.coeffs()) {
            for (const auto& [t, v] : c.terms()) {
                Weight w0 = Y.weight(t[0]), w1 = Y.weight(t[1]);
                bool balanced = true;
                for (std::size_t q = 0; q < w0.size(); ++q) balanced = balanced && (w0[q] + w1[q] == 0);
                const int deg = Y.degree(t[0]) + Y.degree(t[1]);
                bool homog = true;
                for (const auto& [e, q] : v.terms()) homog = homog && (deg + e == -k);
                if (!balanced || !homog) {
                    r.pass = false;
                    r.first_discrepancy = "z^" + std::to_string(k) + " at " + tkey_to_string(Y, t) +
                                          (balanced ? ": degree mismatch" : ": weights do not cancel");
                    break;
                }
            }
            if (!r.pass) break;
        }
        out.push_back(r);
    }
    return out;
}

CheckResult verify_shift(UniversalR& R) {
    const Yangian& Y = R.yangian();
    const TSeries& Rz = R.full().series;
    CheckResult res{"shift", instance_name(R), true, ""};
    const std::vector<std::pair<Rational, Rational>> samples{{frac(1, 2), Rational(-1)}, {Rational(2), frac(3, 2)}};
    for (const auto& [a, b] : samples) {
        TSeries lhs = Rz.map([&](const YTensor& c) {
            YTensor t = Y.map_leg(c, 0, [&](const YElement& x) { return Y.tau_at(x, a); });
            return Y.map_leg(t, 1, [&](const YElement& x) { return Y.tau_at(x, b); });
        });
        std::string d = first_difference(Y, lhs, scalar_shift(Rz, a - b));
        if (!d.empty()) {
            res.pass = false;
            res.first_discrepancy = "a=" + to_string(a) + " b=" + to_string(b) + ": " + d;
            break;
        }
    }
    return res;
}

const std::vector<std::string>& rmatrix_check_names() {
    static const std::vector<std::string> names{"unitarity", "intertwiner", "cabling",  "semiclassical", "zeta",
                                                "chevalley", "divisibility", "difference", "homogeneity", "shift"};
    return names;
}

Report run_rmatrix_checks(UniversalR& R, const std::vector<std::string>& names) {
    Report out;
    auto append = [&out](Report r) { out.insert(out.end(), r.begin(), r.end()); };
    for (const std::string& n : names) {
        if (n == "unitarity") out.push_back(verify_unitarity(R));
        else if (n == "intertwiner") append(verify_intertwiner(R));
        else if (n == "cabling") append(verify_cabling(R));
        else if (n == "semiclassical") out.push_back(verify_semiclassical(R));
        else if (n == "zeta") out.push_back(verify_zeta_independence(R));
        else if (n == "chevalley") append(verify_chevalley(R));
        else if (n == "divisibility") append(verify_divisibility(R));
        else if (n == "difference") out.push_back(verify_difference_equation(R));
        else if (n == "homogeneity") append(verify_homogeneity(R));
        else if (n == "shift") out.push_back(verify_shift(R));
        else throw std::invalid_argument("unknown rmatrix check '" + n + "'");
    }
    return out;
}

}  // namespace yrm
