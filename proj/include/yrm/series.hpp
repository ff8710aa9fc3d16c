/**
 * @file series.hpp
 * @brief Truncated Laurent series in z (or u) with coefficients in a possibly noncommutative ring.
 *
 * Coefficient types must provide `is_zero()`, `+=`, unary `-`, right scalar
 * multiplication by HPoly, and a free `drop_hbar_from(C, int)` used to apply
 * an hbar truncation order.
 */
#pragma once

#include "yrm/hpoly.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace yrm {

/// Truncation context: exponents below -z_cutoff are discarded; hbar exponents >= hbar_order too.
struct Truncation {
    int z_cutoff = 0;
    int hbar_order = HPoly::kNoTrunc;
    friend bool operator==(const Truncation& a, const Truncation& b) {
        return a.z_cutoff == b.z_cutoff && a.hbar_order == b.hbar_order;
    }
    friend bool operator!=(const Truncation& a, const Truncation& b) { return !(a == b); }
};

inline HPoly drop_hbar_from(const HPoly& p, int m) { return p.dropped_from(m); }

struct ZVar {
    static constexpr const char* name = "z";
};
struct UVar {
    static constexpr const char* name = "u";
};

/**
 * @brief Sparse Laurent series sum_k c_k var^k with k >= -N.
 *
 * Values are immutable in spirit; mutation is only used while building.
 */
template <class C, class Var = ZVar>
class LaurentSeries {
public:
    using Coeff = C;

    LaurentSeries() = default;
    explicit LaurentSeries(Truncation t) : trunc_(t) {}
    LaurentSeries(Truncation t, const C& constant) : trunc_(t) { add(0, constant); }

    const Truncation& truncation() const { return trunc_; }
    int cutoff() const { return trunc_.z_cutoff; }
    int low() const { return -trunc_.z_cutoff; }

    /// Adds c * var^k; silently dropped if k < -N.
    void add(int k, const C& c) {
        if (k < low() || c.is_zero()) return;
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            C v = c;
            if (trunc_.hbar_order != HPoly::kNoTrunc) v = drop_hbar_from(v, trunc_.hbar_order);
            if (!v.is_zero()) coeffs_.emplace(k, std::move(v));
        } else {
            it->second += c;
            if (trunc_.hbar_order != HPoly::kNoTrunc) it->second = drop_hbar_from(it->second, trunc_.hbar_order);
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    C coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? C() : it->second;
    }
    const std::map<int, C>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Largest exponent present (or low()-1 when zero).
    int high_degree() const { return coeffs_.empty() ? low() - 1 : coeffs_.rbegin()->first; }

    /// Copy with a different truncation, re-truncating.
    LaurentSeries retruncated(Truncation t) const {
        LaurentSeries r(t);
        for (const auto& [k, c] : coeffs_) r.add(k, c);
        return r;
    }

    LaurentSeries& operator+=(const LaurentSeries& o) {
        check_same(o);
        for (const auto& [k, c] : o.coeffs_) add(k, c);
        return *this;
    }
    LaurentSeries& operator-=(const LaurentSeries& o) {
        check_same(o);
        for (const auto& [k, c] : o.coeffs_) add(k, -c);
        return *this;
    }
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    LaurentSeries operator-() const {
        LaurentSeries r(trunc_);
        for (const auto& [k, c] : coeffs_) r.add(k, -c);
        return r;
    }
    /// Right scalar multiplication by an hbar polynomial.
    LaurentSeries scaled(const HPoly& s) const {
        LaurentSeries r(trunc_);
        for (const auto& [k, c] : coeffs_) r.add(k, c * s);
        return r;
    }
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
    }

    void check_same(const LaurentSeries& o) const {
        if (trunc_ != o.trunc_) throw std::invalid_argument("series truncation contexts differ");
    }

    /// Applies f to every coefficient (f must be linear).
    template <class F>
    auto map(F&& f) const -> LaurentSeries<decltype(f(std::declval<const C&>())), Var> {
        LaurentSeries<decltype(f(std::declval<const C&>())), Var> r(trunc_);
        for (const auto& [k, c] : coeffs_) r.add(k, f(c));
        return r;
    }

private:
    Truncation trunc_{};
    std::map<int, C> coeffs_;
};

template <class C>
using ZSeries = LaurentSeries<C, ZVar>;
template <class C>
using USeries = LaurentSeries<C, UVar>;

/// Product preserving factor order; exponents below -N discarded.
template <class C, class Var, class Mul>
LaurentSeries<C, Var> series_mul(const LaurentSeries<C, Var>& a, const LaurentSeries<C, Var>& b, Mul&& mul) {
    a.check_same(b);
    LaurentSeries<C, Var> r(a.truncation());
    for (const auto& [ka, ca] : a.coeffs()) {
        for (const auto& [kb, cb] : b.coeffs()) {
            if (ka + kb < r.low()) continue;
            r.add(ka + kb, mul(ca, cb));
        }
    }
    return r;
}

template <class Var>
LaurentSeries<HPoly, Var> series_mul(const LaurentSeries<HPoly, Var>& a, const LaurentSeries<HPoly, Var>& b) {
    return series_mul(a, b, [](const HPoly& x, const HPoly& y) { return x * y; });
}

/**
 * @brief Inverse of 1 + A with A supported in exponents <= -1: sum_{k<=N} (-A)^k.
 * @throws std::invalid_argument if the constant term differs from `one` or A has positive exponents.
 */
template <class C, class Var, class Mul>
LaurentSeries<C, Var> series_invert(const LaurentSeries<C, Var>& a, const C& one, Mul&& mul) {
    if (!(a.coeff(0) == one)) throw std::invalid_argument("series_invert: constant term is not the identity");
    if (a.high_degree() > 0) throw std::invalid_argument("series_invert: positive exponents present");
    LaurentSeries<C, Var> minus_a(a.truncation());
    for (const auto& [k, c] : a.coeffs())
        if (k != 0) minus_a.add(k, -c);
    LaurentSeries<C, Var> result(a.truncation(), one);
    LaurentSeries<C, Var> power(a.truncation(), one);
    for (int k = 1; k <= a.cutoff(); ++k) {
        power = series_mul(power, minus_a, mul);
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

/**
 * @brief Shift T^m : f(z) -> f(z + m*hbar/2), expanded binomially and truncated at z^{-N}.
 */
template <class C, class Var>
LaurentSeries<C, Var> series_shift(const LaurentSeries<C, Var>& a, const Rational& halfsteps) {
    LaurentSeries<C, Var> r(a.truncation());
    const Rational step = halfsteps / 2;
    for (const auto& [k, c] : a.coeffs()) {
        for (int l = 0;; ++l) {
            int e = k - l;
            if (e < r.low()) break;
            if (k >= 0 && l > k) break;
            Rational b = binom(static_cast<long>(k), l) * pow(step, l);
            if (b == 0) continue;
            r.add(e, c * HPoly::monomial(b, l));
        }
    }
    return r;
}

/// Divided-power derivative: z^k -> binom(k, n) z^{k-n}.
template <class C, class Var>
LaurentSeries<C, Var> series_derive(const LaurentSeries<C, Var>& a, int n) {
    LaurentSeries<C, Var> r(a.truncation());
    for (const auto& [k, c] : a.coeffs()) {
        Rational b = binom(static_cast<long>(k), n);
        if (b != 0) r.add(k - n, c * HPoly(b));
    }
    return r;
}

/// Substitution z -> -z.
template <class C, class Var>
LaurentSeries<C, Var> series_negate_var(const LaurentSeries<C, Var>& a) {
    LaurentSeries<C, Var> r(a.truncation());
    for (const auto& [k, c] : a.coeffs()) r.add(k, (k % 2 == 0) ? c : -c);
    return r;
}

/// Multiplication by var^m.
template <class C, class Var>
LaurentSeries<C, Var> series_mul_var_pow(const LaurentSeries<C, Var>& a, int m) {
    LaurentSeries<C, Var> r(a.truncation());
    for (const auto& [k, c] : a.coeffs()) r.add(k + m, c);
    return r;
}

/// Exponential of a series A supported in exponents <= -1: sum_{m<=N} A^m/m!.
template <class C, class Var, class Mul>
LaurentSeries<C, Var> series_exp(const LaurentSeries<C, Var>& a, const C& one, Mul&& mul) {
    if (a.high_degree() >= 0) throw std::invalid_argument("series_exp: argument must lie in var^{-1}[[var^{-1}]]");
    LaurentSeries<C, Var> result(a.truncation(), one);
    LaurentSeries<C, Var> power(a.truncation(), one);
    for (int m = 1; m <= a.cutoff(); ++m) {
        power = series_mul(power, a, mul).scaled(HPoly(frac(1, m)));
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

/// Text rendering "c0 + (c1)*z^-1 + ..." in decreasing exponent order.
template <class C, class Var, class Render>
std::string series_to_string(const LaurentSeries<C, Var>& a, Render&& render) {
    if (a.is_zero()) return "0";
    std::string out;
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + render(it->second) + ")";
        if (it->first != 0) out += std::string("*") + Var::name + "^" + std::to_string(it->first);
    }
    return out;
}

}  // namespace yrm
