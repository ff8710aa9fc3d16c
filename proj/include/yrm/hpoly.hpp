/**
 * @file hpoly.hpp
 * @brief Polynomials in hbar with exact rational coefficients, optionally truncated mod hbar^M.
 */
#pragma once

#include "yrm/rational.hpp"

#include <climits>
#include <string>
#include <utility>
#include <vector>

namespace yrm {

/**
 * @brief Sparse polynomial in hbar over Q.
 *
 * Terms are kept sorted by exponent with no zero coefficients. An optional
 * truncation order M discards every exponent >= M. Combining two values with
 * different explicit truncation orders throws; an untruncated operand adopts
 * the other operand's order.
 */
class HPoly {
public:
    static constexpr int kNoTrunc = -1;

    HPoly() = default;
    HPoly(const Rational& c);  // NOLINT: scalars embed implicitly
    HPoly(long c) : HPoly(Rational(c)) {}  // NOLINT

    /// c * hbar^k.
    static HPoly monomial(const Rational& c, int k, int trunc = kNoTrunc);
    /// hbar.
    static HPoly hbar() { return monomial(1, 1); }

    HPoly with_truncation(int m) const;
    int truncation() const { return trunc_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    /// Lowest exponent present; INT_MAX for zero.
    int valuation() const { return terms_.empty() ? INT_MAX : terms_.front().first; }
    /// Highest exponent present; -1 for zero.
    int degree() const { return terms_.empty() ? -1 : terms_.back().first; }
    Rational coeff(int k) const;
    const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }

    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    HPoly& operator*=(const HPoly& o);
    HPoly& operator*=(const Rational& c);
    HPoly operator-() const;

    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    friend HPoly operator*(HPoly a, const Rational& c) { return a *= c; }
    friend HPoly operator*(const Rational& c, HPoly a) { return a *= c; }
    friend bool operator==(const HPoly& a, const HPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

    /// Multiplies by hbar^k.
    HPoly shifted(int k) const;
    /// Divides by hbar^k; throws std::domain_error if not exactly divisible.
    HPoly divided_by_hbar_pow(int k) const;
    /// Drops exponents >= m (without changing the recorded truncation).
    HPoly dropped_from(int m) const;
    /// Substitutes hbar = value.
    Rational evaluate(const Rational& value) const;

    /// Canonical text, e.g. "1 - 1/2*h^2"; zero renders as "0".
    std::string to_string() const;
    /// Inverse of to_string; throws std::invalid_argument.
    static HPoly parse(const std::string& text);

private:
    void add_term(int k, const Rational& c);
    void apply_truncation();
    static int merge_trunc(int a, int b);

    std::vector<std::pair<int, Rational>> terms_;
    int trunc_ = kNoTrunc;
};

}  // namespace yrm
