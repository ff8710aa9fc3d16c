/**
 * @file qnum.hpp
 * @brief Laurent polynomials in v, q-numbers and the matrices B(v), C(v).
 */
#pragma once

#include "yrm/liealg.hpp"

#include <map>
#include <string>
#include <vector>

namespace yrm {

/**
 * @brief Laurent polynomial sum_k c_k v^k with rational coefficients; no zero terms stored.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT: scalars embed implicitly
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
    static LaurentPoly monomial(const Rational& c, int k);

    bool is_zero() const { return terms_.empty(); }
    int low() const;
    int high() const;
    Rational coeff(int k) const;
    const std::map<int, Rational>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const;
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Exact quotient; throws std::domain_error if the division leaves a remainder.
    LaurentPoly divided_exactly(const LaurentPoly& d) const;
    /// v -> v^{-1}.
    LaurentPoly bar() const;
    /// True iff all coefficients are nonnegative integers.
    bool in_natural_span() const;

    std::string to_string() const;

private:
    void add_term(int k, const Rational& c);
    std::map<int, Rational> terms_;
};

/// [m]_v = (v^m - v^-m)/(v - v^-1); negative m gives -[-m]_v.
LaurentPoly qint(int m);

using QMatrix = std::vector<std::vector<LaurentPoly>>;

QMatrix qmat_mul(const QMatrix& a, const QMatrix& b);
/// Determinant by cofactor expansion (exact, division free).
LaurentPoly qdet(const QMatrix& m);
/// Adjugate: adj(M) M = det(M) Id.
QMatrix qadj(const QMatrix& m);

/**
 * @brief q-number data: B(v) = ([d_i a_ij]_v) and C(v) = [2 kappa]_v B(v)^{-1}.
 */
struct QNumMatrix {
    QMatrix B;
    QMatrix C;
    Rational kappa;
    LaurentPoly two_kappa;  ///< [2 kappa]_v
};

/**
 * @brief Builds C(v) exactly.
 * @throws std::logic_error if 2 kappa is not an integer, a division is inexact or an entry leaves N[v, v^-1].
 */
QNumMatrix qnum_C(const CartanDatum& cartan, const Rational& kappa);

}  // namespace yrm
