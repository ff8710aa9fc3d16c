/**
 * @file rational.hpp
 * @brief Exact rational numbers (GMP) and small combinatorial helpers.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace yrm {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// p/q in canonical form.
inline Rational frac(long p, long q) {
    if (q == 0) throw std::domain_error("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Generalized binomial coefficient binom(n, k) for integer n (possibly negative), k >= 0.
Rational binom(long n, long k);

/// Generalized binomial binom(x, k) for rational x, k >= 0.
Rational binom(const Rational& x, long k);

/// k! as a rational.
Rational factorial(long k);

/// (-1)^k.
inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

/// Rational power q^k for k >= 0.
Rational pow(const Rational& q, long k);

}  // namespace yrm
