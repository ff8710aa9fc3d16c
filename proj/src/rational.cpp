/**
 * @file rational.cpp
 * @brief Rational parsing and binomial helpers.
 */
#include "yrm/rational.hpp"

#include <cctype>

namespace yrm {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false, digit_after = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            if (seen_slash) throw std::invalid_argument("malformed rational: " + text);
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw std::invalid_argument("malformed rational: " + text);
        }
    }
    if (!digit_before || (seen_slash && !digit_after))
        throw std::invalid_argument("malformed rational: " + text);
    Rational q;
    std::string body = (text[0] == '+') ? text.substr(1) : text;
    if (q.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

Rational binom(long n, long k) {
    if (k < 0) return 0;
    Rational r = 1;
    for (long i = 0; i < k; ++i) {
        r *= Rational(n - i);
        r /= Rational(i + 1);
    }
    return r;
}

Rational binom(const Rational& x, long k) {
    if (k < 0) return 0;
    Rational r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (x - i);
        r /= Rational(i + 1);
    }
    return r;
}

Rational factorial(long k) {
    Rational r = 1;
    for (long i = 2; i <= k; ++i) r *= Rational(i);
    return r;
}

Rational pow(const Rational& q, long k) {
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= q;
    return r;
}

}  // namespace yrm
