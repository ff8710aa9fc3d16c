/**
 * @file lincomb.hpp
 * @brief Finite linear combinations of ordered keys with HPoly coefficients.
 */
#pragma once

#include "yrm/hpoly.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <utility>

namespace yrm {

/**
 * @brief Sparse map key -> HPoly with no zero coefficients.
 *
 * Ordered storage gives deterministic iteration, which the dump format relies on.
 */
template <class Key>
class LinComb {
public:
    using Map = std::map<Key, HPoly>;

    LinComb() = default;
    LinComb(const Key& k, const HPoly& c) { add(k, c); }

    void add(const Key& k, const HPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(Key&& k, const HPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_scaled(const LinComb& o, const HPoly& s) {
        if (s.is_zero()) return;
        for (const auto& [k, c] : o.terms_) add(k, c * s);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    HPoly coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? HPoly() : it->second;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    LinComb operator-() const {
        LinComb r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend LinComb operator*(const LinComb& a, const HPoly& s) {
        LinComb r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : a.terms_) r.add(k, c * s);
        return r;
    }
    friend LinComb operator*(const HPoly& s, const LinComb& a) { return a * s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    /// Drops hbar exponents >= m in every coefficient.
    friend LinComb drop_hbar_from(const LinComb& a, int m) {
        LinComb r;
        for (const auto& [k, c] : a.terms_) r.add(k, c.dropped_from(m));
        return r;
    }

    /// Lowest hbar exponent over all coefficients (INT_MAX when zero).
    int hbar_valuation() const {
        int v = INT_MAX;
        for (const auto& [k, c] : terms_) v = std::min(v, c.valuation());
        return v;
    }

private:
    Map terms_;
};

}  // namespace yrm
