/**
 * @file hpoly.cpp
 * @brief HPoly arithmetic, rendering and parsing.
 */
#include "yrm/hpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace yrm {

HPoly::HPoly(const Rational& c) {
    if (c != 0) terms_.emplace_back(0, c);
}

HPoly HPoly::monomial(const Rational& c, int k, int trunc) {
    if (k < 0) throw std::invalid_argument("negative hbar exponent");
    HPoly p;
    p.trunc_ = trunc;
    if (c != 0 && (trunc == kNoTrunc || k < trunc)) p.terms_.emplace_back(k, c);
    return p;
}

HPoly HPoly::with_truncation(int m) const {
    HPoly p = *this;
    p.trunc_ = m;
    p.apply_truncation();
    return p;
}

Rational HPoly::coeff(int k) const {
    for (const auto& [e, c] : terms_)
        if (e == k) return c;
    return 0;
}

int HPoly::merge_trunc(int a, int b) {
    if (a == kNoTrunc) return b;
    if (b == kNoTrunc) return a;
    if (a != b) throw std::invalid_argument("incompatible hbar truncation orders");
    return a;
}

void HPoly::apply_truncation() {
    if (trunc_ == kNoTrunc) return;
    while (!terms_.empty() && terms_.back().first >= trunc_) terms_.pop_back();
}

void HPoly::add_term(int k, const Rational& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const auto& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == k) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (c != 0) {
        terms_.insert(it, {k, c});
    }
}

HPoly& HPoly::operator+=(const HPoly& o) {
    trunc_ = merge_trunc(trunc_, o.trunc_);
    if (terms_.empty()) {
        terms_ = o.terms_;
    } else {
        std::vector<std::pair<int, Rational>> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.cbegin();
        auto b = o.terms_.cbegin();
        while (a != terms_.cend() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.cend() && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == terms_.cend() || b->first < a->first) {
                out.push_back(*b++);
            } else {
                Rational s = a->second + b->second;
                if (s != 0) out.emplace_back(a->first, std::move(s));
                ++a;
                ++b;
            }
        }
        terms_ = std::move(out);
    }
    apply_truncation();
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) { return *this += -o; }

HPoly HPoly::operator-() const {
    HPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly p;
    p.trunc_ = HPoly::merge_trunc(a.trunc_, b.trunc_);
    if (a.terms_.empty() || b.terms_.empty()) return p;
    if (b.terms_.size() == 1) {
        for (const auto& [e, c] : a.terms_) {
            int k = e + b.terms_[0].first;
            if (p.trunc_ != HPoly::kNoTrunc && k >= p.trunc_) break;
            p.terms_.emplace_back(k, c * b.terms_[0].second);
        }
        return p;
    }
    std::map<int, Rational> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            int k = ea + eb;
            if (p.trunc_ != HPoly::kNoTrunc && k >= p.trunc_) continue;
            acc[k] += ca * cb;
        }
    for (auto& [k, c] : acc)
        if (c != 0) p.terms_.emplace_back(k, c);
    return p;
}

HPoly& HPoly::operator*=(const HPoly& o) { return *this = *this * o; }

HPoly& HPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

HPoly HPoly::shifted(int k) const {
    HPoly p = *this;
    for (auto& t : p.terms_) t.first += k;
    p.apply_truncation();
    return p;
}

HPoly HPoly::divided_by_hbar_pow(int k) const {
    if (!terms_.empty() && terms_.front().first < k)
        throw std::domain_error("HPoly not divisible by hbar^" + std::to_string(k) + ": " + to_string());
    HPoly p = *this;
    for (auto& t : p.terms_) t.first -= k;
    return p;
}

HPoly HPoly::dropped_from(int m) const {
    HPoly p = *this;
    while (!p.terms_.empty() && p.terms_.back().first >= m) p.terms_.pop_back();
    return p;
}

Rational HPoly::evaluate(const Rational& value) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c * pow(value, e);
    return s;
}

std::string HPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string hpart = e == 0 ? "" : (e == 1 ? "h" : "h^" + std::to_string(e));
        if (hpart.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += hpart;
        } else {
            out += a.get_str() + "*" + hpart;
        }
    }
    return out;
}

HPoly HPoly::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty hbar polynomial");
    HPoly p;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw std::invalid_argument("malformed hbar polynomial: " + text);
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("malformed hbar polynomial: " + text);
        Rational c = 1;
        int e = 0;
        auto hpos = term.find('h');
        std::string cpart = hpos == std::string::npos ? term : term.substr(0, hpos);
        if (hpos != std::string::npos) {
            if (!cpart.empty()) {
                if (cpart.back() != '*') throw std::invalid_argument("malformed hbar term: " + term);
                cpart.pop_back();
            }
            std::string epart = term.substr(hpos + 1);
            if (epart.empty()) {
                e = 1;
            } else {
                if (epart[0] != '^' || epart.size() < 2) throw std::invalid_argument("malformed hbar term: " + term);
                for (std::size_t q = 1; q < epart.size(); ++q)
                    if (!std::isdigit(static_cast<unsigned char>(epart[q])))
                        throw std::invalid_argument("malformed hbar exponent: " + term);
                e = std::stoi(epart.substr(1));
            }
        }
        if (!cpart.empty()) c = parse_rational(cpart);
        p.add_term(e, sign * c);
        i = j;
    }
    return p;
}

}  // namespace yrm
