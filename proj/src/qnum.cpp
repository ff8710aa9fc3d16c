/**
 * @file qnum.cpp
 * @brief Laurent polynomial arithmetic and the q-number matrices.
 */
#include "yrm/qnum.hpp"

#include <sstream>
#include <stdexcept>

namespace yrm {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int k) {
    LaurentPoly p;
    p.add_term(k, c);
    return p;
}

void LaurentPoly::add_term(int k, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = terms_.try_emplace(k, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly::low() const {
    if (terms_.empty()) throw std::domain_error("zero Laurent polynomial has no degree");
    return terms_.begin()->first;
}

int LaurentPoly::high() const {
    if (terms_.empty()) throw std::domain_error("zero Laurent polynomial has no degree");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) p.add_term(ka + kb, ca * cb);
    return p;
}

LaurentPoly LaurentPoly::divided_exactly(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    LaurentPoly rem = *this, q;
    const int dh = d.high();
    const Rational& lead = d.terms_.rbegin()->second;
    while (!rem.is_zero()) {
        int k = rem.high() - dh;
        // Once the remainder reaches below the divisor's span, no exact quotient exists.
        if (rem.high() - rem.low() < d.high() - d.low()) throw std::domain_error("inexact Laurent division");
        Rational c = rem.terms_.rbegin()->second / lead;
        LaurentPoly t = monomial(c, k);
        q += t;
        rem -= t * d;
    }
    return q;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    for (const auto& [k, c] : terms_) p.terms_.emplace(-k, c);
    return p;
}

bool LaurentPoly::in_natural_span() const {
    for (const auto& [k, c] : terms_)
        if (c < 0 || c.get_den() != 1) return false;
    return true;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0)
            os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "v";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

LaurentPoly qint(int m) {
    if (m < 0) return -qint(-m);
    LaurentPoly p;
    for (int k = -(m - 1); k <= m - 1; k += 2) p += LaurentPoly::monomial(1, k);
    return p;
}

QMatrix qmat_mul(const QMatrix& a, const QMatrix& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    QMatrix c(n, std::vector<LaurentPoly>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < inner; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

namespace {

QMatrix minor_of(const QMatrix& m, std::size_t row, std::size_t col) {
    QMatrix out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == row) continue;
        std::vector<LaurentPoly> r;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (j != col) r.push_back(m[i][j]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

LaurentPoly qdet(const QMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly(1);
    if (n == 1) return m[0][0];
    LaurentPoly d;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        LaurentPoly t = m[0][j] * qdet(minor_of(m, 0, j));
        if (j % 2 == 0)
            d += t;
        else
            d -= t;
    }
    return d;
}

QMatrix qadj(const QMatrix& m) {
    const std::size_t n = m.size();
    QMatrix adj(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly c = qdet(minor_of(m, i, j));
            adj[j][i] = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

QNumMatrix qnum_C(const CartanDatum& cartan, const Rational& kappa) {
    QNumMatrix q;
    q.kappa = kappa;
    Rational tk = 2 * kappa;
    if (tk.get_den() != 1 || !tk.get_num().fits_sint_p()) throw std::logic_error("2 kappa is not an integer");
    q.two_kappa = qint(static_cast<int>(tk.get_num().get_si()));
    const int n = cartan.rank();
    q.B.assign(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q.B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                qint(cartan.d[static_cast<std::size_t>(i)] * cartan.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    LaurentPoly det = qdet(q.B);
    QMatrix adj = qadj(q.B);
    q.C.assign(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto& c = q.C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            try {
                c = (q.two_kappa * adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]).divided_exactly(det);
            } catch (const std::domain_error&) {
                throw std::logic_error("[2 kappa]_v B(v)^{-1} is not a Laurent polynomial matrix");
            }
            if (!c.in_natural_span()) throw std::logic_error("C(v) entry " + c.to_string() + " is not in N[v, v^-1]");
        }
    return q;
}

}  // namespace yrm
