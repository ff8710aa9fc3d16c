/**
 * @file linalg.cpp
 * @brief Sparse echelon insertion/reduction and dense Gauss-Jordan.
 */
#include "yrm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace yrm {

SparseVec make_sparse(std::vector<std::pair<int, Rational>> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [c, v] : entries) {
        if (!out.empty() && out.back().first == c) {
            out.back().second += v;
            if (out.back().second == 0) out.pop_back();
        } else if (v != 0) {
            out.emplace_back(c, std::move(v));
        }
    }
    return out;
}

void Echelon::reduce_dense(std::vector<Rational>& acc, std::vector<char>& nz, int from) const {
    for (int c = from; c < ncols_; ++c) {
        if (!nz[static_cast<std::size_t>(c)]) continue;
        if (acc[static_cast<std::size_t>(c)] == 0) {
            nz[static_cast<std::size_t>(c)] = 0;
            continue;
        }
        int r = pivot_row_[static_cast<std::size_t>(c)];
        if (r < 0) continue;
        Rational f = acc[static_cast<std::size_t>(c)];
        for (const auto& [col, val] : rows_[static_cast<std::size_t>(r)]) {
            auto uc = static_cast<std::size_t>(col);
            acc[uc] -= f * val;
            nz[uc] = 1;
        }
    }
}

bool Echelon::insert(const SparseVec& row) {
    SparseVec red = reduce(row);
    if (red.empty()) return false;
    Rational lead = red.front().second;
    for (auto& e : red) e.second /= lead;
    pivot_row_[static_cast<std::size_t>(red.front().first)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(red));
    return true;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
    if (v.empty()) return {};
    bool touches = false;
    for (const auto& e : v)
        if (is_pivot(e.first)) {
            touches = true;
            break;
        }
    if (!touches) return v;
    std::vector<Rational> acc(static_cast<std::size_t>(ncols_));
    std::vector<char> nz(static_cast<std::size_t>(ncols_), 0);
    for (const auto& [c, x] : v) {
        acc[static_cast<std::size_t>(c)] = x;
        nz[static_cast<std::size_t>(c)] = 1;
    }
    reduce_dense(acc, nz, v.front().first);
    SparseVec out;
    for (int c = 0; c < ncols_; ++c)
        if (nz[static_cast<std::size_t>(c)] && acc[static_cast<std::size_t>(c)] != 0)
            out.emplace_back(c, acc[static_cast<std::size_t>(c)]);
    return out;
}

std::vector<std::vector<Rational>> invert_dense(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("invert_dense: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (m[col][j] != 0) m[r][j] -= f * m[col][j];
                if (inv[col][j] != 0) inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

int rank_dense(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace yrm
