/**
 * @file linalg.hpp
 * @brief Exact sparse row echelon forms and dense inversion over Q.
 */
#pragma once

#include "yrm/rational.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace yrm {

/// Sparse vector: (column, value) pairs sorted by column, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// Normalizes an unsorted list of (column, value) pairs into a SparseVec.
SparseVec make_sparse(std::vector<std::pair<int, Rational>> entries);

/**
 * @brief Incrementally built row echelon basis of a subspace of Q^n.
 *
 * Each stored row has a leading (smallest) column that no other row leads
 * with, and its leading coefficient is 1.
 */
class Echelon {
public:
    explicit Echelon(int ncols = 0) : ncols_(ncols), pivot_row_(static_cast<std::size_t>(ncols), -1) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool is_pivot(int col) const { return pivot_row_[static_cast<std::size_t>(col)] >= 0; }

    /// Inserts a row; returns true iff it increased the rank.
    bool insert(const SparseVec& row);
    /// Reduces v modulo the row space; result is supported on non-pivot columns.
    SparseVec reduce(const SparseVec& v) const;

private:
    void reduce_dense(std::vector<Rational>& acc, std::vector<char>& nz, int from) const;

    int ncols_;
    std::vector<int> pivot_row_;
    std::vector<SparseVec> rows_;
};

/// Dense square matrix inverse over Q; throws std::domain_error if singular.
std::vector<std::vector<Rational>> invert_dense(std::vector<std::vector<Rational>> m);

/// Rank of a dense matrix over Q.
int rank_dense(std::vector<std::vector<Rational>> m);

}  // namespace yrm
