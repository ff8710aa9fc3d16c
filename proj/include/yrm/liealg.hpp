/**
 * @file liealg.hpp
 * @brief Finite-type simple Lie algebras from Cartan data: roots, structure constants,
 *        invariant form, Casimir tensor, kappa and nu.
 *
 * Conventions: a_ij = 2(a_i,a_j)/(a_i,a_i), short simple roots have square length 2,
 * (a_i,a_i) = 2 d_i and B = (d_i a_ij) is the symmetrized Cartan matrix.
 * Chevalley generators satisfy (x_i^+, x_i^-) = 1 and h_i = [x_i^+, x_i^-], so that
 * a_j(h_i) = B_ij.
 */
#pragma once

#include "yrm/rational.hpp"

#include <climits>
#include <optional>
#include <string>
#include <vector>

namespace yrm {

/// Element of the root lattice in simple-root coordinates.
using Weight = std::vector<int>;

using RMatrix = std::vector<std::vector<Rational>>;

/**
 * @brief Cartan matrix with symmetrizers.
 */
struct CartanDatum {
    std::string name;
    std::vector<std::vector<int>> a;
    std::vector<int> d;

    int rank() const { return static_cast<int>(a.size()); }
    /// B_ij = d_i a_ij = (a_i, a_j).
    Rational B(int i, int j) const { return Rational(d[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]); }
    /// d_ij = B_ij / 2.
    Rational dij(int i, int j) const { return B(i, j) / 2; }
    RMatrix B_matrix() const;

    /// Named types: A1, A2, A3, B2, G2 (Bourbaki numbering).
    static CartanDatum named(const std::string& name);
    /// Raw matrix; symmetrizers derived (smallest equal to 1) when not supplied.
    static CartanDatum from_matrix(const std::vector<std::vector<int>>& a,
                                   const std::optional<std::vector<int>>& d = std::nullopt);
    /// Throws std::invalid_argument unless the datum is a connected finite-type Cartan matrix.
    void validate() const;
};

/// x_beta^+ = cplus [x_j^+, x_parent^+],  x_beta^- = cminus [x_parent^-, x_j^-].
struct RootChain {
    int j = -1;
    int parent = -1;
    Rational cplus = 1;
    Rational cminus = 1;
};

/// Sparse tensor term a (x) b over the normalized basis of g.
struct TensorTerm {
    int left;
    int right;
    Rational coeff;
};

/**
 * @brief Lie algebra data for a fixed Cartan datum.
 *
 * Basis order of g: x_beta^+ (roots in enumeration order), then h_i, then x_beta^-.
 * Positive roots are ordered by height, then reverse-lexicographically, so root
 * index i < rank is the simple root a_i.
 */
class LieData {
public:
    /// Builds everything; throws std::invalid_argument for invalid data.
    static LieData build(const CartanDatum& cartan);

    const CartanDatum& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank(); }
    int num_pos_roots() const { return static_cast<int>(roots_.size()); }
    int dim() const { return 2 * num_pos_roots() + rank(); }

    const std::vector<Weight>& positive_roots() const { return roots_; }
    const Weight& root(int idx) const { return roots_[static_cast<std::size_t>(idx)]; }
    /// Index of a positive root, or -1.
    int root_index(const Weight& w) const;
    int height(int idx) const;
    /// Seed node i(beta) of the adjoint word.
    int seed(int idx) const { return seeds_[static_cast<std::size_t>(idx)]; }
    const RootChain& chain(int idx) const { return chains_[static_cast<std::size_t>(idx)]; }
    /// omega(x_beta^+) = w_beta x_beta^-; equals 1 whenever the norm of the ad-word is a rational square.
    const Rational& omega_scale(int idx) const { return omega_scale_[static_cast<std::size_t>(idx)]; }
    /// beta(h_i) = sum_k n_k B_ik.
    Rational root_value(const Weight& beta, int i) const;
    /// Index of the highest root.
    int highest_root() const { return num_pos_roots() - 1; }

    // Basis indices.
    int xplus(int root) const { return root; }
    int hidx(int i) const { return num_pos_roots() + i; }
    int xminus(int root) const { return num_pos_roots() + rank() + root; }
    /// Weight of a basis element (negative for x^-).
    Weight basis_weight(int b) const;
    /// Chevalley flip on basis: x^+ <-> x^- (with scales), h fixed. Returns (image index, scale).
    std::pair<int, Rational> omega_basis(int b) const;

    /// Structure constants: [b1, b2] as a dense coordinate vector.
    std::vector<Rational> bracket(int b1, int b2) const;
    /// ad(b) as a dense matrix (column = image of a basis vector).
    const RMatrix& ad(int b) const { return ad_[static_cast<std::size_t>(b)]; }
    /// Invariant form on basis elements.
    const Rational& form(int b1, int b2) const { return form_[static_cast<std::size_t>(b1)][static_cast<std::size_t>(b2)]; }

    /// Casimir tensor sum over dual bases.
    const std::vector<TensorTerm>& casimir() const { return casimir_; }
    /// Canonical tensor r = sum_beta x_beta^- (x) x_beta^+.
    std::vector<TensorTerm> canonical_r() const;
    /// r_i = -sum_beta beta(h_i) x_beta^- (x) x_beta^+.
    std::vector<TensorTerm> r_i(int i) const;
    /// Casimir eigenvalue on the adjoint representation divided by 4.
    const Rational& kappa() const { return kappa_; }
    /// Casimir operator applied to a basis vector (dense).
    std::vector<Rational> casimir_action(int b) const;

    /// Minimal number of positive roots summing to beta; INT_MAX if impossible.
    int nu(const Weight& beta) const;

    /// Copy with the sign of one chain coefficient flipped (mutation testing).
    LieData with_flipped_chain_sign(int root) const;

private:
    CartanDatum cartan_;
    std::vector<Weight> roots_;
    std::vector<int> seeds_;
    std::vector<RootChain> chains_;
    std::vector<Rational> omega_scale_;
    std::vector<RMatrix> ad_;
    RMatrix form_;
    std::vector<TensorTerm> casimir_;
    Rational kappa_;
};

/// Positive roots by the root-string algorithm (height-ordered).
std::vector<Weight> positive_roots(const CartanDatum& c);

/// Text "(n1,n2,...)".
std::string weight_to_string(const Weight& w);

}  // namespace yrm
