/**
 * @file yangian.hpp
 * @brief The Yangian Y_h(g) with PBW normal forms, Hopf structure, involutions and shifts.
 *
 * Generators are packed into 32-bit keys whose numeric order is the PBW order:
 * all x^+ root vectors (by root, then mode), then h (by node, then mode), then
 * x^- root vectors mirrored so that omega reverses the order.
 */
#pragma once

#include "yrm/liealg.hpp"
#include "yrm/lincomb.hpp"
#include "yrm/series.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace yrm {

enum class Kind : std::uint32_t { XPlus = 0, H = 1, XMinus = 2 };

using Key = std::uint32_t;
/// Ordered PBW monomial (nondecreasing keys); the empty monomial is 1.
using Mono = std::vector<Key>;
using YElement = LinComb<Mono>;
/// Tuple of monomials, one per tensor leg.
using TKey = std::vector<Mono>;
using YTensor = LinComb<TKey>;

/// Decoded generator; `a` is a root index for x^+/x^- and a node for h.
struct Gen {
    Kind kind;
    int a;
    int mode;
};

Key make_key(Kind kind, int a, int mode);
Gen decode(Key k);
inline Kind key_kind(Key k) { return static_cast<Kind>(k >> 28); }

/// Dimension bookkeeping of one (weight, degree) slice of Y^+.
struct SliceStats {
    Weight beta;
    int degree = 0;
    int columns = 0;   ///< hbar^k * words of the slice
    int rank = 0;      ///< rank of the relation rows
    int pbw = 0;       ///< ordered monomials times hbar powers
};

/**
 * @brief Computable model of Y_h(g) for fixed Lie data.
 *
 * Copies share caches. All results are normal-formed.
 */
class Yangian {
public:
    explicit Yangian(LieData lie);

    const LieData& lie() const;
    int rank() const { return lie().rank(); }

    // Generators.
    Key xplus(int root, int mode) const { return make_key(Kind::XPlus, root, mode); }
    Key xminus(int root, int mode) const { return make_key(Kind::XMinus, root, mode); }
    Key h(int node, int mode) const { return make_key(Kind::H, node, mode); }
    YElement one() const { return YElement(Mono{}, HPoly(1)); }
    YElement gen(Key k) const { return YElement(Mono{k}, HPoly(1)); }

    // Gradings.
    int degree(const Mono& m) const;
    Weight weight(const Mono& m) const;
    Weight key_weight(Key k) const;

    // Algebra.
    YElement multiply(const YElement& a, const YElement& b) const;
    YElement commutator(const YElement& a, const YElement& b) const;
    /// Normal form of an arbitrary product of generators (root vectors allowed).
    YElement normal_form(const std::vector<Key>& word, const HPoly& coeff = HPoly(1)) const;
    /// t_{ir} from log(1 + h h_i(u)).
    YElement derived_t(int i, int r) const;
    /// T(zeta) = sum_i c_i t_{i1}.
    YElement cartan_T(const std::vector<Rational>& c) const;

    // Hopf structure.
    YTensor coproduct(const YElement& a) const;
    HPoly counit(const YElement& a) const;
    YElement antipode(const YElement& a) const;

    // Involutions and shifts.
    YElement omega(const YElement& a) const;
    YElement varsigma(const YElement& a) const;
    YElement chev_kappa(const YElement& a) const;
    /// tau_z(a) as a polynomial in z (positive exponents) with the given cutoff context.
    ZSeries<YElement> tau(const YElement& a, Truncation t) const;
    /// tau_c(a) for a rational shift c.
    YElement tau_at(const YElement& a, const Rational& c) const;

    // Tensors.
    YTensor tensor(const std::vector<YElement>& legs) const;
    YTensor tmul(const YTensor& a, const YTensor& b) const;
    /// Leg permutation: result leg k is input leg perm[k].
    YTensor permute(const YTensor& a, const std::vector<int>& perm) const;
    /// Embeds an arity-m tensor into arity n, placing input leg k at position pos[k].
    YTensor embed(const YTensor& a, int n, const std::vector<int>& pos) const;
    /// Applies a linear map to one leg; the map returns an element or a tensor spread over several legs.
    YTensor map_leg(const YTensor& a, int leg, const std::function<YElement(const YElement&)>& f) const;
    YTensor map_leg_tensor(const YTensor& a, int leg, const std::function<YTensor(const YElement&)>& f) const;
    /// Multiplication of the legs of an arity-2 tensor.
    YElement mult_legs(const YTensor& a) const;
    /// [T (x) 1 + 1 (x) T, a] for arity-2 tensors.
    YTensor adjoint(const YElement& T, const YTensor& a) const;

    // Y^+ slice engine.
    SliceStats plus_slice(const Weight& beta, int degree) const;

    // Text.
    std::string key_to_string(Key k) const;
    std::string mono_to_string(const Mono& m) const;
    Mono parse_mono(const std::string& text) const;
    std::string element_to_string(const YElement& a) const;

    struct Impl;

private:
    std::shared_ptr<Impl> impl_;
};

}  // namespace yrm
