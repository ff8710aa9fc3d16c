/**
 * @file yangian_impl.hpp
 * @brief Private state of yrm::Yangian: Y^+ slice engine, straightening memos, Hopf memos.
 *
 * Words are sequences of keys. A "triple word" is P ++ H ++ Q with P a word in
 * simple x^+ letters, H a sorted list of h keys and Q a word in simple x^- letters.
 */
#pragma once

#include "yrm/linalg.hpp"
#include "yrm/yangian.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

namespace yrm {

using Word = std::vector<Key>;
using WComb = LinComb<Word>;

/// One (weight, degree) slice of Y^+ with hbar counted in the degree.
struct PlusSlice {
    Weight beta;
    int n = 0;
    std::vector<Word> words;                  ///< hbar-free words in simple letters
    std::map<Word, int> word_idx;
    int lower_count = 0;                      ///< hbar times the PBW basis of slice (beta, n-1)
    std::vector<std::pair<int, Mono>> pbw;    ///< (hbar power, ordered monomial)
    Echelon ech;
    SliceStats stats;
    std::map<Word, SparseVec> memo;           ///< word -> coordinates on pbw

    int tag_offset() const { return static_cast<int>(words.size()) + lower_count; }
};

struct Yangian::Impl {
    explicit Impl(LieData l);

    LieData lie;
    int P = 0;       // number of positive roots
    int rank = 0;
    mutable std::recursive_mutex mu;

    // Key helpers.
    Key xp(int root, int mode) const { return make_key(Kind::XPlus, root, mode); }
    Key xm(int root, int mode) const { return make_key(Kind::XMinus, root, mode); }
    Key hk(int node, int mode) const { return make_key(Kind::H, node, mode); }
    Weight key_weight(Key k) const;
    int key_mode(Key k) const { return decode(k).mode; }

    // Root vector expansion into simple letters.
    std::map<Key, WComb> expand_cache;
    const WComb& expand_letter(Key k);
    WComb expand_word(const Word& w);

    // Y^+ slices.
    std::map<std::pair<Weight, int>, std::unique_ptr<PlusSlice>> slices;
    std::map<std::tuple<int, int, std::vector<int>, int>, WComb> serre_cache;
    PlusSlice& slice(const Weight& beta, int n);
    void build_slice(PlusSlice& s);
    const SparseVec& slice_reduce(PlusSlice& s, const Word& w);
    const WComb& serre_element(int i, int j, const std::vector<int>& r, int s);

    std::map<Word, YElement> reduce_plus_cache;
    std::map<Word, YElement> reduce_minus_cache;
    /// Normal form of a word of x^+ letters (root vectors allowed).
    const YElement& reduce_plus(const Word& w);
    /// Normal form of a word of x^- letters (root vectors allowed), via omega.
    const YElement& reduce_minus(const Word& w);

    // h through x commutation.
    std::map<std::tuple<int, int, int, int>, WComb> hcomm_cache;
    std::map<std::pair<Key, Word>, WComb> h_through_cache;
    std::map<std::pair<Word, Word>, WComb> hs_through_cache;
    std::map<std::pair<Word, Word>, WComb> straighten_cache;
    const WComb& hcomm(int i, int r, int j, int s);
    const WComb& h_through_plus(Key h, const Word& p);
    const WComb& hs_through_plus(const Word& hs, const Word& p);
    WComb minus_through_hs(const Word& q, const Word& hs);
    const WComb& straighten(const Word& u, const Word& v);

    // Products.
    std::map<std::pair<Mono, Mono>, YElement> mono_mul_cache;
    const YElement& mono_mul(const Mono& a, const Mono& b);
    YElement multiply(const YElement& a, const YElement& b);
    YElement normal_form(const Word& w, const HPoly& c);

    // omega on monomials: returns (scale, image).
    std::pair<Rational, Mono> omega_mono(const Mono& m) const;
    std::pair<Rational, Key> omega_key(Key k) const;

    // Hopf memos.
    std::map<std::pair<int, int>, YElement> t_cache;
    std::map<Key, YTensor> delta_cache;
    std::map<Key, YElement> antipode_cache;
    const YElement& derived_t(int i, int r);
    YTensor tmul(const YTensor& a, const YTensor& b);
    YTensor tensor2(const YElement& a, const YElement& b);
    YTensor delta_t(int i);
    const YTensor& delta_letter(Key k);
    YElement antipode_t(int i);
    const YElement& antipode_letter(Key k);
};

/// Splits a triple word into its x^+, h and x^- parts.
struct Split {
    Word p, h, q;
};
Split split_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word concat3(const Word& a, const Word& b, const Word& c);
Word merge_sorted(const Word& a, const Word& b);

}  // namespace yrm
