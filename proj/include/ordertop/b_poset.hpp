#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ordertop/codec.hpp"
#include "ordertop/reps.hpp"

namespace ordertop {

// Element of M, the disjoint sum of (N, <=) and the nonempty finite words
// under the prefix order. A length-1 word is not the same element as its
// number.
struct MElem {
  std::variant<Nat, Word> v;

  static MElem nat(Nat n) { return MElem{std::move(n)}; }
  static MElem word(Word w) { return MElem{std::move(w)}; }
  bool is_nat() const { return v.index() == 0; }
  const Nat& nat_value() const { return std::get<0>(v); }
  const Word& word_value() const { return std::get<1>(v); }

  bool operator==(const MElem&) const = default;
  bool operator<(const MElem& o) const;  // container order, not the poset order
};

bool m_leq(const MElem& x, const MElem& y);
inline bool m_lt(const MElem& x, const MElem& y) { return !(x == y) && m_leq(x, y); }

// Element of L: either the top, or an element of the slice copy M_{a,b}.
// Distinct slices are mutually incomparable; the top sits above everything.
struct LElem {
  struct At {
    SlicePair slice;
    MElem m;
    bool operator==(const At&) const = default;
  };
  std::optional<At> at;  // nullopt = top

  static LElem top() { return LElem{std::nullopt}; }
  static LElem in_slice(SlicePair s, MElem m) { return LElem{At{std::move(s), std::move(m)}}; }
  bool is_top() const { return !at.has_value(); }

  bool operator==(const LElem&) const = default;
  bool operator<(const LElem& o) const;
};

bool l_leq(const LElem& x, const LElem& y);
inline bool l_lt(const LElem& x, const LElem& y) { return !(x == y) && l_leq(x, y); }

// Element of B = N x N x L.
struct BElem {
  Nat m, n;
  LElem l;

  bool operator==(const BElem&) const = default;
  bool operator<(const BElem& o) const;
};

BElem b_top(Nat m, Nat n);

// Decides the order on B by closed-form case analysis over the generating
// relations and their compositions through the first one.
bool b_leq(const BElem& u, const BElem& v);

// Maximal elements of B are exactly those whose L-component is the top.
inline bool is_b_maximal(const BElem& e) { return e.l.is_top(); }

// Explicit truncation bounds for the finite windows the oracles run on.
struct BWindow {
  std::uint32_t max_m = 4;
  std::uint32_t max_n = 4;
  std::uint32_t max_word_len = 2;
  std::uint32_t max_letter = 2;
  std::vector<SlicePair> slices;
  bool include_codes = true;

  static BWindow standard();  // the default oracle window
  void validate() const;      // throws BoundsError when the window is empty
};

// Deterministic, duplicate-free enumeration of every BElem within the
// window, m-components including the codes of in-window slice/word pairs.
std::vector<BElem> b_enumerate(const BWindow& w);

// Reachability oracle: builds every generator edge among in-window elements,
// takes the reflexive-transitive closure, and answers order queries by
// reachability. Independent of b_leq's case analysis.
class BTruncation {
 public:
  explicit BTruncation(BWindow w);

  const std::vector<BElem>& elements() const { return elems_; }
  std::optional<std::size_t> index_of(const BElem& e) const;
  bool leq_idx(std::size_t i, std::size_t j) const {
    return (reach_[i * stride_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  bool leq(const BElem& u, const BElem& v) const;  // throws BoundTooSmallError

 private:
  BWindow window_;
  std::vector<BElem> elems_;
  std::map<BElem, std::size_t> index_;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> reach_;
};

bool b_leq_oracle(const BElem& u, const BElem& v, const BWindow& w);

// Canonical directed subsets of B without greatest elements: a fixed (m, n)
// and slice, with the M-component running over the naturals or along a fixed
// growing word chain.
struct AllNatsTail {
  bool operator==(const AllNatsTail&) const = default;
};
struct WordChainTail {
  Word seed;
  std::vector<Nat> steps;  // letters appended one per stage; zeros after the last
  bool operator==(const WordChainTail&) const = default;
};

struct BFamily {
  Nat m, n;
  SlicePair slice;
  std::variant<AllNatsTail, WordChainTail> tail;
};

BElem family_member(const BFamily& d, std::uint64_t k);
BElem family_sup(const BFamily& d);

// Infers the canonical family a finite sample is a prefix of. Rejects
// singletons and anything that is not a same-slice chain pattern: families
// have no greatest element, so no finite set is one.
BFamily infer_family(std::span<const BElem> members);

// Symbolic descriptions of the pieces of an upper set intersected with
// max B. Every described element is Top-typed.
struct UbSing {
  BElem elem;
};
struct UbWordExt {  // {(f_encode(slice, y), level, top) : base prefix of y}
  SlicePair slice;
  Word base;
  Nat level;
};
struct UbNumExt {  // {(f_encode(slice, [y]), level, top) : y >= base}
  SlicePair slice;
  Nat base;
  Nat level;
};
struct UbAppendExt {  // {(f_encode(slice, prefix.y), level, top) : y >= base}
  SlicePair slice;
  Word prefix;
  Nat base;
  Nat level;
};
struct UbFnDiag {  // {(fn(k), k, top) : k >= min_level}
  FnRep fn;
  Nat min_level;
};
struct UbXDiag {  // {(fn(m), level, top) : m >= min_index}
  XRep fn;
  Nat min_index;
  Nat level;
};
using UpperBoundFamily =
    std::variant<UbSing, UbWordExt, UbNumExt, UbAppendExt, UbFnDiag, UbXDiag>;

bool family_contains(const UpperBoundFamily& f, const BElem& t);

// Exact finite union of families covering the Top-typed elements above e.
std::vector<UpperBoundFamily> b_upper_max_families(const BElem& e);

// Bounded concrete sample of a family's members, for cross-validation.
struct FamilySampleBounds {
  std::uint32_t count = 8;        // range length for indexed families
  std::uint32_t max_ext_len = 2;  // extra letters for word extensions
  std::uint32_t max_letter = 2;
};
std::vector<BElem> family_sample(const UpperBoundFamily& f, const FamilySampleBounds& b);

}  // namespace ordertop
