#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordertop/b_poset.hpp"

namespace ordertop {

// Point of P1 = (N^N x N) u B u {top1}.
struct P1Point {
  struct FnLevel {
    FnRep f;
    Nat n;
    bool operator==(const FnLevel&) const = default;
    bool operator<(const FnLevel& o) const { return f < o.f || (f == o.f && n < o.n); }
  };
  struct Top {
    bool operator==(const Top&) const = default;
    bool operator<(const Top&) const { return false; }
  };
  std::variant<FnLevel, BElem, Top> v;

  static P1Point fn(FnRep f, Nat n) { return P1Point{FnLevel{std::move(f), std::move(n)}}; }
  static P1Point in_b(BElem e) { return P1Point{std::move(e)}; }
  static P1Point top() { return P1Point{Top{}}; }
  bool is_top() const { return v.index() == 2; }
  bool is_b() const { return v.index() == 1; }
  const BElem& b() const { return std::get<BElem>(v); }

  bool operator==(const P1Point&) const = default;
  bool operator<(const P1Point& o) const { return v < o.v; }
};

// Point of P2 = ((X x N) x N) u B u {top2}.
struct P2Point {
  struct XfLevel {
    XRep f;
    Nat n, k;
    bool operator==(const XfLevel&) const = default;
    bool operator<(const XfLevel& o) const {
      if (!(f == o.f)) return f < o.f;
      if (n != o.n) return n < o.n;
      return k < o.k;
    }
  };
  struct Top {
    bool operator==(const Top&) const = default;
    bool operator<(const Top&) const { return false; }
  };
  std::variant<XfLevel, BElem, Top> v;

  static P2Point xf(XRep f, Nat n, Nat k) {
    return P2Point{XfLevel{std::move(f), std::move(n), std::move(k)}};
  }
  static P2Point in_b(BElem e) { return P2Point{std::move(e)}; }
  static P2Point top() { return P2Point{Top{}}; }
  bool is_top() const { return v.index() == 2; }
  bool is_b() const { return v.index() == 1; }
  const BElem& b() const { return std::get<BElem>(v); }

  bool operator==(const P2Point&) const = default;
  bool operator<(const P2Point& o) const { return v < o.v; }
};

bool p1_leq(const P1Point& u, const P1Point& v);
bool p2_leq(const P2Point& u, const P2Point& v);

struct ProductPoint {
  P1Point x;
  P2Point y;
  bool operator==(const ProductPoint&) const = default;
  bool operator<(const ProductPoint& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline bool p12_leq(const ProductPoint& u, const ProductPoint& v) {
  return p1_leq(u.x, v.x) && p2_leq(u.y, v.y);
}

// Symbolic description of (up-set of u) intersected with max B, per side.
std::vector<UpperBoundFamily> p1_upper_max_families(const P1Point& u);
std::vector<UpperBoundFamily> p2_upper_max_families(const P2Point& u);

// A common Top-typed element of two families, if any. Complete case
// analysis over the family kinds; each case needs only finitely many
// candidate probes.
std::optional<BElem> family_intersect(const UpperBoundFamily& f, const UpperBoundFamily& g);

// Membership in A = down-closure of {(a, a) : a in max B}, decided by
// intersecting the two sides' symbolic upper-bound families. The witness is
// the common Top-typed element.
std::optional<BElem> a_member(const ProductPoint& p);

// The alternating walk used to meet two opens inside A: climb from
// (m2, n, k0) in slice (m1, m2) through Top-typed elements, appending one
// letter per stage. Every recorded link is b_leq-checked on construction.
struct ChainLink {
  BElem lo, hi;
  std::string rule;
};
struct InterleaveChain {
  std::vector<ChainLink> links;   // alternating up/down walk, all lo <= hi
  std::vector<BElem> tops;        // Top-typed stages, one per letter
  std::vector<BElem> word_elems;  // (m1, n, [k0..kj]) per stage, each below tops[j]
  BElem v_start;                  // (m2, n, (k0)) below tops[0]
  BElem final_elem;               // == tops.back()
};
InterleaveChain interleave_chain(const Nat& m1, const Nat& m2, const Nat& n,
                                 const std::vector<Nat>& letters);

// One level-climbing stage: from (m, n, [k0]) in slice (m, m+1) to
// (f_encode((m, m+1), [k0]), n+1, top). Note the departing element is the
// word-typed one; the nat-typed (m, n, (k0)) sits below the same target only
// through the slice b-component, i.e. from (m+1, n, (k0)).
struct ClimbStep {
  BElem from_word;  // (m, n, [k0] in slice (m, m+1))
  BElem to;         // (f_encode((m, m+1), [k0]), n+1, top)
};
ClimbStep climb_level(const Nat& m, const Nat& n, const Nat& k0);

struct Exhausted {
  std::uint64_t budget;
};

// Searches for a diagonal point of A outside both down-closures; reports
// Exhausted instead of claiming a refutation.
std::variant<ProductPoint, Exhausted> a_escape(const std::vector<ProductPoint>& f1,
                                               const std::vector<ProductPoint>& f2,
                                               std::uint64_t budget);

// A witness that A is not contained in the principal ideal of p: a diagonal
// point of A not below p. Exhausts only when p dominates every diagonal
// candidate, i.e. p = (top1, top2).
std::variant<BElem, Exhausted> not_point_closure(const ProductPoint& p, std::uint64_t budget);

// Directed family in P1 x P2 with one coordinate fixed, per the
// coordinatewise Scott-closedness criterion.
struct CoordFamily {
  struct BLeft {  // left coordinate moves along a B-family
    BFamily fam;
    P2Point fixed_right;
  };
  struct BRight {
    P1Point fixed_left;
    BFamily fam;
  };
  struct FnLevelsLeft {  // left coordinate runs over (f, n) with unbounded n
    FnRep f;
    P2Point fixed_right;
  };
  struct XfLevelsRight {  // right coordinate runs over (f, n, k) with unbounded n
    P1Point fixed_left;
    XRep f;
    Nat k;
  };
  std::variant<BLeft, BRight, FnLevelsLeft, XfLevelsRight> v;
};

ProductPoint coord_family_member(const CoordFamily& d, std::uint64_t i);
ProductPoint coord_family_sup(const CoordFamily& d);

// Verifies the sampled members lie in A (throws FamilyNotInAError otherwise)
// and reports whether the coordinatewise sup stays in A.
bool a_closed_check(const CoordFamily& d, std::uint64_t sample_count = 12);

}  // namespace ordertop
