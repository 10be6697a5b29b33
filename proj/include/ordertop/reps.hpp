#pragma once

#include <map>

#include "ordertop/codec.hpp"

namespace ordertop {

// Finitely presented total function N -> N: finitely many overrides over a
// constant tail. Only eventually-constant functions are representable; order
// decisions evaluate the function at finitely many determined indices, so
// this fragment carries every function the counterexample constructions use.
struct FnRep {
  std::map<Nat, Nat> overrides;  // normalized: no override equals the tail
  Nat tail;

  static FnRep make(std::map<Nat, Nat> overrides, Nat tail);
  Nat operator()(const Nat& k) const;
  bool operator==(const FnRep&) const = default;
  bool operator<(const FnRep& o) const {
    return tail < o.tail || (tail == o.tail && overrides < o.overrides);
  }
};

// Choice function for X: overrides over the global default d(n) = the
// canonical member of E_n. Every override at index n must lie in E_n.
struct XRep {
  std::map<Nat, Nat> overrides;  // normalized: no override equals d(key)

  static XRep make(std::map<Nat, Nat> overrides);  // throws InvalidXRepError
  Nat operator()(const Nat& n) const;
  bool operator==(const XRep&) const = default;
  bool operator<(const XRep& o) const { return overrides < o.overrides; }
};

}  // namespace ordertop
