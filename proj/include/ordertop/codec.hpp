#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordertop/errors.hpp"

namespace ordertop {

// Naturals are exact: codes produced by the pairing/prime encodings grow far
// beyond 64 bits as soon as words get long or letters get large.
using Nat = mpz_class;

std::string nat_str(const Nat& n);

// Nonempty finite word over the naturals.
struct Word {
  std::vector<Nat> letters;

  static Word of(std::vector<Nat> ls);
  static Word single(Nat l) { return of({std::move(l)}); }

  std::size_t length() const { return letters.size(); }
  bool prefix_of(const Word& other) const;  // non-strict
  Word extended(Nat letter) const;

  bool operator==(const Word&) const = default;
  bool operator<(const Word&) const;  // total order for containers, not the prefix order
};

// Index pair (a, b) with a < b, naming one copy of M inside L.
struct SlicePair {
  Nat a, b;

  static SlicePair make(Nat a, Nat b);  // throws CodecError unless a < b

  bool operator==(const SlicePair&) const = default;
  bool operator<(const SlicePair& o) const { return a < o.a || (a == o.a && b < o.b); }
  std::string str() const;
};

// Cantor pairing pi(u, v) = (u+v)(u+v+1)/2 + v and its exact inverse.
Nat cantor_pair(const Nat& u, const Nat& v);
std::pair<Nat, Nat> cantor_unpair(const Nat& k);

// word_code(w) = prod_i p_i^(w_i + 1) over the primes 2, 3, 5, ...
// Injective by unique factorization, strictly monotone under word extension,
// and never below 2. word_decode inverts exactly on the image: the exponent
// pattern must be gap-free starting at p_0.
Nat word_code(const Word& w);
std::optional<Word> word_decode(const Nat& h);

// The concrete injection i: i(a,b) is the image of w |-> pi(pi(a,b), word_code(w)).
struct SliceWord {
  SlicePair slice;
  Word word;
  bool operator==(const SliceWord&) const = default;
};
Nat f_encode(const SlicePair& s, const Word& w);
std::optional<SliceWord> f_decode(const Nat& k);
bool in_i(const Nat& k, const SlicePair& s);

// Fixed bijection phi: N -> {(a,b) : a < b} enumerating pairs by increasing b,
// then increasing a: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
// The choice is frozen; codes and the level sets E_n depend on it.
SlicePair phi(const Nat& n);
Nat phi_inv(const SlicePair& s);

// The unique n with k in E_n = i(phi(n)), if any.
std::optional<Nat> e_index(const Nat& k);

// Default choice value d(n) = f_encode(phi(n), [0]): the canonical member of E_n.
Nat e_default(const Nat& n);

}  // namespace ordertop
