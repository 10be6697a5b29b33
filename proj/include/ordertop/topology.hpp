#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordertop/poset.hpp"

namespace ordertop {

// Family of subsets of a fixed universe, stored flat (stride words per set)
// and kept sorted and duplicate-free. Large open families (millions of sets)
// make per-set heap allocation a non-starter.
class BitFamily {
 public:
  BitFamily() = default;
  explicit BitFamily(std::size_t universe)
      : universe_(universe), stride_((universe + 63) / 64) {}

  std::size_t universe() const { return universe_; }
  std::size_t stride() const { return stride_; }
  std::size_t count() const { return stride_ ? data_.size() / stride_ : 0; }

  void append(std::span<const std::uint64_t> set);
  void append(const ElemSet& s) { append(s.words()); }
  void sort_unique();
  bool contains(std::span<const std::uint64_t> set) const;  // requires sorted
  std::span<const std::uint64_t> row(std::size_t i) const {
    return {data_.data() + i * stride_, stride_};
  }
  ElemSet as_elemset(std::size_t i) const;
  void reserve_sets(std::size_t n) { data_.reserve(n * stride_); }

  bool operator==(const BitFamily&) const = default;

 private:
  std::size_t universe_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

struct SobrietyReport {
  struct Irreducible {
    ElemSet closed;
    std::optional<std::size_t> generic;  // index of the unique generic point
  };
  bool sober = false;
  std::vector<Irreducible> irreducibles;
};

struct SupContinuityReport {
  bool continuous = false;
  // Monotonicity failure witness ((a,b) <= (a2,b2) but sup(a,b) !<= sup(a2,b2)).
  std::optional<std::array<std::string, 4>> witness;
};

// Finite T0-ish space: carrier plus its family of open sets (canonically
// sorted bit-sets; topology equality is set-of-sets equality, bit exact).
class FiniteSpace {
 public:
  static FiniteSpace make(std::vector<std::string> carrier, BitFamily opens);

  std::size_t size() const { return carrier_.size(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const BitFamily& opens() const { return opens_; }

  bool is_t0() const;
  ElemSet closure(const ElemSet& s) const;
  FinitePoset specialization_order() const;  // throws NotT0Error

  // All nonempty closed C that are not the union of two strictly smaller
  // closed subsets. The pair-quantified definition is kept as a test oracle.
  std::vector<ElemSet> irreducible_closed_sets() const;
  SobrietyReport sobriety() const;  // throws NotT0Error
  std::string sobriety_json() const;

  // Validates the finite topology axioms by brute force; intended for tests
  // and small spaces.
  void validate() const;

 private:
  FiniteSpace() = default;
  std::vector<std::string> carrier_;
  BitFamily opens_;
};

inline constexpr std::size_t kDefaultOpenCap = std::size_t{1} << 20;

// The open sets of a finite poset: all up-sets. On a finite poset every
// directed set has a greatest element, so this up-set (Alexandrov) topology
// is exactly the Scott topology. Throws CapExceededError if the family would
// exceed `cap` opens.
FiniteSpace alexandrov_space(const FinitePoset& p, std::size_t cap = kDefaultOpenCap);

// The complete lattice of up-sets of p, as a poset ordered by inclusion.
FinitePoset open_set_lattice(const FinitePoset& p, std::size_t cap = kDefaultOpenCap);

// Topology on carrier(s) x carrier(t) generated by the open rectangles
// U x V, closed under unions.
FiniteSpace product_space(const FiniteSpace& s, const FiniteSpace& t,
                          std::size_t cap = kDefaultOpenCap);

// Exact equality of open families over the same carrier (labels must match
// as sets; throws CarrierMismatchError otherwise).
bool spaces_equal(const FiniteSpace& s, const FiniteSpace& t);

// Joint continuity of the binary sup map lat x lat -> lat for the up-set
// topologies; on a finite lattice this is equivalent to monotonicity, which
// is what gets checked, witness included. Throws NotALatticeError when some
// pairwise sup is missing.
SupContinuityReport sup_map_jointly_continuous(const FinitePoset& lat);

}  // namespace ordertop
