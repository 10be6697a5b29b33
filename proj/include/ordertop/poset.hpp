#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordertop/errors.hpp"

namespace ordertop {

// Membership bit-vector over a finite carrier.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}
  static ElemSet full(std::size_t universe);

  std::size_t universe() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const;
  bool any() const;
  bool empty() const { return !any(); }

  ElemSet& operator|=(const ElemSet& o);
  ElemSet& operator&=(const ElemSet& o);
  ElemSet& subtract(const ElemSet& o);
  ElemSet complement() const;
  bool subset_of(const ElemSet& o) const;
  bool operator==(const ElemSet&) const = default;

  std::vector<std::size_t> indices() const;
  std::span<const std::uint64_t> words() const { return w_; }
  std::span<std::uint64_t> words() { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Finite poset over opaque string labels. The full reflexive-transitive
// relation is stored as bit rows, so order queries are O(1); topology
// enumeration dominates construction cost by far.
class FinitePoset {
 public:
  // Closes the generating pairs reflexively and transitively; rejects
  // duplicate labels and any antisymmetry violation introduced by closure.
  static FinitePoset from_relations(std::vector<std::string> labels,
                                    const std::vector<std::pair<std::string, std::string>>& pairs);

  // Adopts an already reflexive-transitive-antisymmetric relation given as
  // up-rows (row i = all j with i <= j). Verified in debug builds only.
  static FinitePoset from_closed_rows(std::vector<std::string> labels,
                                      std::vector<ElemSet> up_rows);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;  // throws UnknownLabelError

  bool leq(const std::string& a, const std::string& b) const;
  bool leq_idx(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  const ElemSet& up_row(std::size_t i) const { return up_[i]; }
  const ElemSet& down_row(std::size_t i) const { return down_[i]; }

  ElemSet up_set(const ElemSet& s) const;
  ElemSet down_set(const ElemSet& s) const;
  ElemSet maximal_elements(const ElemSet& s) const;
  bool is_directed(const ElemSet& s) const;
  // Least upper bound of s if it exists. sup of the empty set is the bottom
  // element when the poset has one.
  std::optional<std::string> sup(const ElemSet& s) const;
  std::optional<std::size_t> sup_idx(const ElemSet& s) const;
  std::optional<std::size_t> bottom() const;

  FinitePoset product(const FinitePoset& q) const;       // labels "(a,b)"
  FinitePoset disjoint_sum(const FinitePoset& q) const;  // labels "l:a" / "r:b"
  FinitePoset lift_top() const;                          // fresh top label

  // Transitive reduction of the strict order; from_relations on the covers
  // reconstructs the poset.
  std::vector<std::pair<std::string, std::string>> hasse_covers() const;

  ElemSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const ElemSet& s) const;

  // Line-oriented text format: `elem <label>`, `le <a> <b>`, `#` comments.
  static FinitePoset parse_text(const std::string& text);
  std::string to_text() const;
  std::string to_dot() const;

 private:
  FinitePoset() = default;
  void index_labels();
  void compute_down();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
};

}  // namespace ordertop
