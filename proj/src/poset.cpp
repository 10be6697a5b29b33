#include "ordertop/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

namespace ordertop {

ElemSet ElemSet::full(std::size_t universe) {
  ElemSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.set(i);
  return s;
}

std::size_t ElemSet::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElemSet::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

ElemSet& ElemSet::operator|=(const ElemSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

ElemSet& ElemSet::operator&=(const ElemSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

ElemSet& ElemSet::subtract(const ElemSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

ElemSet ElemSet::complement() const {
  ElemSet r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
  if (n_ & 63) r.w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  return r;
}

bool ElemSet::subset_of(const ElemSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

std::vector<std::size_t> ElemSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

void FinitePoset::index_labels() {
  index_.clear();
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, fresh] = index_.emplace(labels_[i], i);
    if (!fresh) throw DuplicateLabelError(labels_[i]);
  }
}

void FinitePoset::compute_down() {
  const std::size_t n = labels_.size();
  down_.assign(n, ElemSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (up_[i].test(j)) down_[j].set(i);
}

FinitePoset FinitePoset::from_relations(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  FinitePoset p;
  p.labels_ = std::move(labels);
  p.index_labels();
  const std::size_t n = p.labels_.size();

  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [a, b] : pairs) {
    succ[p.index_of(a)].push_back(p.index_of(b));
  }

  // Reachability closure by DFS from each source.
  p.up_.assign(n, ElemSet(n));
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i) {
    ElemSet& row = p.up_[i];
    row.set(i);
    stack.assign(1, i);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : succ[v]) {
        if (!row.test(w)) {
          row.set(w);
          stack.push_back(w);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.up_[i].test(j) && p.up_[j].test(i))
        throw CycleError(p.labels_[i], p.labels_[j]);
  p.compute_down();
  return p;
}

FinitePoset FinitePoset::from_closed_rows(std::vector<std::string> labels,
                                          std::vector<ElemSet> up_rows) {
  FinitePoset p;
  p.labels_ = std::move(labels);
  p.index_labels();
  p.up_ = std::move(up_rows);
  assert(p.up_.size() == p.labels_.size());
  p.compute_down();
  return p;
}

std::size_t FinitePoset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownLabelError(label);
  return it->second;
}

bool FinitePoset::leq(const std::string& a, const std::string& b) const {
  return leq_idx(index_of(a), index_of(b));
}

ElemSet FinitePoset::up_set(const ElemSet& s) const {
  ElemSet r(size());
  for (std::size_t i : s.indices()) r |= up_[i];
  return r;
}

ElemSet FinitePoset::down_set(const ElemSet& s) const {
  ElemSet r(size());
  for (std::size_t i : s.indices()) r |= down_[i];
  return r;
}

ElemSet FinitePoset::maximal_elements(const ElemSet& s) const {
  ElemSet r(size());
  for (std::size_t i : s.indices()) {
    ElemSet above = up_[i];
    above &= s;
    above.reset(i);
    if (!above.any()) r.set(i);
  }
  return r;
}

bool FinitePoset::is_directed(const ElemSet& s) const {
  auto idx = s.indices();
  if (idx.empty()) return false;
  // Pairwise upper bounds suffice on a finite carrier.
  for (std::size_t x = 0; x < idx.size(); ++x) {
    for (std::size_t y = x + 1; y < idx.size(); ++y) {
      ElemSet common = up_[idx[x]];
      common &= up_[idx[y]];
      common &= s;
      if (!common.any()) return false;
    }
  }
  return true;
}

std::optional<std::size_t> FinitePoset::sup_idx(const ElemSet& s) const {
  auto idx = s.indices();
  ElemSet upper = ElemSet::full(size());
  for (std::size_t i : idx) upper &= up_[i];
  // Least element of the upper-bound set.
  for (std::size_t u : upper.indices()) {
    if (upper.subset_of(up_[u])) return u;
  }
  return std::nullopt;
}

std::optional<std::string> FinitePoset::sup(const ElemSet& s) const {
  auto i = sup_idx(s);
  if (!i) return std::nullopt;
  return labels_[*i];
}

std::optional<std::size_t> FinitePoset::bottom() const {
  return sup_idx(ElemSet(size()));
}

FinitePoset FinitePoset::product(const FinitePoset& q) const {
  const std::size_t n = size(), m = q.size(), nm = n * m;
  std::vector<std::string> labels;
  labels.reserve(nm);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      labels.push_back("(" + labels_[i] + "," + q.labels_[j] + ")");
  std::vector<ElemSet> rows(nm, ElemSet(nm));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ElemSet& row = rows[i * m + j];
      for (std::size_t i2 : up_[i].indices())
        for (std::size_t j2 : q.up_[j].indices()) row.set(i2 * m + j2);
    }
  return from_closed_rows(std::move(labels), std::move(rows));
}

FinitePoset FinitePoset::disjoint_sum(const FinitePoset& q) const {
  const std::size_t n = size(), m = q.size();
  std::vector<std::string> labels;
  labels.reserve(n + m);
  for (const auto& l : labels_) labels.push_back("l:" + l);
  for (const auto& l : q.labels_) labels.push_back("r:" + l);
  std::vector<ElemSet> rows(n + m, ElemSet(n + m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : up_[i].indices()) rows[i].set(j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j : q.up_[i].indices()) rows[n + i].set(n + j);
  return from_closed_rows(std::move(labels), std::move(rows));
}

FinitePoset FinitePoset::lift_top() const {
  std::string top = "top";
  while (index_.count(top)) top += "'";
  const std::size_t n = size();
  std::vector<std::string> labels = labels_;
  labels.push_back(top);
  std::vector<ElemSet> rows(n + 1, ElemSet(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : up_[i].indices()) rows[i].set(j);
    rows[i].set(n);
  }
  rows[n].set(n);
  return from_closed_rows(std::move(labels), std::move(rows));
}

std::vector<std::pair<std::string, std::string>> FinitePoset::hasse_covers() const {
  std::vector<std::pair<std::string, std::string>> covers;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : up_[i].indices()) {
      if (j == i) continue;
      ElemSet between = up_[i];
      between &= down_[j];
      between.reset(i);
      between.reset(j);
      if (!between.any()) covers.emplace_back(labels_[i], labels_[j]);
    }
  }
  return covers;
}

ElemSet FinitePoset::set_of(const std::vector<std::string>& labels) const {
  ElemSet s(size());
  for (const auto& l : labels) s.set(index_of(l));
  return s;
}

std::vector<std::string> FinitePoset::labels_of(const ElemSet& s) const {
  std::vector<std::string> out;
  for (std::size_t i : s.indices()) out.push_back(labels_[i]);
  return out;
}

FinitePoset FinitePoset::parse_text(const std::string& text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string verb;
    if (!(ls >> verb) || verb[0] == '#') continue;
    if (verb == "elem") {
      std::string l;
      if (!(ls >> l)) throw ParseError("line " + std::to_string(lineno) + ": elem needs a label");
      labels.push_back(l);
    } else if (verb == "le") {
      std::string a, b;
      if (!(ls >> a >> b)) throw ParseError("line " + std::to_string(lineno) + ": le needs two labels");
      pairs.emplace_back(a, b);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + verb + "'");
    }
    std::string extra;
    if (ls >> extra && extra[0] != '#')
      throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
  }
  return from_relations(std::move(labels), pairs);
}

std::string FinitePoset::to_text() const {
  std::ostringstream out;
  for (const auto& l : labels_) out << "elem " << l << "\n";
  for (const auto& [a, b] : hasse_covers()) out << "le " << a << " " << b << "\n";
  return out.str();
}

std::string FinitePoset::to_dot() const {
  std::ostringstream out;
  out << "digraph poset {\n";
  for (const auto& l : labels_) out << "  \"" << l << "\";\n";
  for (const auto& [a, b] : hasse_covers()) out << "  \"" << a << "\" -> \"" << b << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ordertop
