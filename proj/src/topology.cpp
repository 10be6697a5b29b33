#include "ordertop/topology.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>

#include "json.hpp"

namespace ordertop {

void BitFamily::append(std::span<const std::uint64_t> set) {
  assert(set.size() == stride_);
  data_.insert(data_.end(), set.begin(), set.end());
}

namespace {

struct RowLess {
  std::size_t stride;
  bool operator()(const std::uint64_t* a, const std::uint64_t* b) const {
    for (std::size_t k = stride; k-- > 0;) {
      if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
  }
};

}  // namespace

void BitFamily::sort_unique() {
  if (stride_ == 0 || data_.empty()) return;
  const std::size_t n = count();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  RowLess less{stride_};
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return less(data_.data() + a * stride_, data_.data() + b * stride_);
  });
  std::vector<std::uint64_t> out;
  out.reserve(data_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t* row = data_.data() + order[i] * stride_;
    if (!out.empty() &&
        std::equal(row, row + stride_, out.data() + out.size() - stride_))
      continue;
    out.insert(out.end(), row, row + stride_);
  }
  data_ = std::move(out);
}

bool BitFamily::contains(std::span<const std::uint64_t> set) const {
  RowLess less{stride_};
  std::size_t lo = 0, hi = count();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    const std::uint64_t* row = data_.data() + mid * stride_;
    if (less(row, set.data()))
      lo = mid + 1;
    else if (less(set.data(), row))
      hi = mid;
    else
      return true;
  }
  return false;
}

ElemSet BitFamily::as_elemset(std::size_t i) const {
  ElemSet s(universe_);
  auto r = row(i);
  std::copy(r.begin(), r.end(), s.words().begin());
  return s;
}

FiniteSpace FiniteSpace::make(std::vector<std::string> carrier, BitFamily opens) {
  FiniteSpace s;
  s.carrier_ = std::move(carrier);
  s.opens_ = std::move(opens);
  s.opens_.sort_unique();
  ElemSet empty(s.carrier_.size());
  ElemSet full = ElemSet::full(s.carrier_.size());
  if (!s.opens_.contains(empty.words()) || !s.opens_.contains(full.words()))
    throw CarrierMismatchError("a topology contains the empty set and the carrier");
  return s;
}

void FiniteSpace::validate() const {
  const std::size_t n = opens_.count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ElemSet u = opens_.as_elemset(i), v = opens_.as_elemset(j);
      ElemSet un = u;
      un |= v;
      ElemSet in = u;
      in &= v;
      if (!opens_.contains(un.words()) || !opens_.contains(in.words()))
        throw CarrierMismatchError("opens not closed under union/intersection");
    }
  }
}

bool FiniteSpace::is_t0() const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool separated = false;
      for (std::size_t i = 0; i < opens_.count() && !separated; ++i) {
        ElemSet u = opens_.as_elemset(i);
        if (u.test(x) != u.test(y)) separated = true;
      }
      if (!separated) return false;
    }
  }
  return true;
}

ElemSet FiniteSpace::closure(const ElemSet& s) const {
  // Smallest closed superset: complement of the union of opens missing s.
  ElemSet acc(size());
  for (std::size_t i = 0; i < opens_.count(); ++i) {
    ElemSet u = opens_.as_elemset(i);
    ElemSet meet = u;
    meet &= s;
    if (!meet.any()) acc |= u;
  }
  return acc.complement();
}

FinitePoset FiniteSpace::specialization_order() const {
  const std::size_t n = size();
  // x <= y iff x lies in the closure of {y}, i.e. every open around x has y.
  std::vector<ElemSet> rows(n, ElemSet::full(n));
  for (std::size_t i = 0; i < opens_.count(); ++i) {
    ElemSet u = opens_.as_elemset(i);
    for (std::size_t x : u.indices()) rows[x] &= u;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (rows[x].test(y) && rows[y].test(x)) throw NotT0Error(carrier_[x], carrier_[y]);
  return FinitePoset::from_closed_rows(carrier_, std::move(rows));
}

std::vector<ElemSet> FiniteSpace::irreducible_closed_sets() const {
  const std::size_t n = opens_.count();
  std::vector<ElemSet> closed;
  closed.reserve(n);
  for (std::size_t i = 0; i < n; ++i) closed.push_back(opens_.as_elemset(i).complement());
  std::vector<ElemSet> irr;
  for (const ElemSet& c : closed) {
    if (!c.any()) continue;
    // Closed families are union-closed, so C is the union of two strictly
    // smaller closed subsets iff the union of all of them is already C.
    ElemSet acc(size());
    for (const ElemSet& d : closed) {
      if (d.subset_of(c) && d != c) acc |= d;
    }
    if (!(acc == c)) irr.push_back(c);
  }
  std::sort(irr.begin(), irr.end(), [](const ElemSet& a, const ElemSet& b) {
    auto wa = a.words(), wb = b.words();
    return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
  });
  return irr;
}

SobrietyReport FiniteSpace::sobriety() const {
  specialization_order();  // rejects non-T0 carriers with the offending pair
  std::vector<ElemSet> point_closure;
  point_closure.reserve(size());
  for (std::size_t x = 0; x < size(); ++x) {
    ElemSet s(size());
    s.set(x);
    point_closure.push_back(closure(s));
  }
  SobrietyReport report;
  report.sober = true;
  for (const ElemSet& c : irreducible_closed_sets()) {
    std::optional<std::size_t> generic;
    bool unique = true;
    for (std::size_t x = 0; x < size(); ++x) {
      if (point_closure[x] == c) {
        if (generic) unique = false;
        generic = x;
      }
    }
    if (!generic || !unique) report.sober = false;
    report.irreducibles.push_back({c, unique ? generic : std::nullopt});
  }
  return report;
}

std::string FiniteSpace::sobriety_json() const {
  SobrietyReport r = sobriety();
  nlohmann::ordered_json j;
  j["sober"] = r.sober;
  j["irreducibles"] = nlohmann::ordered_json::array();
  for (const auto& irr : r.irreducibles) {
    nlohmann::ordered_json e;
    e["closed"] = nlohmann::ordered_json::array();
    for (std::size_t i : irr.closed.indices()) e["closed"].push_back(carrier_[i]);
    if (irr.generic)
      e["generic"] = carrier_[*irr.generic];
    else
      e["generic"] = nullptr;
    j["irreducibles"].push_back(std::move(e));
  }
  return j.dump(2);
}

namespace {

// Linear extension with all strict superiors first: row count grows strictly
// downward, so sorting by |up-row| works.
std::vector<std::size_t> maxima_first_order(const FinitePoset& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.up_row(a).count() < p.up_row(b).count();
  });
  return order;
}

void enumerate_up_sets(const FinitePoset& p, std::size_t cap,
                       BitFamily& out) {
  const std::size_t n = p.size();
  const std::size_t stride = (n + 63) / 64;
  std::vector<std::size_t> order = maxima_first_order(p);
  // strict_up[i] as raw words for fast subset tests.
  std::vector<std::uint64_t> strict(n * std::max<std::size_t>(stride, 1), 0);
  for (std::size_t i = 0; i < n; ++i) {
    ElemSet s = p.up_row(i);
    s.reset(i);
    std::copy(s.words().begin(), s.words().end(), strict.begin() + i * stride);
  }
  std::vector<std::uint64_t> cur(std::max<std::size_t>(stride, 1), 0);
  std::size_t produced = 0;

  auto subset_of_cur = [&](const std::uint64_t* row) {
    for (std::size_t k = 0; k < stride; ++k)
      if (row[k] & ~cur[k]) return false;
    return true;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      if (++produced > cap) throw CapExceededError(std::to_string(cap) + " opens");
      out.append(std::span<const std::uint64_t>(cur.data(), stride));
      return;
    }
    std::size_t x = order[depth];
    self(self, depth + 1);  // exclude x
    if (subset_of_cur(strict.data() + x * stride)) {
      cur[x >> 6] |= std::uint64_t{1} << (x & 63);
      self(self, depth + 1);  // include x
      cur[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    }
  };
  if (n == 0) {
    out.append(std::span<const std::uint64_t>(cur.data(), 0));
    return;
  }
  rec(rec, 0);
}

}  // namespace

FiniteSpace alexandrov_space(const FinitePoset& p, std::size_t cap) {
  BitFamily fam(p.size());
  enumerate_up_sets(p, cap, fam);
  return FiniteSpace::make(p.labels(), std::move(fam));
}

FinitePoset open_set_lattice(const FinitePoset& p, std::size_t cap) {
  BitFamily fam(p.size());
  enumerate_up_sets(p, cap, fam);
  fam.sort_unique();
  const std::size_t m = fam.count();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    ElemSet s = fam.as_elemset(i);
    std::string l = "{";
    bool first = true;
    for (std::size_t x : s.indices()) {
      if (!first) l += ",";
      l += p.label(x);
      first = false;
    }
    l += "}";
    labels.push_back(std::move(l));
  }
  std::vector<ElemSet> rows(m, ElemSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    ElemSet si = fam.as_elemset(i);
    for (std::size_t j = 0; j < m; ++j) {
      ElemSet sj = fam.as_elemset(j);
      if (si.subset_of(sj)) rows[i].set(j);
    }
  }
  return FinitePoset::from_closed_rows(std::move(labels), std::move(rows));
}

namespace {

// Specialization preorder of a finite space, as raw up-rows (may fail
// antisymmetry when the space is not T0; product_space only needs the
// preorder).
std::vector<ElemSet> specialization_rows(const FiniteSpace& s) {
  const std::size_t n = s.size();
  std::vector<ElemSet> rows(n, ElemSet::full(n));
  for (std::size_t i = 0; i < s.opens().count(); ++i) {
    ElemSet u = s.opens().as_elemset(i);
    for (std::size_t x : u.indices()) rows[x] &= u;
  }
  return rows;
}

}  // namespace

FiniteSpace product_space(const FiniteSpace& s, const FiniteSpace& t, std::size_t cap) {
  const std::size_t ns = s.size(), nt = t.size();
  const std::size_t n = ns * nt;
  std::vector<std::string> carrier;
  carrier.reserve(n);
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < nt; ++j)
      carrier.push_back("(" + s.carrier()[i] + "," + t.carrier()[j] + ")");

  // A set W is a union of open rectangles iff every first-coordinate slice
  // of W is open in t and slices grow along the specialization preorder of
  // s (each open of s is a union of minimal point neighborhoods).
  std::vector<ElemSet> spec = specialization_rows(s);
  std::vector<std::size_t> order(ns);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return spec[a].count() < spec[b].count();
  });

  const std::size_t tstride = (nt + 63) / 64;
  const BitFamily& topens = t.opens();
  const std::size_t nopens = topens.count();

  BitFamily out(n);
  const std::size_t stride = (n + 63) / 64;
  std::vector<std::uint64_t> prod(std::max<std::size_t>(stride, 1), 0);
  std::vector<std::size_t> chosen(ns, 0);  // open index per placed s-point
  std::size_t produced = 0;

  auto subset_rows = [&](std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t k = 0; k < tstride; ++k)
      if (a[k] & ~b[k]) return false;
    return true;
  };

  auto place = [&](std::size_t x, std::span<const std::uint64_t> slice, bool on) {
    for (std::size_t y = 0; y < nt; ++y) {
      if ((slice[y >> 6] >> (y & 63)) & 1u) {
        std::size_t bit = x * nt + y;
        if (on)
          prod[bit >> 6] |= std::uint64_t{1} << (bit & 63);
        else
          prod[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
      }
    }
  };

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == ns) {
      if (++produced > cap) throw CapExceededError(std::to_string(cap) + " opens");
      out.append(std::span<const std::uint64_t>(prod.data(), stride));
      return;
    }
    std::size_t x = order[depth];
    for (std::size_t oi = 0; oi < nopens; ++oi) {
      auto cand = topens.row(oi);
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t y = order[d];
        if (spec[x].test(y) && !subset_rows(cand, topens.row(chosen[d]))) ok = false;
        if (spec[y].test(x) && !subset_rows(topens.row(chosen[d]), cand)) ok = false;
      }
      if (!ok) continue;
      chosen[depth] = oi;
      place(x, cand, true);
      self(self, depth + 1);
      place(x, cand, false);
    }
  };
  if (ns == 0 || nt == 0) {
    out.append(std::span<const std::uint64_t>(prod.data(), stride));
    return FiniteSpace::make(std::move(carrier), std::move(out));
  }
  rec(rec, 0);
  return FiniteSpace::make(std::move(carrier), std::move(out));
}

bool spaces_equal(const FiniteSpace& s, const FiniteSpace& t) {
  if (s.size() != t.size()) throw CarrierMismatchError("carrier sizes differ");
  if (s.carrier() == t.carrier()) return s.opens() == t.opens();
  // Same label set in a different order: remap t onto s's indexing.
  std::vector<std::size_t> perm(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    auto it = std::find(s.carrier().begin(), s.carrier().end(), t.carrier()[j]);
    if (it == s.carrier().end()) throw CarrierMismatchError("label " + t.carrier()[j]);
    perm[j] = static_cast<std::size_t>(it - s.carrier().begin());
  }
  BitFamily remapped(s.size());
  for (std::size_t i = 0; i < t.opens().count(); ++i) {
    ElemSet src = t.opens().as_elemset(i);
    ElemSet dst(s.size());
    for (std::size_t j : src.indices()) dst.set(perm[j]);
    remapped.append(dst);
  }
  remapped.sort_unique();
  return s.opens() == remapped;
}

SupContinuityReport sup_map_jointly_continuous(const FinitePoset& lat) {
  const std::size_t n = lat.size();
  std::vector<std::vector<std::size_t>> sup(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ElemSet s(n);
      s.set(a);
      s.set(b);
      auto j = lat.sup_idx(s);
      if (!j) throw NotALatticeError(lat.label(a) + " v " + lat.label(b) + " has no sup");
      sup[a][b] = *j;
    }
  }
  // Joint continuity for up-set topologies reduces to monotonicity, and
  // monotonicity in each argument separately composes to the product order.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t a2 : lat.up_row(a).indices())
      for (std::size_t b = 0; b < n; ++b)
        if (!lat.leq_idx(sup[a][b], sup[a2][b]))
          return {false,
                  std::array<std::string, 4>{lat.label(a), lat.label(b), lat.label(a2),
                                             lat.label(b)}};
  return {true, std::nullopt};
}

}  // namespace ordertop
