#include "ordertop/sober_pair.hpp"

#include <algorithm>
#include <set>

namespace ordertop {

bool p1_leq(const P1Point& u, const P1Point& v) {
  if (u == v) return true;
  if (v.is_top()) return true;
  if (u.is_top()) return false;
  if (u.v.index() == 0 && v.v.index() == 0) {
    const auto& a = std::get<P1Point::FnLevel>(u.v);
    const auto& b = std::get<P1Point::FnLevel>(v.v);
    return a.f == b.f && a.n <= b.n;
  }
  if (u.is_b() && v.is_b()) return b_leq(u.b(), v.b());
  if (u.v.index() == 0 && v.is_b()) {
    // (f, n) below (f(k), k, top) for any k >= n.
    const auto& a = std::get<P1Point::FnLevel>(u.v);
    const BElem& t = v.b();
    return t.l.is_top() && t.n >= a.n && a.f(t.n) == t.m;
  }
  return false;
}

bool p2_leq(const P2Point& u, const P2Point& v) {
  if (u == v) return true;
  if (v.is_top()) return true;
  if (u.is_top()) return false;
  if (u.v.index() == 0 && v.v.index() == 0) {
    const auto& a = std::get<P2Point::XfLevel>(u.v);
    const auto& b = std::get<P2Point::XfLevel>(v.v);
    return a.f == b.f && a.k == b.k && a.n <= b.n;
  }
  if (u.is_b() && v.is_b()) return b_leq(u.b(), v.b());
  if (u.v.index() == 0 && v.is_b()) {
    // (f, n, k) below (f(m), k, top) for any m >= n; the E_m's are disjoint,
    // so m is pinned by the target's value.
    const auto& a = std::get<P2Point::XfLevel>(u.v);
    const BElem& t = v.b();
    if (!t.l.is_top() || t.n != a.k) return false;
    auto idx = e_index(t.m);
    return idx && *idx >= a.n && a.f(*idx) == t.m;
  }
  return false;
}

std::vector<UpperBoundFamily> p1_upper_max_families(const P1Point& u) {
  switch (u.v.index()) {
    case 0: {
      const auto& a = std::get<P1Point::FnLevel>(u.v);
      return {UbFnDiag{a.f, a.n}};
    }
    case 1:
      return b_upper_max_families(u.b());
    default:
      return {};
  }
}

std::vector<UpperBoundFamily> p2_upper_max_families(const P2Point& u) {
  switch (u.v.index()) {
    case 0: {
      const auto& a = std::get<P2Point::XfLevel>(u.v);
      return {UbXDiag{a.f, a.n, a.k}};
    }
    case 1:
      return b_upper_max_families(u.b());
    default:
      return {};
  }
}

namespace {

std::optional<BElem> check(const UpperBoundFamily& f, BElem t) {
  if (family_contains(f, t)) return t;
  return std::nullopt;
}

std::optional<BElem> isect_word_word(const UbWordExt& a, const UbWordExt& b) {
  if (!(a.slice == b.slice) || a.level != b.level) return std::nullopt;
  const Word& longer = a.base.length() >= b.base.length() ? a.base : b.base;
  if (!a.base.prefix_of(longer) || !b.base.prefix_of(longer)) return std::nullopt;
  return b_top(f_encode(a.slice, longer), a.level);
}

std::optional<BElem> isect_word_num(const UbWordExt& a, const UbNumExt& b) {
  if (!(a.slice == b.slice) || a.level != b.level) return std::nullopt;
  if (a.base.length() != 1 || a.base.letters[0] < b.base) return std::nullopt;
  return b_top(f_encode(a.slice, a.base), a.level);
}

std::optional<BElem> isect_word_append(const UbWordExt& a, const UbAppendExt& b) {
  if (!(a.slice == b.slice) || a.level != b.level) return std::nullopt;
  if (a.base.length() <= b.prefix.length()) {
    if (!a.base.prefix_of(b.prefix)) return std::nullopt;
    return b_top(f_encode(a.slice, b.prefix.extended(b.base)), a.level);
  }
  if (a.base.length() == b.prefix.length() + 1 && b.prefix.prefix_of(a.base) &&
      a.base.letters.back() >= b.base)
    return b_top(f_encode(a.slice, a.base), a.level);
  return std::nullopt;
}

std::optional<BElem> isect_num_num(const UbNumExt& a, const UbNumExt& b) {
  if (!(a.slice == b.slice) || a.level != b.level) return std::nullopt;
  const Nat& y = std::max(a.base, b.base);
  return b_top(f_encode(a.slice, Word::single(y)), a.level);
}

std::optional<BElem> isect_append_append(const UbAppendExt& a, const UbAppendExt& b) {
  if (!(a.slice == b.slice) || a.level != b.level || !(a.prefix == b.prefix))
    return std::nullopt;
  const Nat& y = std::max(a.base, b.base);
  return b_top(f_encode(a.slice, a.prefix.extended(y)), a.level);
}

// Probe a diagonal family at one level; the value pins everything else.
std::optional<BElem> probe_fn(const UbFnDiag& d, const Nat& level, const UpperBoundFamily& other) {
  if (level < d.min_level) return std::nullopt;
  return check(other, b_top(d.fn(level), level));
}

}  // namespace

std::optional<BElem> family_intersect(const UpperBoundFamily& f, const UpperBoundFamily& g) {
  if (f.index() > g.index()) return family_intersect(g, f);
  // A singleton intersects anything iff the other side contains its element.
  if (const auto* s = std::get_if<UbSing>(&f)) return check(g, s->elem);

  if (const auto* we = std::get_if<UbWordExt>(&f)) {
    if (const auto* o = std::get_if<UbWordExt>(&g)) return isect_word_word(*we, *o);
    if (const auto* o = std::get_if<UbNumExt>(&g)) return isect_word_num(*we, *o);
    if (const auto* o = std::get_if<UbAppendExt>(&g)) return isect_word_append(*we, *o);
    if (const auto* o = std::get_if<UbFnDiag>(&g)) return probe_fn(*o, we->level, f);
    const auto& x = std::get<UbXDiag>(g);
    if (we->level != x.level) return std::nullopt;
    Nat mstar = phi_inv(we->slice);
    if (mstar < x.min_index) return std::nullopt;
    return check(f, b_top(x.fn(mstar), x.level));
  }

  if (const auto* ne = std::get_if<UbNumExt>(&f)) {
    if (const auto* o = std::get_if<UbNumExt>(&g)) return isect_num_num(*ne, *o);
    if (std::holds_alternative<UbAppendExt>(g)) return std::nullopt;  // length 1 vs >= 2
    if (const auto* o = std::get_if<UbFnDiag>(&g)) return probe_fn(*o, ne->level, f);
    const auto& x = std::get<UbXDiag>(g);
    if (ne->level != x.level) return std::nullopt;
    Nat mstar = phi_inv(ne->slice);
    if (mstar < x.min_index) return std::nullopt;
    return check(f, b_top(x.fn(mstar), x.level));
  }

  if (const auto* ae = std::get_if<UbAppendExt>(&f)) {
    if (const auto* o = std::get_if<UbAppendExt>(&g)) return isect_append_append(*ae, *o);
    if (const auto* o = std::get_if<UbFnDiag>(&g)) return probe_fn(*o, ae->level, f);
    const auto& x = std::get<UbXDiag>(g);
    if (ae->level != x.level) return std::nullopt;
    Nat mstar = phi_inv(ae->slice);
    if (mstar < x.min_index) return std::nullopt;
    return check(f, b_top(x.fn(mstar), x.level));
  }

  if (const auto* fd = std::get_if<UbFnDiag>(&f)) {
    if (const auto* o = std::get_if<UbFnDiag>(&g)) {
      // Candidate levels: both override sets plus one tail representative.
      std::set<Nat> ks;
      Nat tail_rep = std::max(fd->min_level, o->min_level);
      for (const auto& [k, v] : fd->fn.overrides) {
        ks.insert(k);
        if (k >= tail_rep) tail_rep = k + 1;
      }
      for (const auto& [k, v] : o->fn.overrides) {
        ks.insert(k);
        if (k >= tail_rep) tail_rep = k + 1;
      }
      ks.insert(tail_rep);
      for (const Nat& k : ks) {
        if (k < fd->min_level || k < o->min_level) continue;
        if (fd->fn(k) == o->fn(k)) return b_top(fd->fn(k), k);
      }
      return std::nullopt;
    }
    const auto& x = std::get<UbXDiag>(g);
    // The level is pinned by the XDiag side; the index by the value.
    if (x.level < fd->min_level) return std::nullopt;
    Nat val = fd->fn(x.level);
    auto idx = e_index(val);
    if (!idx || *idx < x.min_index || !(x.fn(*idx) == val)) return std::nullopt;
    return b_top(val, x.level);
  }

  const auto& a = std::get<UbXDiag>(f);
  const auto& b = std::get<UbXDiag>(g);
  if (a.level != b.level) return std::nullopt;
  std::set<Nat> ms;
  Nat tail_rep = std::max(a.min_index, b.min_index);
  for (const auto& [k, v] : a.fn.overrides) {
    ms.insert(k);
    if (k >= tail_rep) tail_rep = k + 1;
  }
  for (const auto& [k, v] : b.fn.overrides) {
    ms.insert(k);
    if (k >= tail_rep) tail_rep = k + 1;
  }
  ms.insert(tail_rep);  // beyond all overrides both take the shared default
  for (const Nat& m : ms) {
    if (m < a.min_index || m < b.min_index) continue;
    if (a.fn(m) == b.fn(m)) return b_top(a.fn(m), a.level);
  }
  return std::nullopt;
}

std::optional<BElem> a_member(const ProductPoint& p) {
  auto fs = p1_upper_max_families(p.x);
  auto gs = p2_upper_max_families(p.y);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (auto t = family_intersect(f, g)) return t;
  return std::nullopt;
}

namespace {

void checked_link(std::vector<ChainLink>& links, BElem lo, BElem hi, const char* rule) {
  if (!b_leq(lo, hi)) throw Error(std::string("chain link failed its order check (") + rule + ")");
  links.push_back(ChainLink{std::move(lo), std::move(hi), rule});
}

}  // namespace

InterleaveChain interleave_chain(const Nat& m1, const Nat& m2, const Nat& n,
                                 const std::vector<Nat>& letters) {
  if (!(m1 < m2)) throw PreconditionError("interleave chain needs m1 < m2");
  if (letters.empty()) throw PreconditionError("interleave chain needs at least one letter");
  if (m1 < 0) throw PreconditionError("components are naturals");
  const SlicePair s = SlicePair::make(m1, m2);

  InterleaveChain chain;
  chain.v_start = BElem{m2, n, LElem::in_slice(s, MElem::nat(letters[0]))};
  Word w = Word::single(letters[0]);
  BElem top = b_top(f_encode(s, w), n + 1);
  checked_link(chain.links, chain.v_start, top, "R3");
  chain.tops.push_back(top);
  chain.word_elems.push_back(BElem{m1, n, LElem::in_slice(s, MElem::word(w))});
  checked_link(chain.links, chain.word_elems.back(), top, "R2");

  for (std::size_t j = 1; j < letters.size(); ++j) {
    BElem digit{top.m, n + 1, LElem::in_slice(s, MElem::nat(letters[j]))};
    checked_link(chain.links, digit, top, "R1");  // descend below the previous stage
    w = w.extended(letters[j]);
    BElem next = b_top(f_encode(s, w), n + 1);
    checked_link(chain.links, digit, next, "R4");
    chain.word_elems.push_back(BElem{m1, n, LElem::in_slice(s, MElem::word(w))});
    checked_link(chain.links, chain.word_elems.back(), next, "R2");
    top = std::move(next);
    chain.tops.push_back(top);
  }
  chain.final_elem = top;
  return chain;
}

ClimbStep climb_level(const Nat& m, const Nat& n, const Nat& k0) {
  const SlicePair s = SlicePair::make(m, m + 1);
  ClimbStep step;
  step.from_word = BElem{m, n, LElem::in_slice(s, MElem::word(Word::single(k0)))};
  step.to = b_top(f_encode(s, Word::single(k0)), n + 1);
  if (!b_leq(step.from_word, step.to)) throw Error("climb step failed its order check");
  return step;
}

namespace {

template <typename Pred>
std::optional<BElem> diagonal_search(std::uint64_t budget, Pred&& good) {
  std::uint64_t tried = 0;
  for (std::uint64_t total = 0;; ++total) {
    for (std::uint64_t mi = 0; mi <= total; ++mi) {
      if (tried >= budget) return std::nullopt;
      ++tried;
      BElem t = b_top(Nat(static_cast<unsigned long>(mi)),
                      Nat(static_cast<unsigned long>(total - mi)));
      if (good(t)) return t;
    }
  }
}

}  // namespace

std::variant<ProductPoint, Exhausted> a_escape(const std::vector<ProductPoint>& f1,
                                               const std::vector<ProductPoint>& f2,
                                               std::uint64_t budget) {
  auto found = diagonal_search(budget, [&](const BElem& t) {
    ProductPoint diag{P1Point::in_b(t), P2Point::in_b(t)};
    for (const auto& q : f1)
      if (p12_leq(diag, q)) return false;
    for (const auto& q : f2)
      if (p12_leq(diag, q)) return false;
    return true;
  });
  if (!found) return Exhausted{budget};
  return ProductPoint{P1Point::in_b(*found), P2Point::in_b(*found)};
}

std::variant<BElem, Exhausted> not_point_closure(const ProductPoint& p, std::uint64_t budget) {
  auto found = diagonal_search(budget, [&](const BElem& t) {
    ProductPoint diag{P1Point::in_b(t), P2Point::in_b(t)};
    return !p12_leq(diag, p);
  });
  if (!found) return Exhausted{budget};
  return *found;
}

ProductPoint coord_family_member(const CoordFamily& d, std::uint64_t i) {
  return std::visit(
      [&](const auto& c) -> ProductPoint {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CoordFamily::BLeft>) {
          return {P1Point::in_b(family_member(c.fam, i)), c.fixed_right};
        } else if constexpr (std::is_same_v<T, CoordFamily::BRight>) {
          return {c.fixed_left, P2Point::in_b(family_member(c.fam, i))};
        } else if constexpr (std::is_same_v<T, CoordFamily::FnLevelsLeft>) {
          return {P1Point::fn(c.f, Nat(static_cast<unsigned long>(i))), c.fixed_right};
        } else {
          static_assert(std::is_same_v<T, CoordFamily::XfLevelsRight>);
          return {c.fixed_left, P2Point::xf(c.f, Nat(static_cast<unsigned long>(i)), c.k)};
        }
      },
      d.v);
}

ProductPoint coord_family_sup(const CoordFamily& d) {
  return std::visit(
      [&](const auto& c) -> ProductPoint {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CoordFamily::BLeft>) {
          return {P1Point::in_b(family_sup(c.fam)), c.fixed_right};
        } else if constexpr (std::is_same_v<T, CoordFamily::BRight>) {
          return {c.fixed_left, P2Point::in_b(family_sup(c.fam))};
        } else if constexpr (std::is_same_v<T, CoordFamily::FnLevelsLeft>) {
          // Unbounded function levels converge to the added top of P1.
          return {P1Point::top(), c.fixed_right};
        } else {
          static_assert(std::is_same_v<T, CoordFamily::XfLevelsRight>);
          return {c.fixed_left, P2Point::top()};
        }
      },
      d.v);
}

bool a_closed_check(const CoordFamily& d, std::uint64_t sample_count) {
  for (std::uint64_t i = 0; i < sample_count; ++i) {
    if (!a_member(coord_family_member(d, i)))
      throw FamilyNotInAError("member " + std::to_string(i) + " is outside A");
  }
  return a_member(coord_family_sup(d)).has_value();
}

}  // namespace ordertop
