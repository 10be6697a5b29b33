#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "ordertop/sober_pair.hpp"
#include "ordertop/suite.hpp"

using namespace ordertop;

namespace {

LElem nat_at(unsigned long a, unsigned long b, unsigned long k) {
  return LElem::in_slice(SlicePair::make(a, b), MElem::nat(k));
}
LElem word_at(unsigned long a, unsigned long b, std::vector<Nat> w) {
  return LElem::in_slice(SlicePair::make(a, b), MElem::word(Word::of(std::move(w))));
}

FnRep fn39() { return FnRep::make({{Nat(3), Nat(9)}}, 7); }

UpperBoundFamily random_ub_family(suite::Rng& r) {
  switch (r.below(6)) {
    case 0: {
      Nat m = r.chance(2, 3) ? f_encode(suite::random_slice(r, 3), suite::random_word(r, 2, 2))
                             : Nat(static_cast<unsigned long>(r.below(6)));
      return UbSing{b_top(std::move(m), Nat(static_cast<unsigned long>(r.below(4))))};
    }
    case 1:
      return UbWordExt{suite::random_slice(r, 3), suite::random_word(r, 2, 2),
                       Nat(static_cast<unsigned long>(r.below(4)))};
    case 2:
      return UbNumExt{suite::random_slice(r, 3), Nat(static_cast<unsigned long>(r.below(4))),
                      Nat(static_cast<unsigned long>(r.below(4)))};
    case 3:
      return UbAppendExt{suite::random_slice(r, 3), suite::random_word(r, 2, 2),
                         Nat(static_cast<unsigned long>(r.below(4))),
                         Nat(static_cast<unsigned long>(r.below(4)))};
    case 4:
      return UbFnDiag{suite::random_fn(r), Nat(static_cast<unsigned long>(r.below(4)))};
    default:
      return UbXDiag{suite::random_x(r), Nat(static_cast<unsigned long>(r.below(4))),
                     Nat(static_cast<unsigned long>(r.below(4)))};
  }
}

BElem random_b_below(suite::Rng& r, const BElem& e) {
  if (!e.l.is_top()) {
    const auto& at = *e.l.at;
    if (at.m.is_nat() && at.m.nat_value() > 0 && r.chance(1, 2))
      return BElem{e.m, e.n, LElem::in_slice(at.slice, MElem::nat(at.m.nat_value() - 1))};
    return e;
  }
  switch (r.below(4)) {
    case 0:
      return e;
    case 1:  // any slice element at the same coordinates
      return BElem{e.m, e.n,
                   LElem::in_slice(suite::random_slice(r, 3),
                                   r.chance(1, 2)
                                       ? MElem::nat(Nat(static_cast<unsigned long>(r.below(4))))
                                       : MElem::word(suite::random_word(r, 2, 2)))};
    default: {
      auto d = f_decode(e.m);
      if (!d) return e;
      if (d->word.length() == 1 && e.n > 0 && r.chance(1, 2)) {
        Nat x = d->word.letters[0] > 0 && r.chance(1, 2) ? d->word.letters[0] - 1
                                                         : d->word.letters[0];
        return BElem{d->slice.b, e.n - 1, LElem::in_slice(d->slice, MElem::nat(std::move(x)))};
      }
      if (d->word.length() >= 2) {
        Word prefix{std::vector<Nat>(d->word.letters.begin(), d->word.letters.end() - 1)};
        Nat x = d->word.letters.back();
        return BElem{f_encode(d->slice, prefix), e.n,
                     LElem::in_slice(d->slice, MElem::nat(std::move(x)))};
      }
      if (e.n > 0) {
        std::size_t cut = 1 + r.below(d->word.length());
        Word prefix{std::vector<Nat>(d->word.letters.begin(),
                                     d->word.letters.begin() + static_cast<long>(cut))};
        return BElem{d->slice.a, e.n - 1, LElem::in_slice(d->slice, MElem::word(prefix))};
      }
      return e;
    }
  }
}

P1Point random_p1_below(suite::Rng& r, const P1Point& u) {
  if (u.is_top()) return suite::random_p1(r);
  if (u.v.index() == 0) {
    const auto& a = std::get<P1Point::FnLevel>(u.v);
    Nat n = a.n > 0 && r.chance(1, 2) ? a.n - 1 : a.n;
    return P1Point::fn(a.f, std::move(n));
  }
  return P1Point::in_b(random_b_below(r, u.b()));
}

P2Point random_p2_below(suite::Rng& r, const P2Point& u) {
  if (u.is_top()) return suite::random_p2(r);
  if (u.v.index() == 0) {
    const auto& a = std::get<P2Point::XfLevel>(u.v);
    Nat n = a.n > 0 && r.chance(1, 2) ? a.n - 1 : a.n;
    return P2Point::xf(a.f, std::move(n), a.k);
  }
  return P2Point::in_b(random_b_below(r, u.b()));
}

}  // namespace

TEST_CASE("p1 order cases") {
  P1Point f2 = P1Point::fn(fn39(), 2);
  CHECK(p1_leq(f2, P1Point::in_b(b_top(9, 3))));   // f(3) = 9 at level 3 >= 2
  CHECK(p1_leq(f2, P1Point::in_b(b_top(7, 5))));   // tail value at level 5
  CHECK(!p1_leq(f2, P1Point::in_b(b_top(7, 3))));  // f(3) = 9, not 7
  CHECK(!p1_leq(f2, P1Point::in_b(b_top(9, 1))));  // level below 2
  CHECK(!p1_leq(P1Point::fn(fn39(), 2), P1Point::fn(fn39(), 1)));
  CHECK(p1_leq(P1Point::fn(fn39(), 1), P1Point::fn(fn39(), 2)));
  CHECK(!p1_leq(P1Point::fn(fn39(), 1), P1Point::fn(FnRep::make({}, 7), 2)));
  CHECK(p1_leq(P1Point::in_b(b_top(0, 0)), P1Point::top()));
  CHECK(p1_leq(P1Point::top(), P1Point::top()));
  CHECK(!p1_leq(P1Point::top(), P1Point::in_b(b_top(0, 0))));
  // No order into a non-maximal B element from the function part.
  CHECK(!p1_leq(f2, P1Point::in_b(BElem{9, 3, nat_at(0, 1, 0)})));
  CHECK(!p1_leq(P1Point::in_b(b_top(9, 3)), f2));
}

TEST_CASE("p2 order cases") {
  XRep defaults = XRep::make({});
  P2Point x03 = P2Point::xf(defaults, 0, 3);
  CHECK(p2_leq(x03, P2Point::in_b(b_top(e_default(5), 3))));   // index 5 >= 0, level k = 3
  CHECK(!p2_leq(x03, P2Point::in_b(b_top(e_default(5), 2))));  // level must equal k
  CHECK(!p2_leq(P2Point::xf(defaults, 6, 3), P2Point::in_b(b_top(e_default(5), 3))));
  CHECK(!p2_leq(x03, P2Point::in_b(b_top(3, 3))));  // 3 is no code, index undefined
  CHECK(p2_leq(P2Point::xf(defaults, 2, 4), P2Point::xf(defaults, 7, 4)));
  CHECK(!p2_leq(P2Point::xf(defaults, 2, 4), P2Point::xf(defaults, 7, 5)));
  CHECK(p2_leq(P2Point::in_b(b_top(0, 0)), P2Point::top()));
  CHECK(!p2_leq(P2Point::top(), x03));

  Nat v7 = f_encode(phi(7), Word::of({1, 2}));
  P2Point y = P2Point::xf(XRep::make({{Nat(7), v7}}), 6, 1);
  CHECK(p2_leq(y, P2Point::in_b(b_top(v7, 1))));
  CHECK(!p2_leq(y, P2Point::in_b(b_top(e_default(7), 1))));  // overridden away
}

TEST_CASE("product order is componentwise") {
  ProductPoint d{P1Point::in_b(b_top(3, 2)), P2Point::in_b(b_top(3, 2))};
  CHECK(p12_leq(d, d));
  CHECK(p12_leq(d, ProductPoint{P1Point::top(), P2Point::top()}));
  CHECK(!p12_leq(ProductPoint{P1Point::top(), P2Point::in_b(b_top(0, 0))}, d));
  ProductPoint mixed{P1Point::fn(fn39(), 2), P2Point::in_b(BElem{9, 3, nat_at(0, 1, 1)})};
  CHECK(p12_leq(mixed, ProductPoint{P1Point::in_b(b_top(9, 3)), P2Point::in_b(b_top(9, 3))}));
}

TEST_CASE("upper-bound families of P1 and P2 points") {
  auto fams = p1_upper_max_families(P1Point::fn(fn39(), 2));
  REQUIRE(fams.size() == 1);
  CHECK(family_contains(fams[0], b_top(9, 3)));
  CHECK(family_contains(fams[0], b_top(7, 5)));
  CHECK(!family_contains(fams[0], b_top(7, 3)));
  CHECK(!family_contains(fams[0], b_top(9, 1)));

  CHECK(p1_upper_max_families(P1Point::top()).empty());
  CHECK(p2_upper_max_families(P2Point::top()).empty());

  auto fams2 = p1_upper_max_families(P1Point::in_b(b_top(4, 1)));
  REQUIRE(fams2.size() == 1);
  CHECK(std::get<UbSing>(fams2[0]).elem == b_top(4, 1));

  auto fams3 = p2_upper_max_families(P2Point::xf(XRep::make({}), 1, 2));
  REQUIRE(fams3.size() == 1);
  CHECK(family_contains(fams3[0], b_top(e_default(3), 2)));
  CHECK(!family_contains(fams3[0], b_top(e_default(0), 2)));  // index 0 < min index 1
}

TEST_CASE("family intersection, frozen cases") {
  UpperBoundFamily fd = UbFnDiag{fn39(), 2};
  UpperBoundFamily sing = UbSing{b_top(9, 3)};
  auto w = family_intersect(fd, sing);
  REQUIRE(w);
  CHECK(*w == b_top(9, 3));

  SlicePair s01 = SlicePair::make(0, 1);
  UpperBoundFamily w5 = UbWordExt{s01, Word::of({5}), 4};
  UpperBoundFamily w50 = UbWordExt{s01, Word::of({5, 0}), 4};
  auto w2 = family_intersect(w5, w50);
  REQUIRE(w2);
  CHECK(*w2 == b_top(f_encode(s01, Word::of({5, 0})), 4));

  UpperBoundFamily other_slice = UbWordExt{SlicePair::make(0, 2), Word::of({5}), 4};
  CHECK(!family_intersect(w5, other_slice));

  // Two choice-function diagonals at one level always share a tail value.
  UpperBoundFamily x1 = UbXDiag{XRep::make({}), 0, 3};
  Nat v7 = f_encode(phi(7), Word::of({1, 2}));
  UpperBoundFamily x2 = UbXDiag{XRep::make({{Nat(7), v7}}), 2, 3};
  auto w3 = family_intersect(x1, x2);
  REQUIRE(w3);
  CHECK(family_contains(x1, *w3));
  CHECK(family_contains(x2, *w3));
  CHECK(!family_intersect(x1, UpperBoundFamily{UbXDiag{XRep::make({}), 0, 4}}));
}

TEST_CASE("family intersection agrees with bounded enumeration") {
  suite::Rng r(0xbeef);
  FamilySampleBounds fsb{6, 2, 2};
  std::set<std::pair<std::size_t, std::size_t>> seen_kinds;
  for (int it = 0; it < 4000; ++it) {
    UpperBoundFamily f = random_ub_family(r);
    UpperBoundFamily g = random_ub_family(r);
    seen_kinds.emplace(std::min(f.index(), g.index()), std::max(f.index(), g.index()));
    auto w = family_intersect(f, g);
    if (w) {
      CHECK(family_contains(f, *w));
      CHECK(family_contains(g, *w));
    }
    auto sf = family_sample(f, fsb);
    auto sg = family_sample(g, fsb);
    std::set<BElem> sgs(sg.begin(), sg.end());
    bool sampled_common = false;
    for (const BElem& t : sf) sampled_common = sampled_common || sgs.count(t);
    if (sampled_common) CHECK(w.has_value());
    // Cross-validate membership predicates against the samples.
    for (const BElem& t : sf) CHECK(family_contains(f, t));
    for (const BElem& t : sg) CHECK(family_contains(g, t));
  }
  CHECK(seen_kinds.size() == 21);  // every unordered kind pair exercised
}

TEST_CASE("membership in A, frozen cases") {
  ProductPoint diag{P1Point::in_b(b_top(3, 2)), P2Point::in_b(b_top(3, 2))};
  auto w = a_member(diag);
  REQUIRE(w);
  CHECK(*w == b_top(3, 2));

  CHECK(!a_member(ProductPoint{P1Point::top(), P2Point::in_b(b_top(0, 0))}));
  CHECK(!a_member(ProductPoint{P1Point::top(), P2Point::top()}));

  ProductPoint fn_case{P1Point::fn(fn39(), 2), P2Point::in_b(b_top(9, 3))};
  auto w2 = a_member(fn_case);
  REQUIRE(w2);
  CHECK(*w2 == b_top(9, 3));

  // Off-diagonal maximal pairs are not in A.
  CHECK(!a_member(ProductPoint{P1Point::in_b(b_top(3, 2)), P2Point::in_b(b_top(4, 2))}));
}

TEST_CASE("membership in A is downward closed") {
  suite::Rng r(0x600d);
  int hits = 0;
  for (int it = 0; it < 600; ++it) {
    // Build p at or below a diagonal pair, then step q below p.
    Nat m = r.chance(1, 2) ? f_encode(suite::random_slice(r, 3), suite::random_word(r, 2, 2))
                           : Nat(static_cast<unsigned long>(r.below(5)));
    BElem t = b_top(std::move(m), Nat(static_cast<unsigned long>(r.below(4))));
    P1Point x = r.chance(1, 2) ? P1Point::in_b(random_b_below(r, t)) : P1Point::in_b(t);
    if (r.chance(1, 4)) {
      std::map<Nat, Nat> ov;
      ov[t.n] = t.m;
      x = P1Point::fn(FnRep::make(std::move(ov), t.m + 1), t.n);
    }
    P2Point y = P2Point::in_b(random_b_below(r, t));
    ProductPoint p{x, y};
    REQUIRE(p1_leq(p.x, P1Point::in_b(t)));
    REQUIRE(p2_leq(p.y, P2Point::in_b(t)));
    REQUIRE(a_member(p));
    ProductPoint q{random_p1_below(r, p.x), random_p2_below(r, p.y)};
    if (p12_leq(q, p)) {
      ++hits;
      CHECK(a_member(q));
    }
  }
  CHECK(hits > 400);  // the down-steps really do stay below
}

TEST_CASE("a_member matches exhaustive search over sampled upper bounds") {
  suite::Rng r(0xfeed);
  FamilySampleBounds fsb{8, 2, 2};
  for (int it = 0; it < 600; ++it) {
    ProductPoint p{suite::random_p1(r), suite::random_p2(r)};
    auto verdict = a_member(p);
    if (verdict) {
      CHECK(p1_leq(p.x, P1Point::in_b(*verdict)));
      CHECK(p2_leq(p.y, P2Point::in_b(*verdict)));
      CHECK(is_b_maximal(*verdict));
    }
    std::set<BElem> cands;
    for (const auto& f : p1_upper_max_families(p.x))
      for (const BElem& t : family_sample(f, fsb)) cands.insert(t);
    for (const auto& g : p2_upper_max_families(p.y))
      for (const BElem& t : family_sample(g, fsb)) cands.insert(t);
    bool brute = false;
    for (const BElem& t : cands)
      brute = brute ||
              (p1_leq(p.x, P1Point::in_b(t)) && p2_leq(p.y, P2Point::in_b(t)));
    if (brute) CHECK(verdict.has_value());
  }
}

TEST_CASE("interleaving chains walk as the construction dictates") {
  InterleaveChain ch = interleave_chain(0, 1, 2, {Nat(5)});
  CHECK(ch.final_elem == b_top(2275, 3));
  CHECK(ch.v_start == BElem{1, 2, nat_at(0, 1, 5)});
  REQUIRE(ch.tops.size() == 1);
  REQUIRE(ch.word_elems.size() == 1);
  CHECK(ch.word_elems[0] == BElem{0, 2, word_at(0, 1, {5})});

  InterleaveChain ch2 = interleave_chain(0, 1, 2, {Nat(5), Nat(4)});
  SlicePair s01 = SlicePair::make(0, 1);
  CHECK(ch2.final_elem == b_top(f_encode(s01, Word::of({5, 4})), 3));
  REQUIRE(ch2.tops.size() == 2);
  for (const auto& link : ch2.links) CHECK(b_leq(link.lo, link.hi));
  // The U-side word elements grow strictly and land under their stage tops.
  for (std::size_t j = 0; j + 1 < ch2.word_elems.size(); ++j) {
    CHECK(b_leq(ch2.word_elems[j], ch2.word_elems[j + 1]));
    CHECK(ch2.word_elems[j] != ch2.word_elems[j + 1]);
  }
  for (std::size_t j = 0; j < ch2.tops.size(); ++j)
    CHECK(b_leq(ch2.word_elems[j], ch2.tops[j]));
  // Every earlier word element also sits below the final stage.
  CHECK(b_leq(ch2.word_elems.front(), ch2.final_elem));
  CHECK(b_leq(ch2.v_start, ch2.tops.front()));
  // The final element is a diagonal witness for A.
  CHECK(a_member(ProductPoint{P1Point::in_b(ch2.final_elem), P2Point::in_b(ch2.final_elem)}));

  CHECK_THROWS_AS(interleave_chain(1, 0, 0, {Nat(1)}), PreconditionError);
  CHECK_THROWS_AS(interleave_chain(1, 1, 0, {Nat(1)}), PreconditionError);
  CHECK_THROWS_AS(interleave_chain(0, 1, 0, {}), PreconditionError);
}

TEST_CASE("climbing one level uses the word-side departure") {
  ClimbStep st = climb_level(0, 0, 0);
  CHECK(st.to == b_top(12, 1));  // f_encode((0,1), [0]) = 12
  CHECK(st.from_word == BElem{0, 0, word_at(0, 1, {0})});
  CHECK(b_leq(st.from_word, st.to));
  // The nat-typed element reaches the same target from the slice's upper
  // index, not from m itself.
  CHECK(b_leq(BElem{1, 0, nat_at(0, 1, 0)}, st.to));
  CHECK(!b_leq(BElem{0, 0, nat_at(0, 1, 0)}, st.to));

  ClimbStep st2 = climb_level(5, 7, 3);
  CHECK(st2.to.n == 8);
  CHECK(b_leq(st2.from_word, st2.to));
}

TEST_CASE("escape from finitely generated ideals") {
  auto r0 = a_escape({}, {}, 100);
  REQUIRE(std::holds_alternative<ProductPoint>(r0));
  CHECK(std::get<ProductPoint>(r0) ==
        ProductPoint{P1Point::in_b(b_top(0, 0)), P2Point::in_b(b_top(0, 0))});

  auto r1 = a_escape({ProductPoint{P1Point::top(), P2Point::top()}}, {}, 100);
  REQUIRE(std::holds_alternative<Exhausted>(r1));
  CHECK(std::get<Exhausted>(r1).budget == 100);

  ProductPoint diag00{P1Point::in_b(b_top(0, 0)), P2Point::in_b(b_top(0, 0))};
  auto r2 = a_escape({diag00}, {}, 100);
  REQUIRE(std::holds_alternative<ProductPoint>(r2));
  const ProductPoint& found = std::get<ProductPoint>(r2);
  CHECK(!p12_leq(found, diag00));
  CHECK(a_member(found));
}

TEST_CASE("A is not a principal ideal") {
  ProductPoint diag00{P1Point::in_b(b_top(0, 0)), P2Point::in_b(b_top(0, 0))};
  auto r0 = not_point_closure(diag00, 100);
  REQUIRE(std::holds_alternative<BElem>(r0));
  const BElem& t = std::get<BElem>(r0);
  CHECK(!p12_leq(ProductPoint{P1Point::in_b(t), P2Point::in_b(t)}, diag00));

  auto r1 = not_point_closure(ProductPoint{P1Point::top(), P2Point::in_b(b_top(0, 0))}, 100);
  REQUIRE(std::holds_alternative<BElem>(r1));

  ProductPoint tops{P1Point::top(), P2Point::top()};
  auto r2 = not_point_closure(tops, 100);
  REQUIRE(std::holds_alternative<Exhausted>(r2));
  CHECK(!a_member(tops));
}

TEST_CASE("coordinate families inside A have sups inside A") {
  suite::Rng r(0xc0de);
  for (int it = 0; it < 100; ++it) {
    CoordFamily fam = suite::random_coord_family_in_a(r);
    for (std::uint64_t i = 0; i < 12; ++i) {
      ProductPoint mem = coord_family_member(fam, i);
      ProductPoint sup = coord_family_sup(fam);
      CHECK(p12_leq(mem, sup));
    }
    CHECK(a_closed_check(fam));
  }
}

TEST_CASE("function-level families escape A and are rejected") {
  FnRep f = fn39();
  P2Point fixed = P2Point::in_b(b_top(f(0), 0));
  CoordFamily cf{CoordFamily::FnLevelsLeft{f, fixed}};
  CHECK(a_member(coord_family_member(cf, 0)));  // the level-0 member is fine
  CHECK_THROWS_AS(a_closed_check(cf), FamilyNotInAError);

  XRep x = XRep::make({});
  CoordFamily cf2{CoordFamily::XfLevelsRight{P1Point::in_b(b_top(x(0), 2)), x, 2}};
  CHECK(a_member(coord_family_member(cf2, 0)));
  CHECK_THROWS_AS(a_closed_check(cf2), FamilyNotInAError);

  // A fixed partner unrelated to the family's sup fails immediately.
  BFamily fam{0, 0, SlicePair::make(0, 1), AllNatsTail{}};
  CoordFamily cf3{CoordFamily::BLeft{fam, P2Point::in_b(b_top(1, 0))}};
  CHECK_THROWS_AS(a_closed_check(cf3), FamilyNotInAError);
}
