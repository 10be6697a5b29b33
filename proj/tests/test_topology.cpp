#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "ordertop/suite.hpp"
#include "ordertop/topology.hpp"

using namespace ordertop;

namespace {

FinitePoset two_chain() { return FinitePoset::from_relations({"a", "b"}, {{"a", "b"}}); }
FinitePoset two_antichain() { return FinitePoset::from_relations({"a", "b"}, {}); }
FinitePoset diamond() {
  return FinitePoset::from_relations({"bot", "x", "y", "top"},
                                     {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}});
}

FiniteSpace sierpinski() {
  BitFamily fam(2);
  ElemSet empty(2), b(2), ab(2);
  b.set(1);
  ab.set(0);
  ab.set(1);
  fam.append(empty);
  fam.append(b);
  fam.append(ab);
  return FiniteSpace::make({"a", "b"}, std::move(fam));
}

FiniteSpace discrete(std::size_t n) {
  std::vector<std::string> carrier;
  for (std::size_t i = 0; i < n; ++i) carrier.push_back("p" + std::to_string(i));
  BitFamily fam(n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ElemSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.set(i);
    fam.append(s);
  }
  return FiniteSpace::make(std::move(carrier), std::move(fam));
}

// Reference construction for the product topology: materialize every open
// rectangle and close under unions by a fixpoint sweep.
FiniteSpace product_space_naive(const FiniteSpace& s, const FiniteSpace& t) {
  const std::size_t ns = s.size(), nt = t.size(), n = ns * nt;
  std::vector<std::string> carrier;
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < nt; ++j)
      carrier.push_back("(" + s.carrier()[i] + "," + t.carrier()[j] + ")");
  std::set<std::vector<std::uint64_t>> fam;
  const std::size_t stride = (n + 63) / 64;
  for (std::size_t ui = 0; ui < s.opens().count(); ++ui) {
    for (std::size_t vi = 0; vi < t.opens().count(); ++vi) {
      ElemSet u = s.opens().as_elemset(ui), v = t.opens().as_elemset(vi);
      std::vector<std::uint64_t> rect(stride, 0);
      for (std::size_t x : u.indices())
        for (std::size_t y : v.indices()) {
          std::size_t bit = x * nt + y;
          rect[bit >> 6] |= std::uint64_t{1} << (bit & 63);
        }
      fam.insert(rect);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<std::uint64_t>> snapshot(fam.begin(), fam.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        std::vector<std::uint64_t> un(stride);
        for (std::size_t k = 0; k < stride; ++k) un[k] = a[k] | b[k];
        if (fam.insert(un).second) changed = true;
      }
  }
  BitFamily out(n);
  for (const auto& m : fam) out.append(std::span<const std::uint64_t>(m.data(), stride));
  return FiniteSpace::make(std::move(carrier), std::move(out));
}

}  // namespace

TEST_CASE("alexandrov spaces enumerate exactly the up-sets") {
  FiniteSpace chain = alexandrov_space(two_chain());
  CHECK(chain.opens().count() == 3);  // {}, {b}, {a,b}
  ElemSet b(2);
  b.set(1);
  CHECK(chain.opens().contains(b.words()));
  ElemSet a(2);
  a.set(0);
  CHECK(!chain.opens().contains(a.words()));  // {a} is not an up-set

  CHECK(alexandrov_space(two_antichain()).opens().count() == 4);
  CHECK(alexandrov_space(FinitePoset::from_relations({"a"}, {})).opens().count() == 2);
  alexandrov_space(diamond()).validate();
}

TEST_CASE("alexandrov respects the open-set cap") {
  std::vector<std::string> labels;
  for (int i = 0; i < 25; ++i) labels.push_back("e" + std::to_string(i));
  FinitePoset anti = FinitePoset::from_relations(labels, {});
  CHECK_THROWS_AS(alexandrov_space(anti), CapExceededError);  // 2^25 up-sets
  CHECK_THROWS_AS(open_set_lattice(anti), CapExceededError);
}

TEST_CASE("specialization order inverts the alexandrov construction") {
  std::mt19937_64 rng(5);
  suite::Rng r(17);
  for (int it = 0; it < 30; ++it) {
    FinitePoset p = suite::random_poset(r, 6);
    FinitePoset q = alexandrov_space(p).specialization_order();
    REQUIRE(q.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) CHECK(p.leq_idx(i, j) == q.leq_idx(i, j));
  }
  (void)rng;
}

TEST_CASE("specialization of handmade spaces") {
  FinitePoset p = sierpinski().specialization_order();
  CHECK(p.leq("a", "b"));
  CHECK(!p.leq("b", "a"));

  FinitePoset d = discrete(2).specialization_order();
  CHECK(!d.leq("p0", "p1"));
  CHECK(!d.leq("p1", "p0"));

  // Indiscrete two points: not T0.
  BitFamily fam(2);
  ElemSet empty(2);
  fam.append(empty);
  fam.append(ElemSet::full(2));
  FiniteSpace indiscrete = FiniteSpace::make({"a", "b"}, std::move(fam));
  CHECK(!indiscrete.is_t0());
  CHECK_THROWS_AS(indiscrete.specialization_order(), NotT0Error);
  CHECK_THROWS_AS(indiscrete.sobriety(), NotT0Error);
}

TEST_CASE("closure is a kuratowski closure matching down-sets") {
  suite::Rng r(23);
  for (int it = 0; it < 25; ++it) {
    FinitePoset p = suite::random_poset(r, 6);
    FiniteSpace sp = alexandrov_space(p);
    const std::size_t n = p.size();
    ElemSet empty(n);
    CHECK(sp.closure(empty) == empty);
    CHECK(sp.closure(ElemSet::full(n)) == ElemSet::full(n));
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      ElemSet s(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) s.set(i);
      ElemSet cl = sp.closure(s);
      CHECK(cl == p.down_set(s));  // alexandrov closure is the down-set
      CHECK(s.subset_of(cl));
      CHECK(sp.closure(cl) == cl);
    }
    // Finite additivity on sampled pairs.
    for (int k = 0; k < 10; ++k) {
      ElemSet x(n), y(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (r.chance(1, 2)) x.set(i);
        if (r.chance(1, 2)) y.set(i);
      }
      ElemSet both = x;
      both |= y;
      ElemSet cl_union = sp.closure(x);
      cl_union |= sp.closure(y);
      CHECK(sp.closure(both) == cl_union);
    }
  }
}

TEST_CASE("irreducible closed sets on the standard examples") {
  FiniteSpace anti = alexandrov_space(two_antichain());
  auto irr = anti.irreducible_closed_sets();
  REQUIRE(irr.size() == 2);  // {a} and {b}

  FiniteSpace chain = alexandrov_space(two_chain());
  irr = chain.irreducible_closed_sets();
  REQUIRE(irr.size() == 2);  // {a} and {a,b}
  CHECK(irr[0].count() == 1);
  CHECK(irr[1].count() == 2);

  CHECK(alexandrov_space(diamond()).irreducible_closed_sets().size() == 4);
}

TEST_CASE("both irreducibility characterizations agree exhaustively") {
  suite::Rng r(31);
  for (int it = 0; it < 40; ++it) {
    FinitePoset p = suite::random_poset(r, 6);
    FiniteSpace sp = alexandrov_space(p);
    CHECK(sp.irreducible_closed_sets() == suite::irreducible_closed_sets_by_definition(sp));
  }
}

TEST_CASE("finite alexandrov spaces are sober") {
  suite::Rng r(37);
  for (int it = 0; it < 40; ++it) {
    FinitePoset p = suite::random_poset(r, 8);
    SobrietyReport rep = alexandrov_space(p).sobriety();
    CHECK(rep.sober);
    CHECK(rep.irreducibles.size() == p.size());
    for (const auto& irr : rep.irreducibles) REQUIRE(irr.generic.has_value());
  }
  SobrietyReport s = sierpinski().sobriety();
  CHECK(s.sober);
  CHECK(s.irreducibles.size() == 2);
  SobrietyReport d3 = discrete(3).sobriety();
  CHECK(d3.sober);
  CHECK(d3.irreducibles.size() == 3);
}

TEST_CASE("open set lattice shapes") {
  FinitePoset l1 = open_set_lattice(FinitePoset::from_relations({"a"}, {}));
  CHECK(l1.size() == 2);
  CHECK(l1.leq("{}", "{a}"));

  FinitePoset l2 = open_set_lattice(two_antichain());
  CHECK(l2.size() == 4);  // boolean lattice on two points
  CHECK(l2.leq("{a}", "{a,b}"));
  CHECK(!l2.leq("{a}", "{b}"));

  FinitePoset l3 = open_set_lattice(two_chain());
  CHECK(l3.size() == 3);
  CHECK(l3.leq("{}", "{b}"));
  CHECK(l3.leq("{b}", "{a,b}"));
}

TEST_CASE("product spaces match the naive rectangle closure") {
  suite::Rng r(43);
  for (int it = 0; it < 12; ++it) {
    FiniteSpace s = alexandrov_space(suite::random_poset(r, 3));
    FiniteSpace t = alexandrov_space(suite::random_poset(r, 3));
    FiniteSpace fast = product_space(s, t);
    FiniteSpace naive = product_space_naive(s, t);
    CHECK(spaces_equal(fast, naive));
    fast.validate();
  }
  // sierpinski x sierpinski is the alexandrov space of the square order.
  FiniteSpace sq = product_space(sierpinski(), sierpinski());
  FiniteSpace expected = alexandrov_space(two_chain().product(two_chain()));
  CHECK(spaces_equal(sq, expected));
}

TEST_CASE("product with a point is the space itself") {
  FiniteSpace s = sierpinski();
  FiniteSpace pt = discrete(1);
  FiniteSpace prod = product_space(s, pt);
  REQUIRE(prod.size() == s.size());
  CHECK(prod.opens().count() == s.opens().count());
  for (std::size_t i = 0; i < s.opens().count(); ++i)
    CHECK(prod.opens().row(i)[0] == s.opens().row(i)[0]);  // (x, p0) keeps x's index
}

TEST_CASE("product of discretes is discrete") {
  FiniteSpace prod = product_space(discrete(2), discrete(2));
  CHECK(prod.opens().count() == 16);
}

TEST_CASE("spaces_equal distinguishes and matches") {
  CHECK(spaces_equal(sierpinski(), sierpinski()));
  FiniteSpace discrete_ab = alexandrov_space(two_antichain());  // carrier {a, b}
  CHECK(!spaces_equal(sierpinski(), discrete_ab));
  CHECK_THROWS_AS(spaces_equal(sierpinski(), discrete(2)), CarrierMismatchError);
  // Same labels in a different order still compare by content.
  BitFamily f(2);
  ElemSet empty(2), a(2);
  a.set(1);  // "a" sits at index 1 here
  f.append(empty);
  f.append(a);
  f.append(ElemSet::full(2));
  FiniteSpace flipped = FiniteSpace::make({"b", "a"}, std::move(f));
  CHECK(!spaces_equal(sierpinski(), flipped));  // this one opens {a}, not {b}
  BitFamily g(2);
  ElemSet b2(2);
  b2.set(0);  // "b" first
  g.append(ElemSet(2));
  g.append(b2);
  g.append(ElemSet::full(2));
  FiniteSpace flipped_b = FiniteSpace::make({"b", "a"}, std::move(g));
  CHECK(spaces_equal(sierpinski(), flipped_b));
}

TEST_CASE("sup map continuity on lattices") {
  suite::Rng r(53);
  for (int it = 0; it < 25; ++it) {
    FinitePoset lat = open_set_lattice(suite::random_poset(r, 5));
    auto rep = sup_map_jointly_continuous(lat);
    CHECK(rep.continuous);
    CHECK(!rep.witness);
  }
  CHECK(sup_map_jointly_continuous(diamond()).continuous);
  CHECK_THROWS_AS(sup_map_jointly_continuous(two_antichain()), NotALatticeError);
}

TEST_CASE("product topology of scott spaces of lattices equals the order topology") {
  // Desk-scale instance of the lattice comparator with both pipelines.
  FinitePoset sl = open_set_lattice(two_chain());
  FinitePoset sp = open_set_lattice(two_chain());
  FiniteSpace lhs = product_space(alexandrov_space(sl), alexandrov_space(sp));
  FiniteSpace rhs = alexandrov_space(sl.product(sp));
  CHECK(spaces_equal(lhs, rhs));
}
