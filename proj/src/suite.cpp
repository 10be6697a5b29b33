#include "ordertop/suite.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace ordertop::suite {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Nat nat_of(std::uint64_t v) { return Nat(static_cast<unsigned long>(v)); }

}  // namespace

SlicePair random_slice(Rng& r, std::uint32_t max_component) {
  std::uint64_t b = 1 + r.below(max_component);
  std::uint64_t a = r.below(b);
  return SlicePair::make(nat_of(a), nat_of(b));
}

Word random_word(Rng& r, std::uint32_t max_len, std::uint32_t max_letter) {
  std::size_t len = 1 + r.below(max_len);
  std::vector<Nat> ls;
  for (std::size_t i = 0; i < len; ++i) ls.push_back(nat_of(r.below(max_letter + 1)));
  return Word::of(std::move(ls));
}

BElem random_b_elem(Rng& r) {
  Nat m = r.chance(1, 4) ? f_encode(random_slice(r), random_word(r)) : nat_of(r.below(7));
  Nat n = nat_of(r.below(5));
  if (r.chance(1, 4)) return b_top(std::move(m), std::move(n));
  SlicePair s = random_slice(r);
  MElem x = r.chance(1, 2) ? MElem::nat(nat_of(r.below(5))) : MElem::word(random_word(r));
  return BElem{std::move(m), std::move(n), LElem::in_slice(std::move(s), std::move(x))};
}

BElem random_b_above(Rng& r, const BElem& u) {
  if (u.l.is_top() || r.chance(1, 8)) return u;
  const SlicePair& s = u.l.at->slice;
  const MElem& x = u.l.at->m;
  switch (r.below(4)) {
    case 0:
      return b_top(u.m, u.n);
    case 1: {  // raise the M-component inside the slice
      MElem y = x.is_nat() ? MElem::nat(x.nat_value() + nat_of(1 + r.below(3)))
                           : MElem::word(x.word_value().extended(nat_of(r.below(3))));
      return BElem{u.m, u.n, LElem::in_slice(s, std::move(y))};
    }
    case 2: {
      if (!x.is_nat()) {
        if (u.m == s.a) {  // word side climbs one level through its code
          Word y = r.chance(1, 2) ? x.word_value() : x.word_value().extended(nat_of(r.below(3)));
          return b_top(f_encode(s, y), u.n + 1);
        }
        return b_top(u.m, u.n);
      }
      if (u.m == s.b) {
        Nat y = x.nat_value() + nat_of(r.below(3));
        return b_top(f_encode(s, Word::single(std::move(y))), u.n + 1);
      }
      if (auto d = f_decode(u.m); d && d->slice == s) {
        Nat y = x.nat_value() + nat_of(r.below(3));
        return b_top(f_encode(s, d->word.extended(std::move(y))), u.n);
      }
      return b_top(u.m, u.n);
    }
    default:
      return u;
  }
}

FnRep random_fn(Rng& r) {
  std::map<Nat, Nat> ov;
  std::size_t k = r.below(3);
  for (std::size_t i = 0; i < k; ++i) ov[nat_of(r.below(7))] = nat_of(r.below(10));
  return FnRep::make(std::move(ov), nat_of(r.below(10)));
}

XRep random_x(Rng& r) {
  std::map<Nat, Nat> ov;
  std::size_t k = r.below(3);
  for (std::size_t i = 0; i < k; ++i) {
    Nat n = nat_of(r.below(7));
    ov[n] = f_encode(phi(n), random_word(r, 2, 2));
  }
  return XRep::make(std::move(ov));
}

P1Point random_p1(Rng& r) {
  switch (r.below(8)) {
    case 0:
      return P1Point::top();
    case 1:
    case 2:
    case 3:
      return P1Point::fn(random_fn(r), nat_of(r.below(5)));
    default:
      return P1Point::in_b(random_b_elem(r));
  }
}

P1Point random_p1_above(Rng& r, const P1Point& u) {
  if (r.chance(1, 8)) return P1Point::top();
  switch (u.v.index()) {
    case 0: {
      const auto& a = std::get<P1Point::FnLevel>(u.v);
      if (r.chance(1, 2)) return P1Point::fn(a.f, a.n + nat_of(r.below(3)));
      Nat k = a.n + nat_of(r.below(3));
      Nat val = a.f(k);
      return P1Point::in_b(b_top(std::move(val), std::move(k)));
    }
    case 1:
      return P1Point::in_b(random_b_above(r, u.b()));
    default:
      return P1Point::top();
  }
}

P2Point random_p2(Rng& r) {
  switch (r.below(8)) {
    case 0:
      return P2Point::top();
    case 1:
    case 2:
    case 3:
      return P2Point::xf(random_x(r), nat_of(r.below(5)), nat_of(r.below(5)));
    default:
      return P2Point::in_b(random_b_elem(r));
  }
}

P2Point random_p2_above(Rng& r, const P2Point& u) {
  if (r.chance(1, 8)) return P2Point::top();
  switch (u.v.index()) {
    case 0: {
      const auto& a = std::get<P2Point::XfLevel>(u.v);
      if (r.chance(1, 2)) return P2Point::xf(a.f, a.n + nat_of(r.below(3)), a.k);
      Nat m = a.n + nat_of(r.below(3));
      Nat val = a.f(m);
      return P2Point::in_b(b_top(std::move(val), a.k));
    }
    case 1:
      return P2Point::in_b(random_b_above(r, u.b()));
    default:
      return P2Point::top();
  }
}

BFamily random_b_family(Rng& r) {
  Nat m = nat_of(r.below(5));
  Nat n = nat_of(r.below(5));
  SlicePair s = random_slice(r);
  if (r.chance(1, 2)) return BFamily{std::move(m), std::move(n), std::move(s), AllNatsTail{}};
  std::vector<Nat> steps;
  std::size_t k = r.below(4);
  for (std::size_t i = 0; i < k; ++i) steps.push_back(nat_of(r.below(4)));
  return BFamily{std::move(m), std::move(n), std::move(s),
                 WordChainTail{random_word(r, 2, 3), std::move(steps)}};
}

CoordFamily random_coord_family_in_a(Rng& r) {
  // Every pattern keeps each member below a diagonal pair of max B, so
  // membership in A holds by construction and is re-verified downstream.
  switch (r.below(5)) {
    case 0: {  // left B-family, fixed right below the family's sup
      BFamily fam = random_b_family(r);
      BElem sup = family_sup(fam);
      P2Point right = r.chance(1, 2)
                          ? P2Point::in_b(sup)
                          : P2Point::in_b(BElem{sup.m, sup.n,
                                                LElem::in_slice(random_slice(r),
                                                                MElem::nat(nat_of(r.below(4))))});
      return CoordFamily{CoordFamily::BLeft{std::move(fam), std::move(right)}};
    }
    case 1: {  // right B-family, fixed left below the sup
      BFamily fam = random_b_family(r);
      BElem sup = family_sup(fam);
      P1Point left;
      switch (r.below(3)) {
        case 0:
          left = P1Point::in_b(sup);
          break;
        case 1:
          left = P1Point::in_b(
              BElem{sup.m, sup.n,
                    LElem::in_slice(random_slice(r), MElem::word(random_word(r)))});
          break;
        default: {
          // (f, n) with f(fam.n) = fam.m sits below (fam.m, fam.n, top).
          std::map<Nat, Nat> ov;
          ov[fam.n] = fam.m;
          FnRep f = FnRep::make(std::move(ov), fam.m + 1);
          Nat lvl = nat_of(r.below(5));
          if (lvl > fam.n) lvl = fam.n;
          left = P1Point::fn(std::move(f), std::move(lvl));
          break;
        }
      }
      return CoordFamily{CoordFamily::BRight{std::move(left), std::move(fam)}};
    }
    case 2: {  // appended-letter family against a word partner one level down
      SlicePair s = random_slice(r);
      Word s0 = random_word(r, 2, 3);
      Nat n0 = nat_of(1 + r.below(4));
      BFamily fam{f_encode(s, s0), n0, s, AllNatsTail{}};
      Word xstar = r.chance(1, 2) ? s0 : Word{std::vector<Nat>(s0.letters.begin(),
                                                               s0.letters.begin() + 1)};
      P2Point right =
          P2Point::in_b(BElem{s.a, n0 - 1, LElem::in_slice(s, MElem::word(std::move(xstar)))});
      return CoordFamily{CoordFamily::BLeft{std::move(fam), std::move(right)}};
    }
    case 3: {  // mirrored append pattern
      SlicePair s = random_slice(r);
      Word s0 = random_word(r, 2, 3);
      Nat n0 = nat_of(1 + r.below(4));
      BFamily fam{f_encode(s, s0), n0, s, AllNatsTail{}};
      Word xstar = r.chance(1, 2) ? s0 : Word{std::vector<Nat>(s0.letters.begin(),
                                                               s0.letters.begin() + 1)};
      P1Point left =
          P1Point::in_b(BElem{s.a, n0 - 1, LElem::in_slice(s, MElem::word(std::move(xstar)))});
      return CoordFamily{CoordFamily::BRight{std::move(left), std::move(fam)}};
    }
    default: {  // fixed choice-function point below a code-valued sup
      SlicePair s = random_slice(r);
      Word w = random_word(r, 2, 2);
      Nat m0 = f_encode(s, w);
      Nat mstar = phi_inv(s);
      Nat n0 = nat_of(r.below(5));
      BFamily fam{m0, n0, random_slice(r), AllNatsTail{}};
      std::map<Nat, Nat> ov;
      ov[mstar] = m0;
      XRep f = XRep::make(std::move(ov));
      Nat lvl = mstar >= 2 ? mstar - r.below(2) : mstar;
      P2Point right = P2Point::xf(std::move(f), std::move(lvl), n0);
      return CoordFamily{CoordFamily::BLeft{std::move(fam), std::move(right)}};
    }
  }
}

FinitePoset random_poset(Rng& r, std::uint32_t max_elems) {
  std::size_t n = 1 + r.below(max_elems);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  std::uint64_t density = 1 + r.below(4);  // edge chance density/8
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r.chance(density, 8)) pairs.emplace_back(labels[i], labels[j]);
  return FinitePoset::from_relations(std::move(labels), pairs);
}

std::vector<ElemSet> irreducible_closed_sets_by_definition(const FiniteSpace& s) {
  std::vector<ElemSet> closed;
  for (std::size_t i = 0; i < s.opens().count(); ++i)
    closed.push_back(s.opens().as_elemset(i).complement());
  std::vector<ElemSet> irr;
  for (const ElemSet& c : closed) {
    if (!c.any()) continue;
    bool ok = true;
    for (const ElemSet& a : closed) {
      for (const ElemSet& b : closed) {
        ElemSet un = a;
        un |= b;
        if (c.subset_of(un) && !c.subset_of(a) && !c.subset_of(b)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) irr.push_back(c);
  }
  std::sort(irr.begin(), irr.end(), [](const ElemSet& a, const ElemSet& b) {
    auto wa = a.words(), wb = b.words();
    return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
  });
  return irr;
}

CriterionResult oracle_equivalence(const SuiteConfig& cfg) {
  auto t0 = Clock::now();
  BTruncation trunc(cfg.window);
  const auto& elems = trunc.elements();
  const std::size_t n = elems.size();
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < n && mismatches == 0; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b_leq(elems[i], elems[j]) != trunc.leq_idx(i, j)) {
        ++mismatches;
        break;
      }
    }
  }
  double elapsed = seconds_since(t0);
  bool in_budget = elapsed < 60.0;
  std::ostringstream d;
  d << n << " elements, " << n * n << " pairs, " << mismatches << " mismatches";
  if (!in_budget) d << ", over the 60s budget";
  return {"oracle equivalence for the B order", mismatches == 0 && in_budget, d.str(), elapsed};
}

CriterionResult order_laws(const SuiteConfig& cfg) {
  auto t0 = Clock::now();
  Rng r(cfg.seed ^ 0xa11ce);
  const std::uint64_t triples = static_cast<std::uint64_t>(cfg.samples) * 100;
  std::uint64_t violations = 0;
  std::uint64_t related = 0;

  auto check3 = [&](auto&& leq, const auto& u, const auto& v, const auto& w) {
    if (!leq(u, u)) ++violations;
    bool uv = leq(u, v), vu = leq(v, u);
    if (uv && vu && !(u == v)) ++violations;
    if (uv && leq(v, w)) {
      ++related;
      if (!leq(u, w)) ++violations;
    }
  };

  for (std::uint64_t i = 0; i < triples; ++i) {
    bool chained = r.chance(3, 5);
    {
      BElem u = random_b_elem(r);
      BElem v = chained ? random_b_above(r, u) : random_b_elem(r);
      BElem w = chained ? random_b_above(r, v) : random_b_elem(r);
      check3([](const BElem& a, const BElem& b) { return b_leq(a, b); }, u, v, w);
    }
    {
      P1Point u = random_p1(r);
      P1Point v = chained ? random_p1_above(r, u) : random_p1(r);
      P1Point w = chained ? random_p1_above(r, v) : random_p1(r);
      check3([](const P1Point& a, const P1Point& b) { return p1_leq(a, b); }, u, v, w);
    }
    {
      P2Point u = random_p2(r);
      P2Point v = chained ? random_p2_above(r, u) : random_p2(r);
      P2Point w = chained ? random_p2_above(r, v) : random_p2(r);
      check3([](const P2Point& a, const P2Point& b) { return p2_leq(a, b); }, u, v, w);
    }
    {
      ProductPoint u{random_p1(r), random_p2(r)};
      ProductPoint v = chained ? ProductPoint{random_p1_above(r, u.x), random_p2_above(r, u.y)}
                               : ProductPoint{random_p1(r), random_p2(r)};
      ProductPoint w = chained ? ProductPoint{random_p1_above(r, v.x), random_p2_above(r, v.y)}
                               : ProductPoint{random_p1(r), random_p2(r)};
      check3([](const ProductPoint& a, const ProductPoint& b) { return p12_leq(a, b); }, u, v, w);
    }
  }
  std::ostringstream d;
  d << triples << " triples per structure, " << related
    << " composable chains closed, " << violations << " violations";
  return {"partial-order laws on B, P1, P2, P1xP2", violations == 0, d.str(), seconds_since(t0)};
}

CriterionResult codec_laws(const SuiteConfig& cfg) {
  auto t0 = Clock::now();
  std::uint64_t checks = 0, failures = 0;
  auto ensure = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
  };

  std::vector<SlicePair> slices;
  for (std::uint32_t b = 1; b <= 6; ++b)
    for (std::uint32_t a = 0; a < b; ++a) slices.push_back(SlicePair::make(a, b));
  std::vector<Word> words;
  {
    std::vector<Nat> cur;
    auto rec = [&](auto&& self) -> void {
      if (!cur.empty()) words.push_back(Word{cur});
      if (cur.size() == 3) return;
      for (std::uint32_t l = 0; l <= 3; ++l) {
        cur.push_back(nat_of(l));
        self(self);
        cur.pop_back();
      }
    };
    rec(rec);
  }

  std::set<Nat> all_codes;
  for (const auto& s : slices) {
    std::set<Nat> codes;
    for (const auto& w : words) {
      Nat k = f_encode(s, w);
      ensure(codes.insert(k).second);      // injective per slice
      ensure(all_codes.insert(k).second);  // disjoint across slices
      ensure(k > s.b);                     // every member of i(a,b) exceeds b
      auto d = f_decode(k);
      ensure(d && d->slice == s && d->word == w);  // exact round trip
      ensure(in_i(k, s));
      auto idx = e_index(k);
      ensure(idx && *idx == phi_inv(s));
    }
    for (const auto& w : words)
      for (const auto& x : words)
        if (w.prefix_of(x)) ensure(f_encode(s, w) <= f_encode(s, x));
  }
  for (std::uint32_t u = 0; u <= 30; ++u) {
    for (std::uint32_t v = 0; v <= 30; ++v) {
      auto [u2, v2] = cantor_unpair(cantor_pair(nat_of(u), nat_of(v)));
      ensure(u2 == nat_of(u) && v2 == nat_of(v));
    }
  }
  for (const auto& w : words) {
    auto back = word_decode(word_code(w));
    ensure(back && *back == w);
  }
  // phi against an independent enumeration of the pairs.
  {
    std::vector<SlicePair> enumerated;
    for (std::uint32_t b = 1; enumerated.size() <= 100; ++b)
      for (std::uint32_t a = 0; a < b; ++a) enumerated.push_back(SlicePair::make(a, b));
    for (std::uint32_t i = 0; i <= 100; ++i) {
      ensure(phi(nat_of(i)) == enumerated[i]);
      ensure(phi_inv(phi(nat_of(i))) == nat_of(i));
    }
  }
  std::ostringstream d;
  d << checks << " checks, " << failures << " failures";
  return {"codec laws (disjointness, growth, monotone injectivity, round trips)", failures == 0,
          d.str(), seconds_since(t0)};
}

CriterionResult sup_formula(const SuiteConfig& cfg) {
  auto t0 = Clock::now();
  Rng r(cfg.seed ^ 0x50f0);
  std::uint64_t failures = 0;
  const std::uint32_t fams = cfg.samples;
  for (std::uint32_t i = 0; i < fams; ++i) {
    BFamily fam = random_b_family(r);
    BElem sup = family_sup(fam);
    if (!(sup == b_top(fam.m, fam.n))) ++failures;
    std::vector<BElem> members;
    for (std::uint64_t k = 0; k < 20; ++k) members.push_back(family_member(fam, k));
    // Far members rule out bounds that only cover the sampled prefix.
    bool word_chain = std::holds_alternative<WordChainTail>(fam.tail);
    for (std::uint64_t k : word_chain ? std::vector<std::uint64_t>{97, 255}
                                      : std::vector<std::uint64_t>{1000, 1000000}) {
      members.push_back(family_member(fam, k));
    }
    for (const BElem& mem : members) {
      if (!b_leq(mem, sup) || mem == sup) ++failures;
    }
    for (std::uint32_t c = 0; c < 20; ++c) {
      BElem cand;
      switch (r.below(4)) {
        case 0:
          cand = sup;
          break;
        case 1:
          cand = b_top(nat_of(r.below(6)), nat_of(r.below(6)));
          break;
        case 2:
          cand = random_b_above(r, members[r.below(20)]);
          break;
        default:
          cand = random_b_elem(r);
          break;
      }
      bool bounds_all = true;
      for (const BElem& mem : members)
        if (!b_leq(mem, cand)) {
          bounds_all = false;
          break;
        }
      if (bounds_all && !b_leq(sup, cand)) ++failures;
    }
  }
  std::ostringstream d;
  d << fams << " families, 22 members and 20 candidate bounds each, " << failures << " failures";
  return {"directed-family sup formula on B", failures == 0, d.str(), seconds_since(t0)};
}

CriterionResult closedness(const SuiteConfig& cfg) {
  auto t0 = Clock::now();
  Rng r(cfg.seed ^ 0xc105ed);
  const std::uint32_t fams = cfg.samples * 2;
  std::uint64_t failures = 0;
  for (std::uint32_t i = 0; i < fams; ++i) {
    CoordFamily fam = random_coord_family_in_a(r);
    try {
      if (!a_closed_check(fam, 12)) ++failures;
    } catch (const FamilyNotInAError&) {
      ++failures;
    }
  }
  std::ostringstream d;
  d << fams << " coordinate families inside A, " << failures << " failures";
  return {"A is closed under coordinatewise directed sups", failures == 0, d.str(),
          seconds_since(t0)};
}

CriterionResult irreducibility(const SuiteConfig& cfg) {
  auto t0 = Clock::now();
  Rng r(cfg.seed ^ 0x1eed);
  std::uint64_t failures = 0;

  auto random_member = [&](bool left_top_ok) {
    P1Point x = random_p1(r);
    P2Point y = random_p2(r);
    if (x.is_top() && y.is_top()) {
      if (left_top_ok)
        y = P2Point::in_b(random_b_elem(r));
      else
        x = P1Point::in_b(random_b_elem(r));
    }
    return ProductPoint{std::move(x), std::move(y)};
  };

  const std::uint32_t pairs = cfg.samples;
  for (std::uint32_t i = 0; i < pairs; ++i) {
    std::vector<ProductPoint> f1, f2;
    std::size_t n1 = 1 + r.below(5), n2 = 1 + r.below(5);
    for (std::size_t k = 0; k < n1; ++k) f1.push_back(random_member(k % 2));
    for (std::size_t k = 0; k < n2; ++k) f2.push_back(random_member(k % 2));
    auto res = a_escape(f1, f2, 10000);
    if (std::holds_alternative<Exhausted>(res)) {
      ++failures;
      continue;
    }
    const ProductPoint& p = std::get<ProductPoint>(res);
    if (!a_member(p)) ++failures;
    for (const auto& q : f1)
      if (p12_leq(p, q)) ++failures;
    for (const auto& q : f2)
      if (p12_leq(p, q)) ++failures;
  }

  const std::uint32_t chains = cfg.samples / 2;
  for (std::uint32_t i = 0; i < chains; ++i) {
    Nat m2 = nat_of(1 + r.below(4));
    Nat m1 = nat_of(r.below(mpz_get_ui(m2.get_mpz_t())));
    Nat n = nat_of(r.below(4));
    std::vector<Nat> letters;
    std::size_t len = 1 + r.below(4);
    for (std::size_t k = 0; k < len; ++k) letters.push_back(nat_of(r.below(6)));
    try {
      InterleaveChain ch = interleave_chain(m1, m2, n, letters);
      for (const auto& link : ch.links)
        if (!b_leq(link.lo, link.hi)) ++failures;
      for (std::size_t j = 0; j + 1 < ch.word_elems.size(); ++j) {
        if (!b_leq(ch.word_elems[j], ch.word_elems[j + 1]) ||
            ch.word_elems[j] == ch.word_elems[j + 1])
          ++failures;
      }
      // The meeting point dominates the whole U-side chain and the last
      // V-side stage; the V-side origin enters through the first stage.
      if (!b_leq(ch.word_elems.front(), ch.final_elem)) ++failures;
      if (!b_leq(ch.word_elems.back(), ch.final_elem)) ++failures;
      if (!b_leq(ch.v_start, ch.tops.front())) ++failures;
      if (!a_member(ProductPoint{P1Point::in_b(ch.final_elem), P2Point::in_b(ch.final_elem)}))
        ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  std::ostringstream d;
  d << pairs << " escape instances, " << chains << " interleaving chains, " << failures
    << " failures";
  return {"A meets every pair of subbasic opens around it", failures == 0, d.str(),
          seconds_since(t0)};
}

CriterionResult not_principal(const SuiteConfig& cfg) {
  auto t0 = Clock::now();
  Rng r(cfg.seed ^ 0x9047);
  std::uint64_t failures = 0;
  const std::uint32_t points = cfg.samples;
  for (std::uint32_t i = 0; i < points; ++i) {
    ProductPoint p = (i % 10 == 9) ? ProductPoint{P1Point::top(), P2Point::top()}
                                   : ProductPoint{random_p1(r), random_p2(r)};
    auto res = not_point_closure(p, 10000);
    bool both_tops = p.x.is_top() && p.y.is_top();
    if (both_tops) {
      if (!std::holds_alternative<Exhausted>(res)) ++failures;
      if (a_member(p)) ++failures;  // (top1, top2) is not in A
      continue;
    }
    if (std::holds_alternative<Exhausted>(res)) {
      ++failures;
      continue;
    }
    const BElem& t = std::get<BElem>(res);
    ProductPoint diag{P1Point::in_b(t), P2Point::in_b(t)};
    if (p12_leq(diag, p)) ++failures;
    if (!a_member(diag)) ++failures;
  }
  std::ostringstream d;
  d << points << " points, " << failures << " failures";
  return {"A is not the closure of any single point", failures == 0, d.str(), seconds_since(t0)};
}

CriterionResult finite_sobriety(const SuiteConfig& cfg) {
  auto t0 = Clock::now();
  Rng r(cfg.seed ^ 0x50be4);
  const std::uint32_t posets = cfg.samples * 5;
  std::uint64_t failures = 0;
  std::uint64_t cross_checked = 0;
  for (std::uint32_t i = 0; i < posets; ++i) {
    FinitePoset p = random_poset(r, 8);
    FiniteSpace sp = alexandrov_space(p);
    SobrietyReport rep = sp.sobriety();
    if (!rep.sober || rep.irreducibles.size() != p.size()) ++failures;
    if (p.size() <= 6) {
      ++cross_checked;
      auto by_def = irreducible_closed_sets_by_definition(sp);
      auto impl = sp.irreducible_closed_sets();
      if (by_def != impl) ++failures;
    }
  }
  std::ostringstream d;
  d << posets << " posets up to 8 elements, " << cross_checked
    << " exhaustive irreducibility cross-checks, " << failures << " failures";
  return {"finite Alexandrov spaces are sober with pointwise irreducibles", failures == 0,
          d.str(), seconds_since(t0)};
}

CriterionResult comparator(const SuiteConfig& cfg) {
  auto t0 = Clock::now();
  Rng r(cfg.seed ^ 0xc09a9e);
  const std::uint32_t cases = cfg.samples;
  std::uint64_t failures = 0;
  std::uint64_t over_budget = 0;
  // The cap must clear the worst 3-by-3 instance: two three-point
  // antichains produce the full 7828354-element family of monotone maps.
  const std::size_t cap = std::size_t{1} << 24;
  for (std::uint32_t i = 0; i < cases; ++i) {
    auto tc = Clock::now();
    FinitePoset l = random_poset(r, 3);
    FinitePoset p = random_poset(r, 3);
    FinitePoset sl = open_set_lattice(l);
    FinitePoset sp = open_set_lattice(p);
    // Product of the two Scott spaces versus the up-set topology of the
    // product lattice, built by independent pipelines.
    FiniteSpace lhs = product_space(alexandrov_space(sl, cap), alexandrov_space(sp, cap), cap);
    FiniteSpace rhs = alexandrov_space(sl.product(sp), cap);
    if (!spaces_equal(lhs, rhs)) ++failures;
    if (!sup_map_jointly_continuous(sl).continuous) ++failures;
    if (seconds_since(tc) >= 10.0) ++over_budget;
  }
  std::ostringstream d;
  d << cases << " random lattice pairs, " << failures << " failures";
  if (over_budget) d << ", " << over_budget << " over the 10s per-case budget";
  return {"product topology matches the product-order topology on open-set lattices",
          failures == 0 && over_budget == 0, d.str(), seconds_since(t0)};
}

std::vector<CriterionResult> run_all(const SuiteConfig& cfg) {
  return {
      oracle_equivalence(cfg), order_laws(cfg),     codec_laws(cfg),
      sup_formula(cfg),        closedness(cfg),     irreducibility(cfg),
      not_principal(cfg),      finite_sobriety(cfg), comparator(cfg),
  };
}

}  // namespace ordertop::suite
