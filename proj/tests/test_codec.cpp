#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "ordertop/codec.hpp"

using namespace ordertop;

TEST_CASE("cantor pairing basics") {
  CHECK(cantor_pair(0, 0) == 0);
  CHECK(cantor_pair(0, 1) == 2);
  CHECK(cantor_pair(1, 1) == 4);
  auto [u, v] = cantor_unpair(4);
  CHECK(u == 1);
  CHECK(v == 1);
}

TEST_CASE("cantor pairing round trips on a grid and on large values") {
  for (unsigned long a = 0; a <= 40; ++a) {
    for (unsigned long b = 0; b <= 40; ++b) {
      auto [u, v] = cantor_unpair(cantor_pair(a, b));
      CHECK(u == a);
      CHECK(v == b);
    }
  }
  Nat big = Nat(1) << 200;
  auto [u, v] = cantor_unpair(cantor_pair(big, big + 12345));
  CHECK(u == big);
  CHECK(v == big + 12345);
  // unpair is total: every natural decodes and re-encodes to itself.
  for (unsigned long k = 0; k <= 2000; ++k) {
    auto [x, y] = cantor_unpair(k);
    CHECK(cantor_pair(x, y) == k);
  }
}

TEST_CASE("word codes") {
  CHECK(word_code(Word::of({0})) == 2);
  CHECK(word_code(Word::of({0, 0})) == 6);
  CHECK(word_code(Word::of({5})) == 64);
  CHECK(word_code(Word::of({1, 0})) == 12);

  CHECK(!word_decode(0));
  CHECK(!word_decode(1));
  CHECK(!word_decode(5));  // skips the first prime entirely
  CHECK(!word_decode(9));  // 3^2 with no factor 2
  auto w = word_decode(12);
  REQUIRE(w);
  CHECK(*w == Word::of({1, 0}));
}

TEST_CASE("word code is monotone and injective on a sample") {
  std::set<Nat> seen;
  std::vector<Word> words;
  for (unsigned long a = 0; a <= 3; ++a) {
    words.push_back(Word::of({Nat(a)}));
    for (unsigned long b = 0; b <= 3; ++b) {
      words.push_back(Word::of({Nat(a), Nat(b)}));
      for (unsigned long c = 0; c <= 3; ++c)
        words.push_back(Word::of({Nat(a), Nat(b), Nat(c)}));
    }
  }
  for (const Word& w : words) {
    Nat code = word_code(w);
    CHECK(code >= 2);
    CHECK(seen.insert(code).second);
    auto back = word_decode(code);
    REQUIRE(back);
    CHECK(*back == w);
    for (const Word& x : words)
      if (w.prefix_of(x)) CHECK(word_code(w) <= word_code(x));
  }
}

TEST_CASE("slice encoding f and its inverse") {
  SlicePair s01 = SlicePair::make(0, 1);
  CHECK(f_encode(s01, Word::of({5})) == 2275);
  auto d = f_decode(2275);
  REQUIRE(d);
  CHECK(d->slice == s01);
  CHECK(d->word == Word::of({5}));
  CHECK(!f_decode(0));

  CHECK(in_i(2275, s01));
  CHECK(!in_i(2275, SlicePair::make(0, 2)));
  CHECK(!in_i(0, s01));
}

TEST_CASE("phi enumerates slices in the frozen order") {
  CHECK(phi(0) == SlicePair::make(0, 1));
  CHECK(phi(1) == SlicePair::make(0, 2));
  CHECK(phi(2) == SlicePair::make(1, 2));
  CHECK(phi(3) == SlicePair::make(0, 3));
  CHECK(phi(5) == SlicePair::make(2, 3));
  for (unsigned long n = 0; n <= 200; ++n) CHECK(phi_inv(phi(n)) == n);
}

TEST_CASE("e_index locates the level set of a code") {
  CHECK(*e_index(2275) == 0);
  CHECK(!e_index(0));
  Nat k = f_encode(phi(7), Word::of({1, 2}));
  CHECK(*e_index(k) == 7);
  CHECK(e_default(5) == 212);
  CHECK(*e_index(e_default(5)) == 5);
}

TEST_CASE("constructor guards") {
  CHECK_THROWS_AS(Word::of({}), CodecError);
  CHECK_THROWS_AS(SlicePair::make(1, 1), CodecError);
  CHECK_THROWS_AS(SlicePair::make(3, 2), CodecError);
  CHECK_THROWS_AS(word_code(Word::of({Nat(1) << 40})), CodecError);
}
