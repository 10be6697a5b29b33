#include "ordertop/codec.hpp"

#include <map>
#include <utility>

namespace ordertop {

std::string nat_str(const Nat& n) { return n.get_str(); }

Word Word::of(std::vector<Nat> ls) {
  if (ls.empty()) throw CodecError("words are nonempty");
  for (const Nat& l : ls)
    if (l < 0) throw CodecError("word letters are naturals");
  return Word{std::move(ls)};
}

bool Word::prefix_of(const Word& other) const {
  if (length() > other.length()) return false;
  for (std::size_t i = 0; i < length(); ++i)
    if (letters[i] != other.letters[i]) return false;
  return true;
}

Word Word::extended(Nat letter) const {
  Word w = *this;
  w.letters.push_back(std::move(letter));
  return w;
}

bool Word::operator<(const Word& o) const {
  if (length() != o.length()) return length() < o.length();
  for (std::size_t i = 0; i < length(); ++i) {
    if (letters[i] != o.letters[i]) return letters[i] < o.letters[i];
  }
  return false;
}

SlicePair SlicePair::make(Nat a, Nat b) {
  if (a < 0 || !(a < b)) throw CodecError("slice pair needs 0 <= a < b");
  return SlicePair{std::move(a), std::move(b)};
}

std::string SlicePair::str() const { return "(" + a.get_str() + "," + b.get_str() + ")"; }

Nat cantor_pair(const Nat& u, const Nat& v) {
  Nat s = u + v;
  Nat t = s * (s + 1);
  t >>= 1;
  return t + v;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& k) {
  // w = floor((sqrt(8k+1) - 1) / 2) is the diagonal index.
  Nat disc = 8 * k + 1;
  Nat root = sqrt(disc);
  Nat w = (root - 1) >> 1;
  Nat t = w * (w + 1);
  t >>= 1;
  Nat v = k - t;
  Nat u = w - v;
  return {std::move(u), std::move(v)};
}

namespace {

const std::vector<std::uint32_t>& primes_up_to_index(std::size_t idx) {
  static thread_local std::vector<std::uint32_t> primes{2, 3};
  while (primes.size() <= idx) {
    std::uint32_t c = primes.back() + 2;
    for (;;) {
      bool composite = false;
      for (std::uint32_t p : primes) {
        if (static_cast<std::uint64_t>(p) * p > c) break;
        if (c % p == 0) {
          composite = true;
          break;
        }
      }
      if (!composite) break;
      c += 2;
    }
    primes.push_back(c);
  }
  return primes;
}

// Cap on the bit size of a word code; beyond this the number is no longer a
// workable value for the oracles (a letter near 2^26 alone needs ~2^26 bits).
constexpr unsigned long kMaxCodeBits = 1u << 26;

}  // namespace

Nat word_code(const Word& w) {
  const auto& primes = primes_up_to_index(w.length());
  Nat acc = 1;
  unsigned long bits = 0;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (!w.letters[i].fits_ulong_p() || w.letters[i].get_ui() + 1 > kMaxCodeBits)
      throw CodecError("letter too large to encode: " + w.letters[i].get_str());
    unsigned long e = w.letters[i].get_ui() + 1;
    bits += e * 6;  // crude overestimate of bits per factor
    if (bits > kMaxCodeBits) throw CodecError("word code would exceed the size cap");
    Nat f;
    mpz_ui_pow_ui(f.get_mpz_t(), primes[i], e);
    acc *= f;
  }
  return acc;
}

std::optional<Word> word_decode(const Nat& h) {
  if (h <= 1) return std::nullopt;
  Nat cur = h;
  std::vector<Nat> letters;
  for (std::size_t i = 0;; ++i) {
    std::uint32_t p = primes_up_to_index(i)[i];
    unsigned long e = 0;
    while (mpz_divisible_ui_p(cur.get_mpz_t(), p)) {
      mpz_divexact_ui(cur.get_mpz_t(), cur.get_mpz_t(), p);
      ++e;
    }
    if (e == 0) break;  // first gap: nothing beyond it may remain
    letters.emplace_back(e - 1);
  }
  if (cur != 1 || letters.empty()) return std::nullopt;
  return Word{std::move(letters)};
}

Nat f_encode(const SlicePair& s, const Word& w) {
  return cantor_pair(cantor_pair(s.a, s.b), word_code(w));
}

std::optional<SliceWord> f_decode(const Nat& k) {
  // Decodes recur heavily in the order oracles over a small set of codes.
  static thread_local std::map<Nat, std::optional<SliceWord>> memo;
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  std::optional<SliceWord> result;
  auto [u, v] = cantor_unpair(k);
  auto [a, b] = cantor_unpair(u);
  if (a < b) {
    if (auto w = word_decode(v)) result = SliceWord{SlicePair{a, b}, std::move(*w)};
  }
  if (memo.size() > 4096) memo.clear();
  memo.emplace(k, result);
  return result;
}

bool in_i(const Nat& k, const SlicePair& s) {
  auto d = f_decode(k);
  return d && d->slice == s;
}

SlicePair phi(const Nat& n) {
  if (n < 0) throw CodecError("phi domain is the naturals");
  // Find b with b(b-1)/2 <= n < b(b+1)/2.
  Nat disc = 8 * n + 1;
  Nat root = sqrt(disc);
  Nat b = (root + 1) >> 1;
  Nat lo = b * (b - 1) >> 1;
  if (lo > n) {
    b -= 1;
    lo = b * (b - 1) >> 1;
  } else {
    Nat hi = b * (b + 1) >> 1;
    if (n >= hi) {
      b += 1;
      lo = b * (b - 1) >> 1;
    }
  }
  Nat a = n - lo;
  return SlicePair{std::move(a), std::move(b)};
}

Nat phi_inv(const SlicePair& s) {
  Nat lo = s.b * (s.b - 1) >> 1;
  return lo + s.a;
}

std::optional<Nat> e_index(const Nat& k) {
  auto d = f_decode(k);
  if (!d) return std::nullopt;
  return phi_inv(d->slice);
}

Nat e_default(const Nat& n) { return f_encode(phi(n), Word::single(0)); }

}  // namespace ordertop
