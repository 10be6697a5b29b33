#include "ordertop/b_poset.hpp"

#include <algorithm>
#include <set>

namespace ordertop {

FnRep FnRep::make(std::map<Nat, Nat> overrides, Nat tail) {
  if (tail < 0) throw CodecError("function values are naturals");
  for (auto it = overrides.begin(); it != overrides.end();) {
    if (it->first < 0 || it->second < 0) throw CodecError("function values are naturals");
    it = (it->second == tail) ? overrides.erase(it) : std::next(it);
  }
  return FnRep{std::move(overrides), std::move(tail)};
}

Nat FnRep::operator()(const Nat& k) const {
  auto it = overrides.find(k);
  return it == overrides.end() ? tail : it->second;
}

XRep XRep::make(std::map<Nat, Nat> overrides) {
  for (auto it = overrides.begin(); it != overrides.end();) {
    auto idx = e_index(it->second);
    if (!idx || *idx != it->first)
      throw InvalidXRepError("value " + nat_str(it->second) + " not in E_" + nat_str(it->first));
    it = (it->second == e_default(it->first)) ? overrides.erase(it) : std::next(it);
  }
  return XRep{std::move(overrides)};
}

Nat XRep::operator()(const Nat& n) const {
  auto it = overrides.find(n);
  return it == overrides.end() ? e_default(n) : it->second;
}

bool MElem::operator<(const MElem& o) const {
  if (v.index() != o.v.index()) return v.index() < o.v.index();
  if (is_nat()) return nat_value() < o.nat_value();
  return word_value() < o.word_value();
}

bool m_leq(const MElem& x, const MElem& y) {
  if (x.is_nat() != y.is_nat()) return false;  // the sum components are incomparable
  if (x.is_nat()) return x.nat_value() <= y.nat_value();
  return x.word_value().prefix_of(y.word_value());
}

bool LElem::operator<(const LElem& o) const {
  if (is_top() != o.is_top()) return is_top();
  if (is_top()) return false;
  if (!(at->slice == o.at->slice)) return at->slice < o.at->slice;
  return at->m < o.at->m;
}

bool l_leq(const LElem& x, const LElem& y) {
  if (y.is_top()) return true;
  if (x.is_top()) return false;
  return x.at->slice == y.at->slice && m_leq(x.at->m, y.at->m);
}

bool BElem::operator<(const BElem& o) const {
  if (m != o.m) return m < o.m;
  if (n != o.n) return n < o.n;
  return l < o.l;
}

BElem b_top(Nat m, Nat n) { return BElem{std::move(m), std::move(n), LElem::top()}; }

bool b_leq(const BElem& u, const BElem& v) {
  if (u == v) return true;
  // Same coordinates, strictly higher L-component.
  if (u.m == v.m && u.n == v.n && l_lt(u.l, v.l)) return true;
  // Every remaining relation targets a Top-typed element from a slice one.
  if (!v.l.is_top() || u.l.is_top()) return false;
  const SlicePair& s = u.l.at->slice;
  const MElem& x = u.l.at->m;
  if (x.is_nat()) {
    const Nat& xv = x.nat_value();
    if (u.m == s.b && v.n == u.n + 1) {
      auto d = f_decode(v.m);
      if (d && d->slice == s && d->word.length() == 1 && d->word.letters[0] >= xv) return true;
    }
    if (u.n == v.n) {
      auto du = f_decode(u.m);
      if (du && du->slice == s) {
        auto dv = f_decode(v.m);
        if (dv && dv->slice == s && dv->word.length() == du->word.length() + 1 &&
            du->word.prefix_of(dv->word) && dv->word.letters.back() >= xv)
          return true;
      }
    }
  } else {
    if (u.m == s.a && v.n == u.n + 1) {
      auto d = f_decode(v.m);
      if (d && d->slice == s && x.word_value().prefix_of(d->word)) return true;
    }
  }
  return false;
}

BWindow BWindow::standard() {
  BWindow w;
  w.slices = {SlicePair::make(0, 1), SlicePair::make(0, 2), SlicePair::make(1, 2)};
  return w;
}

void BWindow::validate() const {
  if (slices.empty()) throw BoundsError("window needs at least one slice");
  if (max_word_len == 0) throw BoundsError("window needs words of length >= 1");
}

namespace {

std::vector<SlicePair> sorted_slices(const BWindow& w) {
  std::vector<SlicePair> s = w.slices;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Word> words_in_window(const BWindow& w) {
  std::vector<Word> out;
  std::vector<Nat> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.push_back(Word{cur});
    if (cur.size() == w.max_word_len) return;
    for (std::uint32_t l = 0; l <= w.max_letter; ++l) {
      cur.emplace_back(l);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LElem> l_universe(const BWindow& w, const std::vector<SlicePair>& slices,
                              const std::vector<Word>& words) {
  std::vector<LElem> ls;
  ls.push_back(LElem::top());
  for (const SlicePair& s : slices) {
    for (std::uint32_t k = 0; k <= w.max_letter; ++k)
      ls.push_back(LElem::in_slice(s, MElem::nat(k)));
    for (const Word& word : words) ls.push_back(LElem::in_slice(s, MElem::word(word)));
  }
  return ls;
}

std::vector<Nat> m_universe(const BWindow& w, const std::vector<SlicePair>& slices,
                            const std::vector<Word>& words) {
  std::set<Nat> ms;
  for (std::uint32_t m = 0; m <= w.max_m; ++m) ms.emplace(m);
  if (w.include_codes)
    for (const SlicePair& s : slices)
      for (const Word& word : words) ms.insert(f_encode(s, word));
  return {ms.begin(), ms.end()};
}

}  // namespace

std::vector<BElem> b_enumerate(const BWindow& w) {
  w.validate();
  auto slices = sorted_slices(w);
  auto words = words_in_window(w);
  auto ms = m_universe(w, slices, words);
  auto ls = l_universe(w, slices, words);
  std::vector<BElem> out;
  out.reserve(ms.size() * (w.max_n + 1) * ls.size());
  for (const Nat& m : ms)
    for (std::uint32_t n = 0; n <= w.max_n; ++n)
      for (const LElem& l : ls) out.push_back(BElem{m, n, l});
  return out;
}

BTruncation::BTruncation(BWindow w) : window_(std::move(w)) {
  window_.validate();
  auto slices = sorted_slices(window_);
  auto words = words_in_window(window_);
  auto ms = m_universe(window_, slices, words);
  auto ls = l_universe(window_, slices, words);
  const std::size_t nl = ls.size();
  const std::size_t nn = window_.max_n + 1;

  elems_ = b_enumerate(window_);
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);

  std::map<Nat, std::size_t> m_index;
  for (std::size_t i = 0; i < ms.size(); ++i) m_index.emplace(ms[i], i);
  auto at = [&](std::size_t mi, std::size_t n, std::size_t li) {
    return (mi * nn + n) * nl + li;
  };

  // Strict successor lists inside L, shared by every (m, n) block.
  std::vector<std::vector<std::size_t>> l_succ(nl);
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t b = 0; b < nl; ++b)
      if (a != b && l_leq(ls[a], ls[b])) l_succ[a].push_back(b);

  const std::size_t n_elems = elems_.size();
  std::vector<std::vector<std::uint32_t>> succ(n_elems);
  for (std::size_t mi = 0; mi < ms.size(); ++mi) {
    for (std::size_t n = 0; n < nn; ++n) {
      for (std::size_t li = 0; li < nl; ++li) {
        std::size_t src = at(mi, n, li);
        for (std::size_t lj : l_succ[li]) succ[src].push_back(static_cast<std::uint32_t>(at(mi, n, lj)));
        if (li == 0) continue;
        const SlicePair& s = ls[li].at->slice;
        const MElem& x = ls[li].at->m;
        if (x.is_nat()) {
          if (ms[mi] == s.b && n + 1 < nn) {
            auto it = m_index.find(f_encode(s, Word::single(x.nat_value())));
            if (it != m_index.end())
              succ[src].push_back(static_cast<std::uint32_t>(at(it->second, n + 1, 0)));
          }
          auto d = f_decode(ms[mi]);
          if (d && d->slice == s && d->word.length() + 1 <= window_.max_word_len) {
            auto it = m_index.find(f_encode(s, d->word.extended(x.nat_value())));
            if (it != m_index.end())
              succ[src].push_back(static_cast<std::uint32_t>(at(it->second, n, 0)));
          }
        } else {
          if (ms[mi] == s.a && n + 1 < nn) {
            auto it = m_index.find(f_encode(s, x.word_value()));
            if (it != m_index.end())
              succ[src].push_back(static_cast<std::uint32_t>(at(it->second, n + 1, 0)));
          }
        }
      }
    }
  }

  // Every generator edge strictly increases (n, L-rank with top maximal), so
  // accumulating rows in decreasing rank closes the relation in one pass.
  stride_ = (n_elems + 63) / 64;
  reach_.assign(n_elems * stride_, 0);
  std::vector<std::size_t> order(n_elems);
  for (std::size_t i = 0; i < n_elems; ++i) order[i] = i;
  auto rank = [&](std::size_t i) {
    std::size_t li = i % nl;
    std::size_t n = (i / nl) % nn;
    return n * (nl + 1) + (li == 0 ? nl : li - 1);
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rank(a) > rank(b); });
  for (std::size_t i : order) {
    std::uint64_t* row = reach_.data() + i * stride_;
    row[i >> 6] |= std::uint64_t{1} << (i & 63);
    for (std::uint32_t j : succ[i]) {
      const std::uint64_t* rj = reach_.data() + j * stride_;
      for (std::size_t k = 0; k < stride_; ++k) row[k] |= rj[k];
    }
  }
}

std::optional<std::size_t> BTruncation::index_of(const BElem& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool BTruncation::leq(const BElem& u, const BElem& v) const {
  auto i = index_of(u), j = index_of(v);
  if (!i || !j)
    throw BoundTooSmallError("element outside the truncation window");
  return leq_idx(*i, *j);
}

bool b_leq_oracle(const BElem& u, const BElem& v, const BWindow& w) {
  return BTruncation(w).leq(u, v);
}

BElem family_member(const BFamily& d, std::uint64_t k) {
  if (std::holds_alternative<AllNatsTail>(d.tail))
    return BElem{d.m, d.n, LElem::in_slice(d.slice, MElem::nat(Nat(static_cast<unsigned long>(k))))};
  const auto& chain = std::get<WordChainTail>(d.tail);
  Word w = chain.seed;
  for (std::uint64_t i = 0; i < k; ++i)
    w.letters.push_back(i < chain.steps.size() ? chain.steps[i] : Nat(0));
  return BElem{d.m, d.n, LElem::in_slice(d.slice, MElem::word(std::move(w)))};
}

BElem family_sup(const BFamily& d) { return b_top(d.m, d.n); }

BFamily infer_family(std::span<const BElem> members) {
  std::vector<BElem> uniq(members.begin(), members.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.size() < 2)
    throw DegenerateFamilyError("families have no greatest element; need >= 2 sample points");
  const BElem& first = uniq.front();
  if (first.l.is_top()) throw DegenerateFamilyError("members must be slice elements");
  const SlicePair slice = first.l.at->slice;
  bool nats = first.l.at->m.is_nat();
  for (const BElem& e : uniq) {
    if (e.l.is_top() || !(e.m == first.m) || !(e.n == first.n) || !(e.l.at->slice == slice) ||
        e.l.at->m.is_nat() != nats)
      throw DegenerateFamilyError("members must share (m, n, slice) and M-side");
  }
  if (nats) return BFamily{first.m, first.n, slice, AllNatsTail{}};
  std::vector<Word> ws;
  for (const BElem& e : uniq) ws.push_back(e.l.at->m.word_value());
  std::sort(ws.begin(), ws.end(), [](const Word& a, const Word& b) { return a.length() < b.length(); });
  for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
    if (ws[i].length() == ws[i + 1].length() || !ws[i].prefix_of(ws[i + 1]))
      throw DegenerateFamilyError("word members must form a strictly growing chain");
  }
  std::vector<Nat> steps(ws.back().letters.begin() + static_cast<std::ptrdiff_t>(ws.front().length()),
                         ws.back().letters.end());
  return BFamily{first.m, first.n, slice, WordChainTail{ws.front(), std::move(steps)}};
}

bool family_contains(const UpperBoundFamily& f, const BElem& t) {
  if (!t.l.is_top()) return false;
  return std::visit(
      [&](const auto& fam) -> bool {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UbSing>) {
          return t == fam.elem;
        } else if constexpr (std::is_same_v<T, UbWordExt>) {
          if (t.n != fam.level) return false;
          auto d = f_decode(t.m);
          return d && d->slice == fam.slice && fam.base.prefix_of(d->word);
        } else if constexpr (std::is_same_v<T, UbNumExt>) {
          if (t.n != fam.level) return false;
          auto d = f_decode(t.m);
          return d && d->slice == fam.slice && d->word.length() == 1 &&
                 d->word.letters[0] >= fam.base;
        } else if constexpr (std::is_same_v<T, UbAppendExt>) {
          if (t.n != fam.level) return false;
          auto d = f_decode(t.m);
          return d && d->slice == fam.slice && d->word.length() == fam.prefix.length() + 1 &&
                 fam.prefix.prefix_of(d->word) && d->word.letters.back() >= fam.base;
        } else if constexpr (std::is_same_v<T, UbFnDiag>) {
          return t.n >= fam.min_level && fam.fn(t.n) == t.m;
        } else {
          static_assert(std::is_same_v<T, UbXDiag>);
          if (t.n != fam.level) return false;
          auto idx = e_index(t.m);
          return idx && *idx >= fam.min_index && fam.fn(*idx) == t.m;
        }
      },
      f);
}

std::vector<UpperBoundFamily> b_upper_max_families(const BElem& e) {
  if (e.l.is_top()) return {UbSing{e}};
  std::vector<UpperBoundFamily> fams;
  fams.push_back(UbSing{b_top(e.m, e.n)});
  const SlicePair& s = e.l.at->slice;
  const MElem& x = e.l.at->m;
  if (x.is_nat()) {
    if (e.m == s.b) fams.push_back(UbNumExt{s, x.nat_value(), e.n + 1});
    auto d = f_decode(e.m);
    if (d && d->slice == s) fams.push_back(UbAppendExt{s, d->word, x.nat_value(), e.n});
  } else {
    if (e.m == s.a) fams.push_back(UbWordExt{s, x.word_value(), e.n + 1});
  }
  return fams;
}

std::vector<BElem> family_sample(const UpperBoundFamily& f, const FamilySampleBounds& b) {
  std::vector<BElem> out;
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UbSing>) {
          out.push_back(fam.elem);
        } else if constexpr (std::is_same_v<T, UbWordExt>) {
          std::vector<Nat> ext;
          auto rec = [&](auto&& self) -> void {
            Word w = fam.base;
            w.letters.insert(w.letters.end(), ext.begin(), ext.end());
            out.push_back(b_top(f_encode(fam.slice, w), fam.level));
            if (ext.size() == b.max_ext_len) return;
            for (std::uint32_t l = 0; l <= b.max_letter; ++l) {
              ext.emplace_back(l);
              self(self);
              ext.pop_back();
            }
          };
          rec(rec);
        } else if constexpr (std::is_same_v<T, UbNumExt>) {
          for (std::uint32_t k = 0; k <= b.count; ++k)
            out.push_back(b_top(f_encode(fam.slice, Word::single(fam.base + k)), fam.level));
        } else if constexpr (std::is_same_v<T, UbAppendExt>) {
          for (std::uint32_t k = 0; k <= b.count; ++k)
            out.push_back(
                b_top(f_encode(fam.slice, fam.prefix.extended(fam.base + k)), fam.level));
        } else if constexpr (std::is_same_v<T, UbFnDiag>) {
          std::set<Nat> ks;
          for (std::uint32_t k = 0; k <= b.count; ++k) ks.insert(fam.min_level + k);
          for (const auto& [k, v] : fam.fn.overrides)
            if (k >= fam.min_level) ks.insert(k);
          for (const Nat& k : ks) out.push_back(b_top(fam.fn(k), k));
        } else {
          static_assert(std::is_same_v<T, UbXDiag>);
          std::set<Nat> msd;
          for (std::uint32_t k = 0; k <= b.count; ++k) msd.insert(fam.min_index + k);
          for (const auto& [k, v] : fam.fn.overrides)
            if (k >= fam.min_index) msd.insert(k);
          for (const Nat& m : msd) out.push_back(b_top(fam.fn(m), fam.level));
        }
      },
      f);
  return out;
}

}  // namespace ordertop
