#include "ordertop/grammar.hpp"

#include <cctype>
#include <sstream>

namespace ordertop {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  Nat nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a natural number");
    return Nat(std::string(s_.substr(start, pos_ - start)), 10);
  }
  void finish() {
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) +
                     "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

SlicePair parse_slice(Cursor& c) {
  c.expect('(');
  Nat a = c.nat();
  c.expect(',');
  Nat b = c.nat();
  c.expect(')');
  if (!(a < b)) c.fail("slice needs a < b");
  return SlicePair::make(std::move(a), std::move(b));
}

BElem parse_b_body(Cursor& c) {
  c.expect('(');
  Nat m = c.nat();
  c.expect(',');
  Nat n = c.nat();
  c.expect(',');
  LElem l = LElem::top();
  if (c.eat_word("T")) {
    // top
  } else if (c.eat_word("N")) {
    Nat k = c.nat();
    c.expect('@');
    SlicePair s = parse_slice(c);
    l = LElem::in_slice(std::move(s), MElem::nat(std::move(k)));
  } else if (c.eat_word("W")) {
    c.expect('[');
    std::vector<Nat> letters;
    while (!c.peek_is(']')) letters.push_back(c.nat());
    c.expect(']');
    c.expect('@');
    SlicePair s = parse_slice(c);
    l = LElem::in_slice(std::move(s), MElem::word(Word::of(std::move(letters))));
  } else {
    c.fail("expected T, N or W");
  }
  c.expect(')');
  return BElem{std::move(m), std::move(n), std::move(l)};
}

BElem parse_b(Cursor& c) {
  if (!c.eat_word("B")) c.fail("expected B(...)");
  return parse_b_body(c);
}

P1Point parse_p1(Cursor& c) {
  if (c.eat_word("TOP1")) return P1Point::top();
  if (!c.eat_word("P1.")) c.fail("expected TOP1 or P1.");
  if (c.eat_word("B")) return P1Point::in_b(parse_b_body(c));
  if (!c.eat_word("FN")) c.fail("expected P1.B or P1.FN");
  c.expect('{');
  std::map<Nat, Nat> overrides;
  std::optional<Nat> tail;
  for (;;) {
    if (c.eat('*')) {
      c.expect(':');
      tail = c.nat();
    } else {
      Nat k = c.nat();
      c.expect(':');
      overrides[std::move(k)] = c.nat();
    }
    if (!c.eat(',')) break;
  }
  c.expect('}');
  if (!tail) c.fail("FN needs a tail entry *:t");
  c.expect('@');
  Nat n = c.nat();
  return P1Point::fn(FnRep::make(std::move(overrides), std::move(*tail)), std::move(n));
}

P2Point parse_p2(Cursor& c) {
  if (c.eat_word("TOP2")) return P2Point::top();
  if (!c.eat_word("P2.")) c.fail("expected TOP2 or P2.");
  if (c.eat_word("B")) return P2Point::in_b(parse_b_body(c));
  if (!c.eat_word("X")) c.fail("expected P2.B or P2.X");
  c.expect('{');
  std::map<Nat, Nat> overrides;
  if (!c.peek_is('}')) {
    for (;;) {
      Nat k = c.nat();
      c.expect(':');
      overrides[std::move(k)] = c.nat();
      if (!c.eat(',')) break;
    }
  }
  c.expect('}');
  c.expect('@');
  Nat n = c.nat();
  c.expect(',');
  Nat k = c.nat();
  return P2Point::xf(XRep::make(std::move(overrides)), std::move(n), std::move(k));
}

ProductPoint parse_product(Cursor& c) {
  c.expect('(');
  P1Point x = parse_p1(c);
  c.expect('|');
  P2Point y = parse_p2(c);
  c.expect(')');
  return ProductPoint{std::move(x), std::move(y)};
}

}  // namespace

BElem parse_b_elem(std::string_view s) {
  Cursor c(s);
  BElem e = parse_b(c);
  c.finish();
  return e;
}

P1Point parse_p1_point(std::string_view s) {
  Cursor c(s);
  P1Point p = parse_p1(c);
  c.finish();
  return p;
}

P2Point parse_p2_point(std::string_view s) {
  Cursor c(s);
  P2Point p = parse_p2(c);
  c.finish();
  return p;
}

ProductPoint parse_product_point(std::string_view s) {
  Cursor c(s);
  ProductPoint p = parse_product(c);
  c.finish();
  return p;
}

AnyElement parse_element(std::string_view s) {
  Cursor probe(s);
  probe.skip_ws();
  if (probe.eat_word("B")) return parse_b_elem(s);
  if (probe.eat_word("P1") || probe.eat_word("TOP1")) return parse_p1_point(s);
  if (probe.eat_word("P2") || probe.eat_word("TOP2")) return parse_p2_point(s);
  if (probe.eat_word("(")) return parse_product_point(s);
  throw ParseError("unrecognized element: \"" + std::string(s) + "\"");
}

std::string to_string(const BElem& e) {
  std::ostringstream out;
  out << "B(" << e.m.get_str() << "," << e.n.get_str() << ",";
  if (e.l.is_top()) {
    out << "T";
  } else if (e.l.at->m.is_nat()) {
    out << "N " << e.l.at->m.nat_value().get_str() << "@" << e.l.at->slice.str();
  } else {
    out << "W [";
    const auto& ls = e.l.at->m.word_value().letters;
    for (std::size_t i = 0; i < ls.size(); ++i) out << (i ? " " : "") << ls[i].get_str();
    out << "]@" << e.l.at->slice.str();
  }
  out << ")";
  return out.str();
}

std::string to_string(const P1Point& p) {
  if (p.is_top()) return "TOP1";
  if (p.is_b()) return "P1." + to_string(p.b());
  const auto& a = std::get<P1Point::FnLevel>(p.v);
  std::ostringstream out;
  out << "P1.FN{";
  for (const auto& [k, v] : a.f.overrides) out << k.get_str() << ":" << v.get_str() << ",";
  out << "*:" << a.f.tail.get_str() << "}@" << a.n.get_str();
  return out.str();
}

std::string to_string(const P2Point& p) {
  if (p.is_top()) return "TOP2";
  if (p.is_b()) return "P2." + to_string(p.b());
  const auto& a = std::get<P2Point::XfLevel>(p.v);
  std::ostringstream out;
  out << "P2.X{";
  bool first = true;
  for (const auto& [k, v] : a.f.overrides) {
    if (!first) out << ",";
    out << k.get_str() << ":" << v.get_str();
    first = false;
  }
  out << "}@" << a.n.get_str() << "," << a.k.get_str();
  return out.str();
}

std::string to_string(const ProductPoint& p) {
  return "(" + to_string(p.x) + "|" + to_string(p.y) + ")";
}

}  // namespace ordertop
