#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "ordertop/sober_pair.hpp"

namespace ordertop {

// Element grammar shared by the CLI and the file-based inputs:
//   B(m,n,T) | B(m,n,N k@(a,b)) | B(m,n,W [l1 l2 ...]@(a,b))
//   TOP1 | P1.B(...) | P1.FN{k:v,...,*:t}@n
//   TOP2 | P2.B(...) | P2.X{k:v,...}@n,k
//   (<p1>|<p2>)
// Parsers reject trailing input; printers emit the canonical spelling.

BElem parse_b_elem(std::string_view s);
P1Point parse_p1_point(std::string_view s);
P2Point parse_p2_point(std::string_view s);
ProductPoint parse_product_point(std::string_view s);

using AnyElement = std::variant<BElem, P1Point, P2Point, ProductPoint>;
AnyElement parse_element(std::string_view s);

std::string to_string(const BElem& e);
std::string to_string(const P1Point& p);
std::string to_string(const P2Point& p);
std::string to_string(const ProductPoint& p);

}  // namespace ordertop
