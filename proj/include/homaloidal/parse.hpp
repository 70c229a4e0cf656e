#ifndef HOMALOIDAL_PARSE_HPP
#define HOMALOIDAL_PARSE_HPP

#include <string_view>

#include "homaloidal/poly.hpp"

namespace homaloidal {

// Parses "x0^2*x1 - 2*x2^3 + 1". Accepted atoms: the ring's variables,
// nonnegative integers (optionally num/den rational literals), extension
// generators (t, u, v, w) when the coefficient field has them, and
// parenthesized subexpressions. Operators: + - * ^ and unary minus. Any
// other use of '/' is rejected.
Poly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace homaloidal

#endif
