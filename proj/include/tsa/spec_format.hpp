#pragma once

#include <string>
#include <string_view>

#include "tsa/sarima.hpp"

namespace tsa {

/// Parses "(p,d,q)x(P,D,Q)s" with an optional zero-pin list such as
/// "(0,1,1)x(4,1,0)12[sar3=0,ma2=0]". Throws ParseError (with position) for
/// malformed text and RangeError when a pin names a slot outside the orders.
SarimaSpec parse_spec(std::string_view text);

/// Inverse of parse_spec; parse_spec(render_spec(s)) == s.
std::string render_spec(const SarimaSpec& spec);

}  // namespace tsa
