#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace simwords {

// Exact rational value. Every accept/reject comparison against a similarity
// threshold goes through this type; no floating point is involved.
using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", a bare integer "p", or a decimal such as "0.888" (converted
// exactly: 888/1000, then reduced). Negative values are rejected.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace simwords
