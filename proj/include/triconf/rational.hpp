#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Under C++20 rewritten comparisons, boost's mixed rational/integer equality
// recurses forever. Exact non-template overloads win overload resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace triconf {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", "p", with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

// "1/5", "-3/5", "0", "1". No leading plus.
std::string to_string(const Rational& r);

}  // namespace triconf
