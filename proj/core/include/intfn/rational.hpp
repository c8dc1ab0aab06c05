#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace intfn {

// Compare against other Rationals only: boost::rational's mixed operator==
// recurses under C++20 rewritten comparisons.
using Rational = boost::rational<std::int64_t>;

// "P/Q", "P", or a finite decimal such as "-0.125".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

// Exact floor(a / b) for b > 0.
std::int64_t floor_quotient(const Rational& a, const Rational& b);

// Exact comparison with a decimal literal given as digits / 10^scale.
int compare(const Rational& a, __int128 digits, int scale);

enum class Rounding : std::uint8_t { Down, Up };

// Positive value rounded outward (Down floors, Up ceils) to `significant`
// digits, trailing zeros dropped: 156/100 -> "1.56".
std::string format_significant(const Rational& value, int significant, Rounding rounding);

}  // namespace intfn
