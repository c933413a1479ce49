#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hamfix {

// Arbitrary precision integers and rationals. cpp_rational keeps values in
// lowest terms with a positive denominator after every operation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// den may be negative; den == 0 throws std::overflow_error.
inline Rat make_rat(std::int64_t num, std::int64_t den = 1) { return Rat(Int(num)) / Rat(Int(den)); }

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

// Accepts "[+-]digits" or "[+-]digits/digits" with a nonzero denominator.
std::optional<Rat> parse_rat(std::string_view text);

// Exact integer power; exponent must be nonnegative.
Rat ipow(const Rat& base, unsigned exponent);

}  // namespace hamfix
