#include "hamfix/rational.hpp"

#include <cctype>

namespace hamfix {

std::string to_string(const Rat& r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int reads a leading 0 as an octal prefix.
std::string strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

std::optional<Rat> parse_rat(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Int p(strip_zeros(num));
  Int q(strip_zeros(den));
  if (q == 0) return std::nullopt;
  if (negative) p = -p;
  return Rat(p, q);
}

Rat ipow(const Rat& base, unsigned exponent) {
  Rat result = 1;
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace hamfix
