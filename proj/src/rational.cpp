#include "difflab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace difflab {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Signed integer or decimal literal, e.g. "-12" or "3.75".
Rational parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && !all_digits(frac)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (!all_digits(whole) && !(whole.empty() && !frac.empty())) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  cpp_int num = whole.empty() ? cpp_int(0) : cpp_int(std::string(whole));
  cpp_int den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational out(num, den);
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("malformed rational: empty string");

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("malformed rational: zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::string to_string(const Rational& value) {
  return value.str();
}

}  // namespace difflab
