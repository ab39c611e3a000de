#include "nichegraph/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nichegraph {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
  }
  using boost::multiprecision::cpp_int;
  const cpp_int d(std::string{den});
  if (d == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  }
  cpp_int p(std::string{num});
  if (negative) p = -p;
  return Rational(p, d);
}

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace nichegraph
