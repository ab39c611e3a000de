#ifndef NICHEGRAPH_RATIONAL_HPP
#define NICHEGRAPH_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nichegraph {

/// Exact arbitrary-precision rational. All order-model comparisons go through
/// this type; there is no floating-point path.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (optional leading '-', decimal digits only, q != 0).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Lowest-terms text form: "3/2", "-1/4", "5".
std::string to_string(const Rational& value);

}  // namespace nichegraph

#endif  // NICHEGRAPH_RATIONAL_HPP
