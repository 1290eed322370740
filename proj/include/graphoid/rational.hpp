#ifndef GRAPHOID_RATIONAL_HPP
#define GRAPHOID_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace graphoid {

// Exact arbitrary-precision rational; every discrete-probability computation
// in the library uses this type so that independence is decision-exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "num/den" (den > 0 after reduction) or a bare integer "num".
// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "num/den" form (reduced, positive denominator), e.g. "1/8",
// "0/1", "3/1".
std::string format_rational(const Rational& r);

}  // namespace graphoid

#endif  // GRAPHOID_RATIONAL_HPP
