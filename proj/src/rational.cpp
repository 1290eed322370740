#include "graphoid/rational.hpp"

#include <stdexcept>

#include "graphoid/errors.hpp"

namespace graphoid {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = BigInt(text);
    } else {
      num = BigInt(text.substr(0, slash));
      den = BigInt(text.substr(slash + 1));
    }
  } catch (const std::runtime_error& e) {
    throw InputError("malformed rational \"" + text + "\": " + e.what());
  }
  if (den == 0) throw InputError("rational with zero denominator: " + text);
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace graphoid
