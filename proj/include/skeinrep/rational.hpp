#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skeinrep {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact arithmetic failed a structural precondition (e.g. inverting zero).
struct DivisionByZeroError : std::domain_error {
  DivisionByZeroError() : std::domain_error("division by zero") {}
};

/// An internal consistency check failed; indicates a bug, not bad input.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal error: ") + what);
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rational_to_string(const BigRational& q) {
  if (boost::multiprecision::denominator(q) == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline BigRational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return BigRational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

}  // namespace skeinrep
