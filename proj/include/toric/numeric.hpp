#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

/// Arbitrary-precision integer. Small values live inline, so the common case
/// of single-digit intersection numbers never touches the heap.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Element of the lattice N = Z^d.
using IntegerVector = std::vector<Integer>;

/// Row-major integer matrix.
using IntegerMatrix = std::vector<IntegerVector>;

/// Element of the dual lattice M = Hom(N, Z).
struct Covector {
  std::vector<Integer> entries;

  std::size_t size() const { return entries.size(); }
  /// Integer pairing <m, v>. Throws DimensionError on length mismatch.
  Integer pair(const IntegerVector& v) const;

  friend bool operator==(const Covector&, const Covector&) = default;
};

/// Canonical text form: "p" for integers, "p/q" with q > 0 otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses the canonical text form back (accepts "p" and "p/q").
Rational parse_rational(const std::string& text);

inline Integer factorial(unsigned k) {
  Integer r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

inline Integer ipow(const Integer& base, unsigned exp) {
  Integer r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace toric
