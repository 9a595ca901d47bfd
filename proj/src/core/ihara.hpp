#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace curveclass::zeta {

using Rational = boost::multiprecision::cpp_rational;

/// a + b sqrt(q), exact. For square q, b is 0 and sqrt(q) is folded into a.
struct QuadraticValue {
  Rational a = 0;
  Rational b = 0;
  std::uint64_t q = 0;

  /// -1, 0 or 1, decided exactly.
  int sign() const;
  /// Decimal value with the given number of fractional digits.
  std::string approx(unsigned digits = 20) const;
};

struct DegreeCount {
  unsigned degree = 0;
  std::uint64_t multiplicity = 0;
};

struct IharaReport {
  QuadraticValue value;   // sum_{x in T} deg(x) / (q^{deg(x)/2} - 1)
  std::int64_t threshold = 0;  // max(g - 1, 0)
  std::int64_t g_minus_1 = 0;
  bool exceeds = false;   // value > threshold
};

/// Compares the sum over the degrees of the points of T with g - 1.
IharaReport ihara_sum_exceeds(std::span<const unsigned> degrees, std::uint64_t q, unsigned genus);
IharaReport ihara_sum_exceeds(std::span<const DegreeCount> degrees, std::uint64_t q, unsigned genus);

}  // namespace curveclass::zeta
