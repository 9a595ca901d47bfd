#include "ihara.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace curveclass::zeta {

using boost::multiprecision::cpp_int;

namespace {

int rsign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

cpp_int ipow(std::uint64_t base, unsigned e) {
  cpp_int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

int QuadraticValue::sign() const {
  const int sa = rsign(a), sb = rsign(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // opposite signs: compare a^2 with b^2 q
  const Rational a2 = a * a, b2q = b * b * Rational(q);
  if (a2 == b2q) return 0;
  return a2 > b2q ? sa : sb;
}

std::string QuadraticValue::approx(unsigned digits) const {
  using boost::multiprecision::cpp_dec_float_50;
  const cpp_dec_float_50 av = cpp_dec_float_50(numerator(a)) / cpp_dec_float_50(denominator(a));
  const cpp_dec_float_50 bv = cpp_dec_float_50(numerator(b)) / cpp_dec_float_50(denominator(b));
  const cpp_dec_float_50 v = av + bv * sqrt(cpp_dec_float_50(q));
  return v.str(digits, std::ios_base::fixed);
}

IharaReport ihara_sum_exceeds(std::span<const DegreeCount> degrees, std::uint64_t q, unsigned genus) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be at least 2");
  if (degrees.empty()) throw Error(ErrorCode::InvalidArgument, "degrees must be nonempty");
  const std::uint64_t s = isqrt(q);
  const bool square = s * s == q;
  IharaReport report;
  report.value.q = q;
  for (const auto& [d, mult] : degrees) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "point degree must be positive");
    if (mult == 0) continue;
    const Rational m(mult);
    if (d % 2 == 0) {
      report.value.a += m * Rational(cpp_int(d), ipow(q, d / 2) - 1);
    } else if (square) {
      report.value.a += m * Rational(cpp_int(d), ipow(s, d) - 1);
    } else {
      // d / (c sqrt q - 1) = d (c sqrt q + 1) / (c^2 q - 1), c = q^{(d-1)/2}
      const cpp_int c = ipow(q, (d - 1) / 2);
      const cpp_int den = c * c * q - 1;
      report.value.a += m * Rational(cpp_int(d), den);
      report.value.b += m * Rational(cpp_int(d) * c, den);
    }
  }
  report.g_minus_1 = static_cast<std::int64_t>(genus) - 1;
  report.threshold = report.g_minus_1 > 0 ? report.g_minus_1 : 0;
  QuadraticValue diff = report.value;
  diff.a -= report.threshold;
  report.exceeds = diff.sign() > 0;
  return report;
}

IharaReport ihara_sum_exceeds(std::span<const unsigned> degrees, std::uint64_t q, unsigned genus) {
  std::vector<DegreeCount> counts;
  for (unsigned d : degrees) counts.push_back({d, 1});
  return ihara_sum_exceeds(std::span<const DegreeCount>(counts), q, genus);
}

}  // namespace curveclass::zeta
