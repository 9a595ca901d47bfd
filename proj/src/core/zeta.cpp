#include "zeta.hpp"

#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace curveclass::zeta {

using boost::multiprecision::cpp_int;

namespace {

std::atomic<std::uint64_t> g_invocations{0};

cpp_int ipow(std::uint64_t base, unsigned e) {
  cpp_int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

cpp_int binomial(unsigned n, unsigned k) {
  cpp_int r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Power sums S_1..S_n of the inverse roots from the coefficients.
std::vector<cpp_int> power_sums(const std::vector<std::int64_t>& a, unsigned n) {
  auto coeff = [&](unsigned k) -> cpp_int { return k < a.size() ? cpp_int(a[k]) : cpp_int(0); };
  std::vector<cpp_int> s(n + 1, 0);
  for (unsigned k = 1; k <= n; ++k) {
    cpp_int acc = -cpp_int(k) * coeff(k);
    for (unsigned i = 1; i < k; ++i) acc -= s[i] * coeff(k - i);
    s[k] = acc;
  }
  return s;
}

}  // namespace

bool LPolynomial::satisfies_functional_equation() const {
  const unsigned g = genus;
  if (coefficients.size() != 2 * g + 1 || coefficients[0] != 1) return false;
  for (unsigned i = 0; i <= g; ++i)
    if (cpp_int(coefficients[2 * g - i]) != ipow(q, g - i) * coefficients[i]) return false;
  return true;
}

bool LPolynomial::satisfies_weil_bounds() const {
  const unsigned n = 2 * genus;
  for (unsigned i = 0; i < coefficients.size(); ++i) {
    const cpp_int a = coefficients[i];
    const cpp_int c = binomial(n, i);
    if (a * a > c * c * ipow(q, i)) return false;
  }
  return true;
}

std::int64_t LPolynomial::predicted_count(unsigned n) const {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const auto s = power_sums(coefficients, n);
  const cpp_int count = ipow(q, n) + 1 - s[n];
  return count.convert_to<std::int64_t>();
}

LPolynomial l_polynomial_from_counts(std::uint64_t q, unsigned genus, std::span<const std::uint64_t> counts) {
  if (counts.size() < genus) throw Error(ErrorCode::InvalidArgument, "need N_1..N_g");
  LPolynomial L;
  L.genus = genus;
  L.q = q;
  L.coefficients.assign(2 * genus + 1, 0);
  L.coefficients[0] = 1;
  std::vector<cpp_int> s(genus + 1, 0);
  for (unsigned i = 1; i <= genus; ++i) s[i] = ipow(q, i) + 1 - counts[i - 1];
  // k a_k = -sum_{i=1}^k S_i a_{k-i}
  std::vector<cpp_int> a(genus + 1, 0);
  a[0] = 1;
  for (unsigned k = 1; k <= genus; ++k) {
    cpp_int acc = 0;
    for (unsigned i = 1; i <= k; ++i) acc -= s[i] * a[k - i];
    if (acc % k != 0) throw Error(ErrorCode::Internal, "point counts are inconsistent with an integral L-polynomial");
    a[k] = acc / k;
  }
  for (unsigned k = 0; k <= genus; ++k) {
    L.coefficients[k] = a[k].convert_to<std::int64_t>();
    L.coefficients[2 * genus - k] = (ipow(q, genus - k) * a[k]).convert_to<std::int64_t>();
  }
  return L;
}

LPolynomial l_polynomial(const curve::Curve& curve, const Budget& budget) {
  g_invocations.fetch_add(1, std::memory_order_relaxed);
  const unsigned g = curve.genus();
  std::vector<std::uint64_t> counts;
  for (unsigned n = 1; n <= g; ++n) counts.push_back(curve::count_points(curve, n, budget));
  LPolynomial L = l_polynomial_from_counts(curve.q(), g, counts);
  if (!L.satisfies_weil_bounds())
    throw Error(ErrorCode::Internal, "L-polynomial violates the Weil bounds");
  // Cross-check one count beyond what determined L, when affordable.
  const cpp_int next = ipow(curve.q(), g + 1);
  if (g > 0 && next <= budget.enumeration_cap) {
    const std::uint64_t direct = curve::count_points(curve, g + 1, budget);
    if (static_cast<std::int64_t>(direct) != L.predicted_count(g + 1))
      throw Error(ErrorCode::Internal, "N_{g+1} disagrees with the L-polynomial prediction");
  }
  return L;
}

std::uint64_t class_number(const LPolynomial& L) {
  std::int64_t h = 0;
  for (auto a : L.coefficients) h += a;
  if (h < 1) throw Error(ErrorCode::Internal, "class number must be positive");
  return static_cast<std::uint64_t>(h);
}

bool pic_p_nontrivial(const curve::Curve& curve, std::uint32_t p, const Budget& budget) {
  return class_number(l_polynomial(curve, budget)) % p == 0;
}

std::uint64_t l_polynomial_invocations() noexcept { return g_invocations.load(std::memory_order_relaxed); }

}  // namespace curveclass::zeta
