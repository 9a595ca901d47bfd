#include <doctest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>

#include "core/errors.hpp"
#include "core/ihara.hpp"
#include "core/zeta.hpp"
#include "test_support.hpp"

using namespace curveclass;
using curveclass::testing::cover;
using curveclass::testing::line;
using Coeffs = std::vector<std::int64_t>;

namespace {

struct Pinned {
  std::uint32_t p;
  std::vector<std::int64_t> f;
  Coeffs L;
  std::uint64_t h;
};

// Values found by tools/search_curves.py (pure enumeration).
const std::vector<Pinned> kPinned = {
    {3, {2, 0, 1, 1}, {1, -1, 3}, 3},
    {3, {1, 0, 1, 1}, {1, 2, 3}, 6},
    {5, {0, 3, 0, 1}, {1, 4, 5}, 10},
    {5, {1, 0, 0, 1}, {1, 0, 5}, 6},
    {7, {2, 0, 0, 1}, {1, 1, 7}, 9},
    {7, {5, 0, 0, 1}, {1, -1, 7}, 7},
    {3, {0, 1, 0, 1}, {1, 0, 3}, 4},
    {3, {0, 1, 0, 0, 0, 1}, {1, 0, 2, 0, 9}, 12},
    {3, {1, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 9}, 10},
    {5, {1, 0, 1, 0, 0, 1}, {1, -1, 0, -5, 25}, 20},
    {7, {3, 1, 0, 0, 0, 1}, {1, 3, 7, 21, 49}, 81},
};

}  // namespace

TEST_CASE("l_polynomial of P^1 is 1") {
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    auto L = zeta::l_polynomial(line(p, m));
    CHECK(L.coefficients == Coeffs{1});
    CHECK(L.genus == 0);
    CHECK(zeta::class_number(L) == 1);
  }
}

TEST_CASE("l_polynomial examples") {
  auto L = zeta::l_polynomial(cover(3, {0, 1, 0, 1}));
  CHECK(L.coefficients == Coeffs{1, 0, 3});
  CHECK(zeta::class_number(L) == 4);

  auto L2 = zeta::l_polynomial(cover(7, {3, 1, 0, 0, 0, 1}));
  REQUIRE(L2.coefficients.size() == 5);
  CHECK(L2.coefficients[3] == 7 * L2.coefficients[1]);
  CHECK(L2.coefficients[4] == 49);
  CHECK(L2.predicted_count(3) == static_cast<std::int64_t>(curve::count_points(cover(7, {3, 1, 0, 0, 0, 1}), 3)));
}

TEST_CASE("l_polynomial matches pinned search results") {
  for (const auto& c : kPinned) {
    CAPTURE(c.p);
    auto L = zeta::l_polynomial(cover(c.p, c.f));
    CHECK(L.coefficients == c.L);
    CHECK(zeta::class_number(L) == c.h);
    CHECK(L.satisfies_functional_equation());
    CHECK(L.satisfies_weil_bounds());
  }
}

TEST_CASE("predicted counts match enumeration up to n = 4") {
  for (const auto& c : kPinned) {
    auto C = cover(c.p, c.f);
    auto L = zeta::l_polynomial(C);
    for (unsigned n = 1; n <= 4; ++n) {
      CAPTURE(c.p);
      CAPTURE(n);
      CHECK(L.predicted_count(n) == static_cast<std::int64_t>(curve::count_points(C, n)));
    }
  }
}

TEST_CASE("l_polynomial over non-prime fields and characteristic 2") {
  auto F4 = gf::Field::create(2, 2);
  auto C = curve::validate(curve::CurveModel::double_cover(gf::Poly::from_ints(F4, Coeffs{1, 1, 0, 1}),
                                                          gf::Poly::from_ints(F4, Coeffs{1})));
  auto L = zeta::l_polynomial(C);
  CHECK(L.satisfies_functional_equation());
  CHECK(L.satisfies_weil_bounds());
  for (unsigned n = 1; n <= 3; ++n) CHECK(L.predicted_count(n) == static_cast<std::int64_t>(curve::count_points(C, n)));

  auto D = cover(2, {1, 0, 0, 0, 0, 1}, {1, 1});
  auto LD = zeta::l_polynomial(D);
  CHECK(LD.genus == 2);
  CHECK(LD.satisfies_functional_equation());
  for (unsigned n = 1; n <= 5; ++n) CHECK(LD.predicted_count(n) == static_cast<std::int64_t>(curve::count_points(D, n)));
}

TEST_CASE("weil and symmetry checks reject bad polynomials") {
  zeta::LPolynomial bad{{1, 5, 3}, 1, 3};
  CHECK(bad.satisfies_functional_equation());
  CHECK_FALSE(bad.satisfies_weil_bounds());
  zeta::LPolynomial asym{{1, 1, 4}, 1, 3};
  CHECK_FALSE(asym.satisfies_functional_equation());
}

TEST_CASE("pic_p_nontrivial") {
  CHECK_FALSE(zeta::pic_p_nontrivial(line(3), 3));
  CHECK_FALSE(zeta::pic_p_nontrivial(line(2), 2));
  CHECK_FALSE(zeta::pic_p_nontrivial(cover(3, {0, 1, 0, 1}), 3));
  CHECK(zeta::pic_p_nontrivial(cover(3, {0, 1, 0, 1}), 2));
  CHECK(zeta::pic_p_nontrivial(cover(5, {0, 3, 0, 1}), 5));
  CHECK(zeta::pic_p_nontrivial(cover(3, {1, 0, 1, 1}), 3));
  CHECK_FALSE(zeta::pic_p_nontrivial(cover(3, {2, 0, 1, 1}), 2));
}

TEST_CASE("l_polynomial budget") {
  Budget tight;
  tight.enumeration_cap = 10;
  CHECK_THROWS_AS(zeta::l_polynomial(cover(7, {3, 1, 0, 0, 0, 1}), tight), Error);
  try {
    zeta::l_polynomial(cover(7, {3, 1, 0, 0, 0, 1}), tight);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("invocation counter") {
  const auto before = zeta::l_polynomial_invocations();
  zeta::l_polynomial(line(2));
  CHECK(zeta::l_polynomial_invocations() == before + 1);
}

// ---------------------------------------------------------------- Ihara

namespace {

using Dec = boost::multiprecision::cpp_dec_float_50;

Dec decimal_sum(const std::vector<unsigned>& degrees, std::uint64_t q) {
  Dec total = 0;
  const Dec root = sqrt(Dec(q));
  for (unsigned d : degrees) total += Dec(d) / (pow(root, d) - 1);
  return total;
}

std::string rat(const zeta::Rational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

}  // namespace

TEST_CASE("ihara examples") {
  std::vector<unsigned> d2{2};
  auto r = zeta::ihara_sum_exceeds(d2, 4, 2);
  CHECK(rat(r.value.a) == "2/3");
  CHECK(r.value.b == 0);
  CHECK(r.threshold == 1);
  CHECK_FALSE(r.exceeds);

  std::vector<unsigned> d1{1};
  r = zeta::ihara_sum_exceeds(d1, 3, 1);
  CHECK(rat(r.value.a) == "1/2");
  CHECK(rat(r.value.b) == "1/2");
  CHECK(r.exceeds);
  CHECK(r.value.approx(5) == "1.36603");

  r = zeta::ihara_sum_exceeds(d1, 2, 0);
  CHECK(rat(r.value.a) == "1/1");
  CHECK(rat(r.value.b) == "1/1");
  CHECK(r.threshold == 0);
  CHECK(r.g_minus_1 == -1);
  CHECK(r.exceeds);

  // exactly at the threshold is not "exceeds": 2/(3-1) = 1 = g-1
  r = zeta::ihara_sum_exceeds(d2, 3, 2);
  CHECK(rat(r.value.a) == "1/1");
  CHECK_FALSE(r.exceeds);

  std::vector<unsigned> none;
  CHECK_THROWS_AS(zeta::ihara_sum_exceeds(none, 3, 1), Error);
}

TEST_CASE("quadratic sign") {
  using zeta::QuadraticValue;
  CHECK(QuadraticValue{1, -1, 2}.sign() == -1);   // 1 - sqrt2
  CHECK(QuadraticValue{-1, 1, 2}.sign() == 1);
  CHECK(QuadraticValue{3, -2, 2}.sign() == 1);    // 3 - 2 sqrt2
  CHECK(QuadraticValue{-3, 2, 2}.sign() == -1);
  CHECK(QuadraticValue{0, 0, 2}.sign() == 0);
  CHECK(QuadraticValue{2, -1, 4}.sign() == 0);    // b folded only by callers; 2 - sqrt4
  CHECK(QuadraticValue{0, -1, 5}.sign() == -1);
}

TEST_CASE("ihara agrees with 50-digit evaluation on seeded inputs") {
  std::mt19937_64 rng(20261017);
  const std::uint64_t qs[] = {2, 3, 4, 5, 7, 9};
  int agreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t q = qs[rng() % 6];
    const unsigned g = rng() % 4;
    std::vector<unsigned> degrees(1 + rng() % 5);
    for (auto& d : degrees) d = 1 + rng() % 6;
    const auto r = zeta::ihara_sum_exceeds(degrees, q, g);
    const Dec dec = decimal_sum(degrees, q);
    const Dec exact_approx(r.value.approx(40));
    CHECK(abs(dec - exact_approx) < Dec("1e-35"));
    const Dec threshold = g > 1 ? Dec(g - 1) : Dec(0);
    if (abs(dec - threshold) > Dec("1e-40")) {
      CHECK(r.exceeds == (dec > threshold));
      ++agreements;
    } else {
      CHECK_FALSE(r.exceeds);
    }
  }
  CHECK(agreements >= 100);
}

TEST_CASE("ihara near the threshold") {
  // k copies of a rational point over F_2 give k (sqrt2 + 1). With x^2 - 2k^2 = -1
  // this exceeds x + k by 1/(x + k sqrt2); with +1 it falls short by as much.
  using boost::multiprecision::cpp_int;
  cpp_int x = 1, k = 1;
  int checked = 0;
  for (int i = 1; i <= 24; ++i) {
    const cpp_int norm = x * x - 2 * k * k;
    REQUIRE((norm == 1 || norm == -1));
    if (k > 10'000'000) {
      const auto mult = k.convert_to<std::uint64_t>();
      const auto genus = (x + k + 1).convert_to<unsigned>();
      std::vector<zeta::DegreeCount> deg{{1, mult}};
      const auto r = zeta::ihara_sum_exceeds(deg, 2, genus);
      CHECK(r.exceeds == (norm == -1));
      const Dec gap = Dec(mult) * (sqrt(Dec(2)) + 1) - Dec(genus - 1);
      CHECK(abs(gap) < Dec("1e-6"));
      CHECK((gap > 0) == (norm == -1));
      // double precision cannot separate the value from the threshold
      const double naive = static_cast<double>(mult) * (std::sqrt(2.0) + 1.0) - static_cast<double>(genus - 1);
      CHECK(std::abs(naive) < 1e-7);
      ++checked;
    }
    const cpp_int nx = x + 2 * k, nk = x + k;
    x = nx;
    k = nk;
  }
  CHECK(checked >= 2);
}
