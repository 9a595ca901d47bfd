#include <doctest.h>

#include <random>
#include <set>

#include "core/errors.hpp"
#include "core/extension.hpp"
#include "core/galois_field.hpp"
#include "core/poly.hpp"

using namespace curveclass;
using namespace curveclass::gf;

namespace {

// Schoolbook product of two residue polynomials modulo the field modulus,
// written against the digit encoding only.
std::uint32_t naive_mul(const Field& F, Fq a, Fq b) {
  const auto p = F.characteristic();
  const auto m = F.degree();
  const auto da = F.coefficients(a), db = F.coefficients(b);
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto mod = F.modulus();
  for (unsigned k = 2 * m - 1; k >= m; --k) {
    const auto c = prod[k];
    prod[k] = 0;
    for (unsigned i = 0; i < m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - c) * mod[i]) % p;
  }
  std::uint64_t v = 0;
  for (unsigned i = m; i-- > 0;) v = v * p + prod[i];
  return static_cast<std::uint32_t>(v);
}

std::vector<std::pair<std::uint32_t, unsigned>> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  for (std::uint32_t p = 2; p <= limit; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned m = 1; q <= limit; ++m, q *= p) out.emplace_back(p, m);
  }
  return out;
}

Poly random_poly(const Field& F, std::size_t deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F.size() - 1);
  std::vector<Fq> c(deg + 1);
  for (auto& v : c) v = F.element(dist(rng));
  return Poly(F, std::move(c));
}

std::vector<std::int64_t> ints(std::initializer_list<std::int64_t> l) { return l; }

}  // namespace

TEST_CASE("field_create examples") {
  auto f2 = Field::create(2, 1);
  CHECK(f2.size() == 2);
  CHECK(std::vector<std::uint32_t>(f2.modulus().begin(), f2.modulus().end()) == std::vector<std::uint32_t>{0, 1});

  auto f4 = Field::create(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  CHECK(f4.size() == 4);
  CHECK(Field::create(2, 2) == f4);

  // -1 is not a square mod 3: the squares of {0,1,2} are {0,1}.
  std::set<int> squares;
  for (int x = 0; x < 3; ++x) squares.insert(x * x % 3);
  CHECK(squares.count(2) == 0);
  auto f9 = Field::create(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  CHECK(f9.size() == 9);
  CHECK(Field::create(3, 2) == f9);
}

TEST_CASE("field_create errors") {
  CHECK_THROWS_AS(Field::create(4, 1), Error);
  try {
    Field::create(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrimeCharacteristic);
  }
  try {
    Field::create(2, 2, std::vector<std::uint32_t>{1, 0, 1});
    FAIL("expected ReducibleModulus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
  }
  CHECK_THROWS_AS(Field::create(3, 2, std::vector<std::uint32_t>{1, 0, 2}), Error);  // not monic
}

TEST_CASE("field axioms hold exhaustively for q <= 81") {
  for (auto [p, m] : prime_powers_up_to(81)) {
    auto F = Field::create(p, m);
    const auto q = F.size();
    CAPTURE(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      const Fq A{a};
      ok &= F.add(A, F.neg(A)) == F.zero();
      ok &= F.mul(A, F.one()) == A;
      ok &= F.pow(A, q) == A;
      if (a != 0) {
        ok &= F.mul(A, F.inv(A)) == F.one();
        ok &= F.pow(A, q - 1) == F.one();
      }
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        const Fq B{b};
        ok &= F.mul(A, B).v == naive_mul(F, A, B);
        ok &= F.add(A, B) == F.add(B, A);
        ok &= F.mul(A, B) == F.mul(B, A);
        // digit-wise addition is the definition of + on residue polynomials
        const auto da = F.coefficients(A), db = F.coefficients(B);
        std::vector<std::uint32_t> s(m);
        for (unsigned i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
        ok &= F.add(A, B) == F.from_coefficients(s);
      }
    }
    CHECK(ok);
    // associativity and distributivity on a sample of triples
    std::mt19937_64 rng(q);
    std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(q - 1));
    for (int i = 0; i < 2000; ++i) {
      Fq a{d(rng)}, b{d(rng)}, c{d(rng)};
      REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
    // Frobenius is a bijection
    std::set<std::uint32_t> image;
    for (std::uint32_t a = 0; a < q; ++a) image.insert(F.frobenius(Fq{a}).v);
    CHECK(image.size() == q);
  }
}

TEST_CASE("square roots and trace") {
  for (auto [p, m] : prime_powers_up_to(81)) {
    auto F = Field::create(p, m);
    std::set<std::uint32_t> squares;
    for (std::uint32_t a = 0; a < F.size(); ++a) squares.insert(F.mul(Fq{a}, Fq{a}).v);
    for (std::uint32_t a = 0; a < F.size(); ++a) {
      const Fq A{a};
      CHECK(F.is_square(A) == (squares.count(a) == 1));
      if (auto r = F.sqrt(A)) CHECK(F.mul(*r, *r) == A);
      else CHECK_FALSE(F.is_square(A));
      // Tr(a) = a + a^p + ... + a^{p^{m-1}}
      Fq acc{}, cur = A;
      for (unsigned i = 0; i < m; ++i) {
        acc = F.add(acc, cur);
        cur = F.frobenius(cur);
      }
      CHECK(acc.v == F.trace(A));
    }
  }
}

TEST_CASE("poly_factor examples") {
  auto F2 = Field::create(2, 1);
  auto F3 = Field::create(3, 1);
  {
    auto f = Poly::from_ints(F2, ints({1, 0, 1}));
    auto fac = factor(f);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].factor == Poly::from_ints(F2, ints({1, 1})));
    CHECK(fac[0].multiplicity == 2);
  }
  {
    auto f = Poly::from_ints(F3, ints({0, -1, 0, 1}));
    auto fac = factor(f);
    REQUIRE(fac.size() == 3);
    CHECK(fac[0].factor == Poly::from_ints(F3, ints({0, 1})));
    CHECK(fac[1].factor == Poly::from_ints(F3, ints({1, 1})));
    CHECK(fac[2].factor == Poly::from_ints(F3, ints({2, 1})));
    for (auto& fa : fac) CHECK(fa.multiplicity == 1);
  }
  {
    auto f = Poly::from_ints(F2, ints({1, 0, 1, 0, 1}));
    auto fac = factor(f);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].factor == Poly::from_ints(F2, ints({1, 1, 1})));
    CHECK(fac[0].multiplicity == 2);
    auto g = fac[0].factor * fac[0].factor;
    CHECK(g == f);
  }
  try {
    factor(Poly(F2));
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPolynomial);
  }
}

TEST_CASE("poly_factor re-multiplies on random inputs") {
  std::mt19937_64 rng(20240517);
  const std::vector<std::pair<std::uint32_t, unsigned>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}};
  int checked = 0;
  for (auto [p, m] : fields) {
    auto F = Field::create(p, m);
    std::uniform_int_distribution<std::size_t> deg(1, 12);
    for (int i = 0; i < 180; ++i) {
      Poly f = random_poly(F, deg(rng), rng);
      // bias towards repeated factors
      if (i % 3 == 0) f = f * random_poly(F, deg(rng) % 3 + 1, rng);
      if (i % 5 == 0 && *f.degree() <= 6) f = f * f;
      if (f.is_zero()) continue;
      auto fac = factor(f);
      Poly prod = Poly::constant(F, f.leading());
      for (auto& fa : fac) {
        REQUIRE(fa.factor.leading() == F.one());
        REQUIRE(is_irreducible(fa.factor));
        for (unsigned k = 0; k < fa.multiplicity; ++k) prod = prod * fa.factor;
      }
      for (std::size_t k = 1; k < fac.size(); ++k) REQUIRE(fac[k - 1].factor < fac[k].factor);
      REQUIRE(prod == f);
      ++checked;
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("factor output is stable across calls") {
  auto F = Field::create(3, 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Poly f = random_poly(F, 10, rng);
    auto a = factor(f), b = factor(f);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].factor == b[k].factor);
  }
}

TEST_CASE("irreducibles examples") {
  auto F2 = Field::create(2, 1);
  auto d2 = irreducibles(F2, 2);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0] == Poly::from_ints(F2, ints({1, 1, 1})));
  CHECK(irreducibles(F2, 3).size() == 2);
  auto F3 = Field::create(3, 1);
  auto d1 = irreducibles(F3, 1);
  REQUIRE(d1.size() == 3);
  CHECK(d1[0] == Poly::from_ints(F3, ints({0, 1})));
  CHECK(d1[1] == Poly::from_ints(F3, ints({1, 1})));
  CHECK(d1[2] == Poly::from_ints(F3, ints({2, 1})));
}

TEST_CASE("irreducible counts match the necklace formula for q <= 9, d <= 6") {
  for (auto [p, m] : prime_powers_up_to(9)) {
    auto F = Field::create(p, m);
    for (unsigned d = 1; d <= 6; ++d) {
      auto list = irreducibles(F, d);
      CAPTURE(F.size());
      CAPTURE(d);
      CHECK(list.size() == necklace_count(F.size(), d));
      for (std::size_t k = 1; k < list.size(); ++k) REQUIRE(list[k - 1] < list[k]);
      if (F.size() <= 4 && d <= 4)
        for (auto& g : list) REQUIRE(is_irreducible(g));
    }
  }
}

TEST_CASE("irreducibles agree with trial division on tiny fields") {
  for (auto [p, m] : prime_powers_up_to(4)) {
    auto F = Field::create(p, m);
    const auto q = F.size();
    for (unsigned d = 1; d <= 4; ++d) {
      std::vector<Poly> brute;
      std::vector<Poly> lower;
      for (unsigned e = 1; e <= d / 2; ++e)
        for (auto& g : irreducibles(F, e)) lower.push_back(g);
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= q;
      for (std::uint64_t n = 0; n < count; ++n) {
        std::vector<Fq> c(d + 1);
        std::uint64_t v = n;
        for (unsigned i = 0; i < d; ++i) {
          c[i] = Fq{static_cast<std::uint32_t>(v % q)};
          v /= q;
        }
        c[d] = F.one();
        Poly f(F, c);
        bool reducible = false;
        for (auto& g : lower) reducible |= (f % g).is_zero();
        if (!reducible) brute.push_back(f);
      }
      std::sort(brute.begin(), brute.end());
      CHECK(brute == irreducibles(F, d));
    }
  }
}

TEST_CASE("polynomial arithmetic basics") {
  auto F = Field::create(5, 1);
  auto a = Poly::from_ints(F, ints({1, 2, 3}));
  auto b = Poly::from_ints(F, ints({4, 1}));
  auto [q, r] = a.divmod(b);
  CHECK(q * b + r == a);
  CHECK(r.degree().value_or(0) < 1);
  CHECK_FALSE(Poly(F).degree().has_value());
  auto g = xgcd(a, b);
  CHECK(g.s * a + g.t * b == g.g);
  CHECK(Poly::from_ints(F, ints({0, 0, 0})).is_zero());
  CHECK(Poly::from_ints(F, ints({1, 0, 1})).to_string() == "x^2 + 1");
}
