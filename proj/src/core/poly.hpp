#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galois_field.hpp"

namespace curveclass::gf {

/// Univariate polynomial over F_q with trailing zeros stripped.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Fq> coeffs);

  /// Integer coefficients, low degree first, mapped through n mod p.
  static Poly from_ints(const Field& field, std::span<const std::int64_t> coeffs);
  static Poly constant(const Field& field, Fq c);
  static Poly monomial(const Field& field, Fq c, std::size_t k);
  static Poly x(const Field& field) { return monomial(field, field.one(), 1); }

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == Fq{1}; }
  /// std::nullopt stands for the degree of the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  /// Number of stored coefficients (degree + 1, or 0 for zero).
  std::size_t size() const noexcept { return c_.size(); }
  Fq coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Fq{}; }
  Fq leading() const noexcept { return c_.empty() ? Fq{} : c_.back(); }
  std::span<const Fq> coefficients() const noexcept { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly scale(Fq c) const;

  /// Quotient and remainder; throws ZeroPolynomial on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& b) const;
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  Poly monic() const;
  Poly derivative() const;
  Fq eval(Fq x) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && a.field_ == b.field_; }
  /// Degree first, then coefficients from the leading term down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  Field field_;
  std::vector<Fq> c_;
};

struct ExtendedGcd {
  Poly g;  // monic (or zero)
  Poly s;
  Poly t;  // s*a + t*b = g
};

Poly gcd(Poly a, Poly b);
ExtendedGcd xgcd(const Poly& a, const Poly& b);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);
/// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
Poly invmod(const Poly& a, const Poly& m);

/// Rabin's test.
bool is_irreducible(const Poly& f);

struct Factor {
  Poly factor;  // monic irreducible
  unsigned multiplicity;
};

/// Squarefree decomposition followed by distinct-degree and equal-degree
/// (Cantor-Zassenhaus) splitting. The equal-degree stage draws from a
/// fixed-seed stream so results are reproducible. Output is sorted by the
/// polynomial order. The leading coefficient is dropped.
std::vector<Factor> factor(const Poly& f);

}  // namespace curveclass::gf
