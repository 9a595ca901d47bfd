#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curveclass::gf {

/// Element of F_q. The value is the canonical index of the residue polynomial
/// c_0 + c_1 t + ... + c_{m-1} t^{m-1}, read as the base-p number sum c_i p^i.
/// The index order is the canonical element order used everywhere else.
struct Fq {
  std::uint32_t v = 0;

  friend constexpr auto operator<=>(Fq, Fq) = default;
};

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// F_q = F_p[t]/(modulus). Immutable; copies share the same tables.
///
/// Multiplication goes through discrete log/exp tables, addition in odd
/// characteristic through Zech logarithms, so every operation is O(1) after
/// construction. Construction is O(q) time and memory.
class Field {
 public:
  /// Builds F_{p^m}. Without an explicit modulus the lexicographically least
  /// monic irreducible of degree m is used (coefficients compared from the
  /// t^{m-1} term down). The modulus is given low degree first and must be
  /// monic of degree m.
  static Field create(std::uint32_t p, unsigned m,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// F_{p^m} defined by the least primitive polynomial. Used for internal
  /// extension fields where table construction speed matters.
  static Field create_primitive(std::uint32_t p, unsigned m);

  std::uint32_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint64_t size() const noexcept;
  /// Monic modulus over F_p, low degree first, length degree()+1.
  std::span<const std::uint32_t> modulus() const noexcept;

  Fq zero() const noexcept { return {0}; }
  Fq one() const noexcept { return {1}; }
  Fq from_int(std::int64_t n) const noexcept;
  /// Coefficients over F_p, low degree first; longer inputs are reduced
  /// modulo the field modulus.
  Fq from_coefficients(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coefficients(Fq a) const;
  Fq element(std::uint64_t index) const;

  Fq add(Fq a, Fq b) const noexcept;
  Fq sub(Fq a, Fq b) const noexcept;
  Fq neg(Fq a) const noexcept;
  Fq mul(Fq a, Fq b) const noexcept;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const;
  Fq pow(Fq a, std::uint64_t e) const noexcept;
  /// a^p
  Fq frobenius(Fq a) const noexcept;
  /// Absolute trace to F_p, returned as an element of the prime field.
  std::uint32_t trace(Fq a) const noexcept;

  bool is_square(Fq a) const noexcept;
  /// A square root when one exists. In odd characteristic the root with even
  /// discrete log is returned; callers needing both use neg().
  std::optional<Fq> sqrt(Fq a) const noexcept;

  /// Discrete log with respect to the table generator; a must be nonzero.
  std::uint64_t log(Fq a) const;
  Fq exp(std::uint64_t k) const noexcept;
  Fq generator() const noexcept;

  std::string to_string(Fq a) const;

  /// Same characteristic and same modulus.
  bool operator==(const Field& other) const noexcept;
  bool same_instance(const Field& other) const noexcept { return impl_ == other.impl_; }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

namespace detail {
// Dense polynomials over F_p, low degree first, used for modulus selection
// before any Field exists.
using FpPoly = std::vector<std::uint32_t>;
bool fp_is_irreducible(const FpPoly& f, std::uint32_t p);
bool fp_is_primitive(const FpPoly& f, std::uint32_t p);
}  // namespace detail

}  // namespace curveclass::gf
