#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "galois_field.hpp"
#include "poly.hpp"

namespace curveclass::gf {

/// F_{q^n} together with a fixed embedding of F_q. The big field uses the
/// least primitive modulus over F_p; F_q's generator t maps to the smallest
/// root (by index) of F_q's modulus.
class Extension {
 public:
  Extension(const Field& base, unsigned n);

  const Field& base() const noexcept { return base_; }
  const Field& big() const noexcept { return big_; }
  unsigned degree() const noexcept { return n_; }

  Fq embed(Fq a) const noexcept { return embedding_[a.v]; }
  /// Preimage in F_q, if the element lies in the image of the embedding.
  std::optional<Fq> restrict(Fq a) const;
  /// x -> x^q
  Fq frobenius(Fq a) const noexcept;
  /// Evaluates a polynomial over F_q at a point of F_{q^n}.
  Fq eval(const Poly& f, Fq x) const noexcept;
  /// Embedded coefficients, low degree first.
  std::vector<Fq> embed(const Poly& f) const;
  static Fq eval_embedded(const Field& big, const std::vector<Fq>& coeffs, Fq x) noexcept;

 private:
  Field base_;
  Field big_;
  unsigned n_;
  std::vector<Fq> embedding_;
  std::unordered_map<std::uint32_t, std::uint32_t> preimage_;
};

/// All monic irreducibles of degree d over F_q, ascending in polynomial
/// order. Built from Frobenius orbits in F_{q^d}; the count is checked
/// against the necklace formula.
std::vector<Poly> irreducibles(const Field& field, unsigned d);

/// (1/d) * sum_{e | d} mu(d/e) q^e
std::uint64_t necklace_count(std::uint64_t q, unsigned d);

}  // namespace curveclass::gf
