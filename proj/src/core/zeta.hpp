#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "budget.hpp"
#include "curve.hpp"

namespace curveclass::zeta {

/// Numerator of the zeta function: L(u) = sum a_i u^i, deg 2g.
struct LPolynomial {
  std::vector<std::int64_t> coefficients;  // a_0 .. a_{2g}
  unsigned genus = 0;
  std::uint64_t q = 0;

  /// a_{2g-i} = q^{g-i} a_i for all i.
  bool satisfies_functional_equation() const;
  /// a_i^2 <= C(2g, i)^2 q^i, in exact integers.
  bool satisfies_weil_bounds() const;
  /// N_n = q^n + 1 - sum alpha_i^n, from Newton's identities on L.
  std::int64_t predicted_count(unsigned n) const;
};

/// Determines a_1..a_g from N_1..N_g by Newton's identities and fills the
/// rest from the functional equation. counts[i] = N_{i+1}.
LPolynomial l_polynomial_from_counts(std::uint64_t q, unsigned genus, std::span<const std::uint64_t> counts);

/// Counts N_1..N_g directly. When q^{g+1} fits the budget, N_{g+1} is also
/// counted and compared with the prediction.
LPolynomial l_polynomial(const curve::Curve& curve, const Budget& budget = {});

/// h = L(1) = #Pic^0(X)(F_q).
std::uint64_t class_number(const LPolynomial& L);

/// p | h, i.e. Pic(X)[p] != 0.
bool pic_p_nontrivial(const curve::Curve& curve, std::uint32_t p, const Budget& budget = {});

/// Number of l_polynomial evaluations in this process (instrumentation).
std::uint64_t l_polynomial_invocations() noexcept;

}  // namespace curveclass::zeta
