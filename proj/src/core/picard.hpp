#pragma once

#include <cstdint>
#include <vector>

#include "budget.hpp"
#include "curve.hpp"
#include "poly.hpp"

namespace curveclass::picard {

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k, d_i >= 2.
struct AbelianGroupStructure {
  std::vector<std::uint64_t> invariant_factors;
  std::uint64_t order = 1;

  friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

/// Mumford pair (u, v): u monic, deg v < deg u, u | v^2 - f.
struct Divisor {
  gf::Poly u;
  gf::Poly v;

  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend auto operator<=>(const Divisor& a, const Divisor& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
};

/// Cantor's algorithm on the Jacobian of y^2 = f, deg f = 2g+1, odd characteristic.
class Jacobian {
 public:
  explicit Jacobian(const curve::Curve& curve);

  unsigned genus() const noexcept { return g_; }
  Divisor identity() const;
  Divisor add(const Divisor& a, const Divisor& b) const;
  Divisor negate(const Divisor& a) const;
  Divisor multiply(const Divisor& a, std::uint64_t n) const;
  bool is_reduced(const Divisor& a) const;

  /// Every reduced pair with deg u <= g, i.e. all of Pic^0(X)(F_q).
  std::vector<Divisor> elements(const Budget& budget = {}) const;

 private:
  Divisor reduce(gf::Poly u, gf::Poly v) const;
  gf::Field field_;
  gf::Poly f_;
  unsigned g_;
};

/// Builds the group by enumeration and reads off its structure from element
/// orders. Runs identity, inverse and associativity checks on the way.
AbelianGroupStructure jacobian_group(const curve::Curve& curve, const Budget& budget = {});

/// Structure of a group from the multiset of its element orders.
AbelianGroupStructure structure_from_orders(const std::vector<std::uint64_t>& orders);

/// #{i : p | d_i} = dim_{F_p} G[p].
unsigned p_torsion_dim(const AbelianGroupStructure& group, std::uint32_t p);

}  // namespace curveclass::picard
