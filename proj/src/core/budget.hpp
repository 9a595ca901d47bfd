#pragma once

#include <cstdint>

namespace curveclass {

// Enumeration caps shared by the counting and oracle code paths.
struct Budget {
  // Largest extension field F_{q^n} we are willing to enumerate.
  std::uint64_t enumeration_cap = 1'000'000;
  // Jacobian oracle: q^g and group order limits.
  std::uint64_t oracle_q_pow_g = 1'000;
  std::uint64_t oracle_order = 10'000;

  // Reads CURVECLASS_BUDGET (a positive integer) into enumeration_cap.
  static Budget from_environment();
};

}  // namespace curveclass
