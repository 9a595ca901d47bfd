#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "budget.hpp"
#include "curve.hpp"
#include "ihara.hpp"

namespace curveclass::classify {

enum class Verdict { KPI1_TRUE, KPI1_FALSE, UNDETERMINED };
const char* verdict_name(Verdict v) noexcept;

struct MarkedInstance {
  curve::Curve curve;
  std::vector<std::string> S;  // ramification allowed
  std::vector<std::string> T;  // marked (split)
  std::uint32_t p = 0;
};

struct EulerBlock {
  std::uint64_t s = 0, t = 0, h1 = 0;
  std::int64_t rho = 0, h2 = 0;
  bool chi_ok = false;
  bool rho_in_range = false;
};

struct Invariants {
  std::uint64_t q = 0;
  unsigned g = 0;
  std::optional<std::uint64_t> h;
  std::optional<bool> pic_p_nontrivial;
  std::optional<zeta::IharaReport> ihara;
  std::optional<bool> mu_p;
  std::optional<unsigned> s;
};

struct Report {
  int case_number = 0;  // row of the decision table, 1..7
  std::string case_tag;
  std::string justification;
  Verdict verdict = Verdict::UNDETERMINED;
  std::string cd_bound;
  std::string pi1_description;
  std::optional<unsigned> r;  // pi_1 cyclic of order p^r
  Invariants invariants;
  std::optional<EulerBlock> euler;
  std::string note;
};

/// Largest r with p^r | gcd(degrees).
unsigned fundamental_group_case(std::span<const unsigned> degrees, std::uint32_t p);

/// rho = (1+s) - h1, h2 = t - rho + s. InconsistentInput if h1 > 1+s.
EulerBlock euler_bookkeeping(std::uint64_t s, std::uint64_t t, std::uint64_t h1);

/// p | q-1. CharacteristicClash when p | q.
bool mu_p_in_field(std::uint64_t q, std::uint32_t p);

Report classify(const MarkedInstance& instance, const Budget& budget = {});

}  // namespace curveclass::classify
