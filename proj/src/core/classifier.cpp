#include "classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "errors.hpp"
#include "galois_field.hpp"
#include "picard.hpp"
#include "zeta.hpp"

namespace curveclass::classify {

namespace {

constexpr const char* kCdOne = "=1";
constexpr const char* kCdTwo = "\xE2\x89\xA4" "2";  // ≤2
constexpr const char* kCdZero = "=0";
constexpr const char* kCdFinite = "\xE2\x88\x9E (finite nontrivial group)";  // ∞
constexpr const char* kCdUnknown = "unknown";

constexpr const char* kPiTrivial = "trivial";
constexpr const char* kPiCyclic = "cyclic of order p^r";
constexpr const char* kPiIhara = "finite (Ihara)";
constexpr const char* kPiZp = "\xE2\x89\x85 Z_p";  // ≅
constexpr const char* kPiUnknown = "infinite/unknown";

// Resolves S and T against the closed points and returns the degrees of T.
std::vector<unsigned> resolve(const MarkedInstance& in, const Budget& budget) {
  std::set<std::string> s(in.S.begin(), in.S.end()), t(in.T.begin(), in.T.end());
  for (const auto& id : s)
    if (t.count(id)) throw Error(ErrorCode::InvalidArgument, "S and T must be disjoint: " + id);
  unsigned top = 0;
  for (const auto* set : {&s, &t})
    for (const auto& id : *set) {
      auto d = curve::degree_from_id(id);
      if (!d || *d == 0) throw Error(ErrorCode::UnknownPoint, "malformed point id: " + id);
      top = std::max(top, *d);
    }
  if (top == 0) return {};
  std::map<std::string, unsigned> known;
  for (const auto& pt : curve::closed_points(in.curve, top, budget)) known.emplace(pt.id, pt.degree);
  std::vector<unsigned> degrees;
  for (const auto* set : {&s, &t})
    for (const auto& id : *set) {
      auto it = known.find(id);
      if (it == known.end()) throw Error(ErrorCode::UnknownPoint, "no closed point with id " + id);
      if (set == &t) degrees.push_back(it->second);
    }
  return degrees;
}

// dim Pic(X)[p] from the oracle, or 0 when p does not divide h.
std::optional<unsigned> torsion_dim(const curve::Curve& c, std::uint32_t p, std::uint64_t h, const Budget& budget) {
  try {
    const auto G = picard::jacobian_group(c, budget);
    if (G.order != h) throw Error(ErrorCode::Internal, "oracle group order disagrees with L(1)");
    return picard::p_torsion_dim(G, p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OracleUnsupportedModel && e.code() != ErrorCode::BudgetExceeded) throw;
  }
  if (h % p != 0) return 0u;
  return std::nullopt;
}

}  // namespace

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::KPI1_TRUE: return "KPI1_TRUE";
    case Verdict::KPI1_FALSE: return "KPI1_FALSE";
    case Verdict::UNDETERMINED: return "UNDETERMINED";
  }
  return "?";
}

unsigned fundamental_group_case(std::span<const unsigned> degrees, std::uint32_t p) {
  if (degrees.empty()) throw Error(ErrorCode::InvalidArgument, "T must be nonempty");
  if (!gf::is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  unsigned g = 0;
  for (unsigned d : degrees) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "degrees must be positive");
    g = std::gcd(g, d);
  }
  unsigned r = 0;
  while (g % p == 0) {
    g /= p;
    ++r;
  }
  return r;
}

EulerBlock euler_bookkeeping(std::uint64_t s, std::uint64_t t, std::uint64_t h1) {
  if (t == 0) throw Error(ErrorCode::InvalidArgument, "bookkeeping needs #T >= 1");
  if (h1 > 1 + s) throw Error(ErrorCode::InconsistentInput, "h1 exceeds dim H^1(X) = 1 + s");
  EulerBlock e{s, t, h1};
  e.rho = static_cast<std::int64_t>(1 + s) - static_cast<std::int64_t>(h1);
  e.h2 = static_cast<std::int64_t>(t) - e.rho + static_cast<std::int64_t>(s);
  e.chi_ok = 1 - static_cast<std::int64_t>(h1) + e.h2 == static_cast<std::int64_t>(t);
  e.rho_in_range = e.rho >= 0 && e.rho <= static_cast<std::int64_t>(std::min<std::uint64_t>(1 + s, t));
  return e;
}

bool mu_p_in_field(std::uint64_t q, std::uint32_t p) {
  if (!gf::is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  if (q % p == 0) throw Error(ErrorCode::CharacteristicClash, "p divides q");
  return (q - 1) % p == 0;
}

Report classify(const MarkedInstance& in, const Budget& budget) {
  const std::uint32_t p = in.p;
  if (!gf::is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  const curve::Curve& C = in.curve;
  const auto t_degrees = resolve(in, budget);
  const bool has_s = !in.S.empty(), has_t = !in.T.empty();

  Report rep;
  rep.invariants.q = C.q();
  rep.invariants.g = C.genus();

  auto compute_h = [&] {
    const auto h = zeta::class_number(zeta::l_polynomial(C, budget));
    rep.invariants.h = h;
    rep.invariants.pic_p_nontrivial = h % p == 0;
    return h;
  };

  if (C.characteristic() == p) {
    if (has_s) {
      rep.case_number = 1;
      rep.case_tag = "char_p.ramified";
      rep.justification = "thm1.2(i)";
      rep.verdict = Verdict::KPI1_TRUE;
      rep.cd_bound = kCdOne;
      rep.pi1_description = kPiUnknown;
      return rep;
    }
    if (!has_t) {
      rep.case_number = 2;
      rep.case_tag = "char_p.unmarked";
      rep.justification = "thm1.2(ii)";
      rep.verdict = Verdict::KPI1_TRUE;
      rep.cd_bound = kCdTwo;
      rep.pi1_description = kPiUnknown;
      return rep;
    }
    const auto h = compute_h();
    const unsigned r = fundamental_group_case(t_degrees, p);
    rep.r = r;
    if (h % p != 0) {
      rep.case_number = 3;
      rep.case_tag = "char_p.pic_p_trivial";
      rep.justification = "thm1.3(i)";
      rep.invariants.s = 0;
      rep.verdict = (t_degrees.size() == 1 && r == 0) ? Verdict::KPI1_TRUE : Verdict::KPI1_FALSE;
      rep.pi1_description = r == 0 ? kPiTrivial : kPiCyclic;
      rep.cd_bound = r == 0 ? kCdZero : kCdFinite;
      rep.euler = euler_bookkeeping(0, t_degrees.size(), r == 0 ? 0 : 1);
      return rep;
    }
    rep.invariants.s = torsion_dim(C, p, h, budget);
    rep.invariants.ihara = zeta::ihara_sum_exceeds(std::span<const unsigned>(t_degrees), C.q(), C.genus());
    if (rep.invariants.ihara->exceeds) {
      rep.case_number = 4;
      rep.case_tag = "char_p.ihara_finite";
      rep.justification = "thm1.3(ii)";
      rep.verdict = Verdict::KPI1_FALSE;
      rep.pi1_description = kPiIhara;
      rep.cd_bound = r >= 1 ? kCdFinite : kCdUnknown;
      return rep;
    }
    rep.case_number = 5;
    rep.case_tag = "char_p.open";
    rep.justification = "none";
    rep.verdict = Verdict::UNDETERMINED;
    rep.pi1_description = kPiUnknown;
    rep.cd_bound = kCdUnknown;
    rep.note = "Pic(X)[p] != 0 and the Ihara bound is not met";
    return rep;
  }

  if (has_s || has_t)
    throw Error(ErrorCode::UnsupportedCase, "marked or affine curves with p != char are not handled");
  const bool mu = mu_p_in_field(C.q(), p);
  rep.invariants.mu_p = mu;
  rep.justification = "thm1.4";
  if (!mu) {
    rep.case_number = 6;
    rep.case_tag = "char_l.kpi1";
    rep.verdict = Verdict::KPI1_TRUE;
    rep.pi1_description = kPiUnknown;
    rep.cd_bound = kCdUnknown;
    return rep;
  }
  const auto h = compute_h();
  rep.invariants.s = torsion_dim(C, p, h, budget);
  if (h % p == 0) {
    rep.case_number = 6;
    rep.case_tag = "char_l.kpi1";
    rep.verdict = Verdict::KPI1_TRUE;
    rep.pi1_description = kPiUnknown;
    rep.cd_bound = kCdUnknown;
    return rep;
  }
  rep.case_number = 7;
  rep.case_tag = "char_l.pi1_Zp";
  rep.verdict = Verdict::KPI1_FALSE;
  rep.pi1_description = kPiZp;
  rep.cd_bound = kCdOne;
  rep.note = "H^i(pi1(p)) finite, vanishes for i>3";
  return rep;
}

}  // namespace curveclass::classify
