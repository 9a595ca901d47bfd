#include "picard.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "errors.hpp"
#include "galois_field.hpp"

namespace curveclass::picard {

using gf::Poly;

namespace {

std::size_t deg(const Poly& p) { return p.degree().value_or(0); }
bool is_zero(const Poly& p) { return !p.degree().has_value(); }

void check_supported(const curve::Curve& c) {
  const auto& m = c.model();
  if (m.kind == curve::ModelKind::ProjectiveLine) return;
  if (c.characteristic() == 2)
    throw Error(ErrorCode::OracleUnsupportedModel, "the oracle does not handle characteristic 2");
  if (deg(m.f) != 2 * c.genus() + 1)
    throw Error(ErrorCode::OracleUnsupportedModel, "the oracle needs an imaginary model (deg f odd)");
}

// All polynomials of degree < n over the field, as coefficient vectors.
void for_each_poly(const gf::Field& F, std::size_t n, const std::function<void(const Poly&)>& fn) {
  std::vector<gf::Fq> c(n, gf::Fq{});
  const std::uint64_t q = F.size();
  while (true) {
    fn(Poly(F, c));
    std::size_t i = 0;
    while (i < n && ++c[i].v == q) c[i++].v = 0;
    if (i == n) return;
  }
}

std::vector<std::uint64_t> prime_list(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Jacobian::Jacobian(const curve::Curve& curve)
    : field_(curve.base()), f_(curve.model().f), g_(curve.genus()) {
  check_supported(curve);
}

Divisor Jacobian::identity() const { return {Poly::constant(field_, field_.one()), Poly(field_, {})}; }

Divisor Jacobian::negate(const Divisor& a) const { return {a.u, (-a.v) % a.u}; }

bool Jacobian::is_reduced(const Divisor& a) const {
  if (is_zero(a.u) || a.u.leading() != field_.one() || deg(a.u) > g_) return false;
  if (!is_zero(a.v) && deg(a.v) >= deg(a.u)) return false;
  return is_zero((a.v * a.v - f_) % a.u);
}

Divisor Jacobian::reduce(Poly u, Poly v) const {
  v = v % u;
  while (deg(u) > g_) {
    u = ((f_ - v * v) / u).monic();
    v = (-v) % u;
  }
  return {u.monic(), v};
}

Divisor Jacobian::add(const Divisor& a, const Divisor& b) const {
  const auto e = gf::xgcd(a.u, b.u);  // d0 = e1 u1 + e2 u2
  const auto c = gf::xgcd(e.g, a.v + b.v);  // d = c1 d0 + c2 (v1 + v2)
  const Poly& d = c.g;
  const Poly s1 = c.s * e.s, s2 = c.s * e.t, s3 = c.t;
  const Poly u = (a.u * b.u) / (d * d);
  const Poly num = s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f_);
  return reduce(u, (num / d) % u);
}

Divisor Jacobian::multiply(const Divisor& a, std::uint64_t n) const {
  Divisor acc = identity(), base = a;
  while (n) {
    if (n & 1) acc = add(acc, base);
    n >>= 1;
    if (n) base = add(base, base);
  }
  return acc;
}

std::vector<Divisor> Jacobian::elements(const Budget& budget) const {
  const std::uint64_t q = field_.size();
  std::uint64_t qg = 1;
  for (unsigned i = 0; i < g_; ++i) {
    qg *= q;
    if (qg > budget.oracle_q_pow_g) throw Error(ErrorCode::BudgetExceeded, "q^g exceeds the oracle budget");
  }
  std::vector<Divisor> out{identity()};
  for (unsigned k = 1; k <= g_; ++k) {
    // monic u of degree k: x^k + lower
    for_each_poly(field_, k, [&](const Poly& low) {
      const Poly u = low + Poly::monomial(field_, field_.one(), k);
      const Poly fu = f_ % u;
      for_each_poly(field_, k, [&](const Poly& v) {
        if ((v * v) % u == fu) {
          out.push_back({u, v});
          if (out.size() > budget.oracle_order)
            throw Error(ErrorCode::BudgetExceeded, "group order exceeds the oracle budget");
        }
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbelianGroupStructure structure_from_orders(const std::vector<std::uint64_t>& orders) {
  const std::uint64_t n = orders.size();
  AbelianGroupStructure s;
  s.order = n;
  if (n <= 1) return s;
  // per prime l: ranks[k-1] = #{i : e_i >= k} from |G[l^k]| = l^{sum min(k, e_i)}
  std::vector<std::vector<std::uint64_t>> primary;  // exponents-as-powers for each prime, descending
  for (std::uint64_t l : prime_list(n)) {
    std::vector<unsigned> log_counts{0};
    for (std::uint64_t lk = l;; lk *= l) {
      const auto cnt = static_cast<std::uint64_t>(
          std::count_if(orders.begin(), orders.end(), [&](std::uint64_t o) { return lk % o == 0; }));
      unsigned e = 0;
      for (std::uint64_t c = cnt; c > 1; c /= l) {
        if (c % l) throw Error(ErrorCode::Internal, "torsion count is not a prime power");
        ++e;
      }
      if (e == log_counts.back()) break;
      log_counts.push_back(e);
      if (lk > n) throw Error(ErrorCode::Internal, "torsion counts do not stabilise");
    }
    // ranks r_k = log_counts[k] - log_counts[k-1], non-increasing in k
    std::vector<std::uint64_t> powers;
    const std::size_t top = log_counts.size() - 1;
    std::vector<unsigned> ranks(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k) ranks[k] = log_counts[k] - log_counts[k - 1];
    for (std::size_t k = top; k >= 1; --k) {
      const unsigned exact = ranks[k] - ranks[k + 1];  // factors of exponent exactly k
      std::uint64_t lk = 1;
      for (std::size_t i = 0; i < k; ++i) lk *= l;
      for (unsigned i = 0; i < exact; ++i) powers.push_back(lk);
    }
    primary.push_back(std::move(powers));  // descending
  }
  std::size_t k = 0;
  for (const auto& p : primary) k = std::max(k, p.size());
  std::vector<std::uint64_t> factors(k, 1);
  for (const auto& p : primary)
    for (std::size_t i = 0; i < p.size(); ++i) factors[i] *= p[i];
  std::reverse(factors.begin(), factors.end());
  s.invariant_factors = factors;
  std::uint64_t prod = 1;
  for (auto d : factors) prod *= d;
  if (prod != n) throw Error(ErrorCode::Internal, "element orders are inconsistent with an abelian group");
  return s;
}

AbelianGroupStructure jacobian_group(const curve::Curve& curve, const Budget& budget) {
  check_supported(curve);
  if (curve.genus() == 0) return {};
  const Jacobian J(curve);
  const auto elems = J.elements(budget);
  const std::uint64_t n = elems.size();
  std::map<Divisor, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  auto lookup = [&](const Divisor& d) {
    auto it = index.find(d);
    if (it == index.end()) throw Error(ErrorCode::Internal, "group law left the enumerated set");
    return it->second;
  };

  const Divisor e = J.identity();
  for (const auto& x : elems) {
    if (!J.is_reduced(x)) throw Error(ErrorCode::Internal, "enumerated a non-reduced divisor");
    if (J.add(e, x) != x || J.add(x, e) != x) throw Error(ErrorCode::Internal, "identity law fails");
    const Divisor neg = J.negate(x);
    lookup(neg);
    if (J.add(x, neg) != e) throw Error(ErrorCode::Internal, "inverse law fails");
  }
  std::mt19937_64 rng(0x5eedcafef00dULL);
  for (int t = 0; t < 100; ++t) {
    const auto& a = elems[rng() % n];
    const auto& b = elems[rng() % n];
    const auto& c = elems[rng() % n];
    const Divisor left = J.add(J.add(a, b), c), right = J.add(a, J.add(b, c));
    lookup(left);
    if (left != right) throw Error(ErrorCode::Internal, "associativity fails");
    if (J.add(a, b) != J.add(b, a)) throw Error(ErrorCode::Internal, "commutativity fails");
  }

  const auto primes = prime_list(n);
  std::vector<std::uint64_t> orders;
  orders.reserve(n);
  for (const auto& x : elems) {
    if (J.multiply(x, n) != e) throw Error(ErrorCode::Internal, "element order does not divide the group order");
    std::uint64_t o = n;
    for (auto l : primes)
      while (o % l == 0 && J.multiply(x, o / l) == e) o /= l;
    orders.push_back(o);
  }
  return structure_from_orders(orders);
}

unsigned p_torsion_dim(const AbelianGroupStructure& group, std::uint32_t p) {
  return static_cast<unsigned>(std::count_if(group.invariant_factors.begin(), group.invariant_factors.end(),
                                             [&](std::uint64_t d) { return d % p == 0; }));
}

}  // namespace curveclass::picard
