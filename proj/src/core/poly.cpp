#include "poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "errors.hpp"

namespace curveclass::gf {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::InvalidArgument, "polynomials over different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c.v >= field_.size()) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
  trim();
}

Poly Poly::from_ints(const Field& field, std::span<const std::int64_t> coeffs) {
  std::vector<Fq> c;
  c.reserve(coeffs.size());
  for (auto n : coeffs) c.push_back(field.from_int(n));
  return Poly(field, std::move(c));
}

Poly Poly::constant(const Field& field, Fq c) { return Poly(field, {c}); }

Poly Poly::monomial(const Field& field, Fq c, std::size_t k) {
  std::vector<Fq> v(k + 1, field.zero());
  v[k] = c;
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = field_.neg(c);
  return r;
}

Poly& Poly::operator+=(const Poly& b) {
  require_same_field(*this, b);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), Fq{});
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_.add(c_[i], b.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  require_same_field(*this, b);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), Fq{});
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_.sub(c_[i], b.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& b) {
  require_same_field(*this, b);
  if (c_.empty() || b.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Fq> r(c_.size() + b.c_.size() - 1, Fq{});
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].v == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = field_.add(r[i + j], field_.mul(c_[i], b.c_[j]));
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly Poly::scale(Fq c) const {
  Poly r(*this);
  for (auto& a : r.c_) a = field_.mul(a, c);
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& b) const {
  require_same_field(*this, b);
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (c_.size() < b.c_.size()) return {Poly(field_), *this};
  std::vector<Fq> rem = c_;
  std::vector<Fq> quo(c_.size() - b.c_.size() + 1, Fq{});
  const Fq lc_inv = field_.inv(b.leading());
  const std::size_t n = b.c_.size();
  for (std::size_t k = rem.size() - 1;; --k) {
    const Fq c = field_.mul(rem[k], lc_inv);
    quo[k - n + 1] = c;
    if (c.v != 0)
      for (std::size_t i = 0; i < n; ++i)
        rem[k - n + 1 + i] = field_.sub(rem[k - n + 1 + i], field_.mul(c, b.c_[i]));
    if (k == n - 1) break;
  }
  rem.resize(n - 1);
  return {Poly(field_, std::move(quo)), Poly(field_, std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(field_.inv(leading()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Fq> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())), c_[i]);
  return Poly(field_, std::move(d));
}

Fq Poly::eval(Fq x) const {
  Fq acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].v == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].v == 1;
    if (!unit || i == 0) os << field_.to_string(c_[i]);
    if (i > 0) {
      if (!unit) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd xgcd(const Poly& a, const Poly& b) {
  const Field& F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, F.one()), s1(F);
  Poly t0(F), t1 = Poly::constant(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Fq inv = F.inv(r0.leading());
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(mod.field(), mod.field().one()) % mod;
  base = base % mod;
  while (e) {
    if (e & 1) result = (result * base) % mod;
    e >>= 1;
    if (e) base = (base * base) % mod;
  }
  return result;
}

Poly invmod(const Poly& a, const Poly& m) {
  auto [g, s, t] = xgcd(a % m, m);
  if (!g.is_one()) throw Error(ErrorCode::InvalidArgument, "polynomial is not invertible modulo m");
  return s % m;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "irreducibility of the zero polynomial");
  const std::size_t n = *f.degree();
  if (n == 0) return false;
  if (n == 1) return true;
  const Field& F = f.field();
  const Poly g = f.monic();
  const Poly x = Poly::x(F);
  std::vector<Poly> frob{x % g};
  for (std::size_t i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), F.size(), g));
  if (!(frob[n] - x % g).is_zero()) return false;
  for (auto r : prime_factors(n))
    if (!gcd(g, frob[n / r] - x).is_one()) return false;
  return true;
}

namespace {

// c(x) = s(x)^p for some s; returns s.
Poly pth_root(const Poly& c) {
  const Field& F = c.field();
  const std::uint32_t p = F.characteristic();
  std::uint64_t root_exp = F.size() / p;  // a^{q/p} is the p-th root of a
  std::vector<Fq> r(*c.degree() / p + 1, Fq{});
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.pow(c.coeff(i * p), root_exp);
  return Poly(F, std::move(r));
}

void squarefree(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
  const Field& F = f.field();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree().value_or(0) > 0) out.emplace_back(z.monic(), i * scale);
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one() && c.degree().value_or(0) > 0)
    squarefree(pth_root(c.monic()), scale * F.characteristic(), out);
}

std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, std::size_t>> out;
  const Field& F = f.field();
  const Poly x = Poly::x(F);
  Poly h = x % f;
  for (std::size_t d = 1; f.degree().value_or(0) >= 2 * d; ++d) {
    h = powmod(h, F.size(), f);
    Poly g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree().value_or(0) > 0) out.emplace_back(f.monic(), *f.degree());
  return out;
}

Poly random_poly(const Field& F, std::size_t max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F.size() - 1);
  std::vector<Fq> c(max_deg);
  for (auto& v : c) v = F.element(dist(rng));
  return Poly(F, std::move(c));
}

// Splits a product of distinct monic irreducibles of degree d.
void equal_degree(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t n = *f.degree();
  if (n == d) {
    out.push_back(f.monic());
    return;
  }
  const Field& F = f.field();
  const bool even = F.characteristic() == 2;
  while (true) {
    Poly a = random_poly(F, n, rng);
    if (a.degree().value_or(0) == 0) continue;
    Poly g = gcd(f, a);
    if (!g.is_one()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
    Poly b(F);
    if (even) {
      // absolute trace map a + a^2 + ... + a^{2^{md-1}}
      const std::size_t k = std::size_t{F.degree()} * d;
      Poly t = a % f;
      b = t;
      for (std::size_t i = 1; i < k; ++i) {
        t = (t * t) % f;
        b += t;
      }
    } else {
      // a^{(q^d - 1)/2} = (prod_{i<d} a^{q^i})^{(q-1)/2}
      Poly t = a % f, norm = a % f;
      for (std::size_t i = 1; i < d; ++i) {
        t = powmod(t, F.size(), f);
        norm = (norm * t) % f;
      }
      b = powmod(norm, (F.size() - 1) / 2, f) - Poly::constant(F, F.one());
    }
    Poly g2 = gcd(f, b);
    const std::size_t dg = g2.degree().value_or(0);
    if (dg > 0 && dg < n) {
      equal_degree(g2, d, rng, out);
      equal_degree(f / g2, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  std::vector<Factor> out;
  if (*f.degree() == 0) return out;
  std::mt19937_64 rng(0x5eed'cafe'f00dULL);
  std::vector<std::pair<Poly, unsigned>> sqf;
  squarefree(f.monic(), 1, sqf);
  for (auto& [part, mult] : sqf) {
    for (auto& [g, d] : distinct_degree(part)) {
      std::vector<Poly> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (auto c = a.factor <=> b.factor; c != 0) return c < 0;
    return a.multiplicity < b.multiplicity;
  });
  // A factor can surface in several squarefree layers only via the p-th root
  // recursion; merge equal factors.
  std::vector<Factor> merged;
  for (auto& fa : out) {
    if (!merged.empty() && merged.back().factor == fa.factor)
      merged.back().multiplicity += fa.multiplicity;
    else
      merged.push_back(std::move(fa));
  }
  return merged;
}

}  // namespace curveclass::gf
