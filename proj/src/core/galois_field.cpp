#include "galois_field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace curveclass::gf {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace detail {
namespace {

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

FpPoly mod(FpPoly a, const FpPoly& f, std::uint32_t p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const std::uint64_t lc_inv = inv_mod(f.back(), p);
  while (a.size() > n) {
    const std::uint64_t c = a.back() * lc_inv % p;
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    trim(a);
  }
  return a;
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return mod(std::move(r), f, p);
}

FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint32_t p) {
  FpPoly r{1};
  base = mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    e >>= 1;
    if (e) base = mulmod(base, base, f, p);
  }
  return mod(std::move(r), f, p);
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly sub(FpPoly a, const FpPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

}  // namespace

bool fp_is_irreducible(const FpPoly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  const FpPoly x{0, 1};
  // x^{p^n} = x mod f, and gcd(x^{p^{n/r}} - x, f) = 1 for primes r | n.
  FpPoly frob = x;
  std::vector<FpPoly> powers(n + 1);
  powers[0] = x;
  for (std::size_t i = 1; i <= n; ++i) {
    frob = powmod(frob, p, f, p);
    powers[i] = frob;
  }
  if (sub(powers[n], x, p).size() != 0) return false;
  for (std::uint64_t r : prime_factors(n)) {
    FpPoly g = gcd(f, sub(powers[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool fp_is_primitive(const FpPoly& f, std::uint32_t p) {
  if (!fp_is_irreducible(f, p)) return false;
  const std::size_t n = f.size() - 1;
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= p;
  order -= 1;
  const FpPoly x{0, 1};
  if (mod(x, f, p).empty()) return false;  // f = t
  for (std::uint64_t r : prime_factors(order)) {
    FpPoly y = powmod(x, order / r, f, p);
    if (y.size() == 1 && y[0] == 1) return false;
  }
  return true;
}

}  // namespace detail

struct Field::Impl {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint64_t> pow_p;  // p^i, i <= m
  std::vector<std::uint32_t> exp;    // exp[k] = g^k, k < 2(q-1)
  std::vector<std::uint32_t> log;    // log[a], a != 0
  std::vector<std::uint32_t> zech;   // log(1 + g^k), or kNone when 1 + g^k = 0
  std::vector<std::uint32_t> basis_trace;
  std::uint32_t generator = 1;

  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(m);
    for (unsigned i = 0; i < m; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }

  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint64_t v = 0;
    for (unsigned i = m; i-- > 0;) v = v * p + d[i];
    return static_cast<std::uint32_t>(v);
  }

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    std::uint64_t r = 0;
    for (unsigned i = 0; i < m; ++i) {
      const std::uint32_t s = (a % p + b % p) % p;
      r += s * pow_p[i];
      a /= p;
      b /= p;
    }
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a);
    auto db = digits(b);
    std::vector<std::uint32_t> prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    for (unsigned k = 2 * m - 1; k >= m; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < m; ++i)
        prod[k - m + i] = static_cast<std::uint32_t>((prod[k - m + i] + (p - c) * modulus[i]) % p);
    }
    prod.resize(m);
    return encode(prod);
  }

  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // Multiplication by t: shift digits up and reduce by the monic modulus.
  std::uint32_t mul_by_t(std::uint32_t a) const {
    auto d = digits(a);
    const std::uint32_t top = d[m - 1];
    for (unsigned i = m - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < m; ++i)
        d[i] = static_cast<std::uint32_t>((d[i] + std::uint64_t{p - top} * modulus[i]) % p);
    return encode(d);
  }

  void build_tables() {
    pow_p.assign(m + 1, 1);
    for (unsigned i = 1; i <= m; ++i) pow_p[i] = pow_p[i - 1] * p;
    q = pow_p[m];
    const std::uint64_t order = q - 1;
    exp.assign(2 * order, 0);
    log.assign(q, 0);

    const bool t_primitive = m > 1 && detail::fp_is_primitive(modulus, p);
    if (t_primitive) {
      generator = p;  // the class of t
      std::uint32_t cur = 1;
      for (std::uint64_t k = 0; k < order; ++k) {
        exp[k] = cur;
        cur = mul_by_t(cur);
      }
    } else {
      const auto factors = prime_factors(order);
      generator = 0;
      for (std::uint32_t g = 1; g < q && generator == 0; ++g) {
        bool ok = true;
        for (std::uint64_t r : factors)
          if (slow_pow(g, order / r) == 1) {
            ok = false;
            break;
          }
        if (ok && (order > 1 || g == 1)) generator = g;
      }
      if (generator == 0) throw Error(ErrorCode::Internal, "no primitive element found");
      std::uint32_t cur = 1;
      for (std::uint64_t k = 0; k < order; ++k) {
        exp[k] = cur;
        cur = slow_mul(cur, generator);
      }
    }
    for (std::uint64_t k = 0; k < order; ++k) {
      exp[order + k] = exp[k];
      log[exp[k]] = static_cast<std::uint32_t>(k);
    }
    if (p != 2) {
      zech.assign(order, kNone);
      for (std::uint64_t k = 0; k < order; ++k) {
        const std::uint32_t s = add_digits(exp[k], 1);
        zech[k] = s == 0 ? kNone : log[s];
      }
    }
    basis_trace.assign(m, 0);
    for (unsigned i = 0; i < m; ++i) {
      std::uint32_t a = static_cast<std::uint32_t>(pow_p[i]);
      std::uint32_t acc = 0, cur = a;
      for (unsigned j = 0; j < m; ++j) {
        acc = add_digits(acc, cur);
        cur = slow_pow(cur, p);
      }
      basis_trace[i] = acc;  // lies in F_p, so the index is the value
    }
  }
};

namespace {

std::shared_ptr<Field::Impl> make_impl(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus) {
  auto impl = std::make_shared<Field::Impl>();
  impl->p = p;
  impl->m = m;
  impl->modulus = std::move(modulus);
  impl->build_tables();
  return impl;
}

void check_size(std::uint32_t p, unsigned m) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > (std::uint64_t{1} << 31))
      throw Error(ErrorCode::BudgetExceeded, "field size exceeds table limit");
  }
}

// Iterates monic degree-m candidates in lexicographic order of (c_{m-1}, ..., c_0).
template <class Pred>
std::vector<std::uint32_t> least_monic(std::uint32_t p, unsigned m, Pred pred) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<std::uint32_t> f(m + 1, 0);
    std::uint64_t v = n;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (pred(f)) return f;
  }
  throw Error(ErrorCode::Internal, "no monic polynomial with the requested property");
}

}  // namespace

Field Field::create(std::uint32_t p, unsigned m, std::optional<std::vector<std::uint32_t>> modulus) {
  check_size(p, m);
  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1)
      throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
    for (auto c : mod)
      if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
    if (!detail::fp_is_irreducible(mod, p))
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  } else {
    mod = least_monic(p, m, [p](const auto& f) { return detail::fp_is_irreducible(f, p); });
  }
  return Field(make_impl(p, m, std::move(mod)));
}

Field Field::create_primitive(std::uint32_t p, unsigned m) {
  check_size(p, m);
  if (m == 1) return create(p, 1);
  auto mod = least_monic(p, m, [p](const auto& f) { return detail::fp_is_primitive(f, p); });
  return Field(make_impl(p, m, std::move(mod)));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
unsigned Field::degree() const noexcept { return impl_->m; }
std::uint64_t Field::size() const noexcept { return impl_->q; }
std::span<const std::uint32_t> Field::modulus() const noexcept { return impl_->modulus; }

Fq Field::from_int(std::int64_t n) const noexcept {
  const std::int64_t p = impl_->p;
  return {static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Fq Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  const auto& I = *impl_;
  std::vector<std::uint32_t> d(std::max<std::size_t>(coeffs.size(), I.m), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % I.p;
  for (std::size_t k = d.size(); k-- > I.m;) {
    const std::uint64_t c = d[k];
    if (c == 0) continue;
    d[k] = 0;
    for (unsigned i = 0; i < I.m; ++i)
      d[k - I.m + i] = static_cast<std::uint32_t>((d[k - I.m + i] + (I.p - c) * I.modulus[i]) % I.p);
  }
  d.resize(I.m);
  return {I.encode(d)};
}

std::vector<std::uint32_t> Field::coefficients(Fq a) const { return impl_->digits(a.v); }

Fq Field::element(std::uint64_t index) const {
  if (index >= impl_->q) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  return {static_cast<std::uint32_t>(index)};
}

Fq Field::add(Fq a, Fq b) const noexcept {
  const auto& I = *impl_;
  if (I.p == 2) return {a.v ^ b.v};
  if (I.m == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.v} + b.v) % I.p)};
  if (a.v == 0) return b;
  if (b.v == 0) return a;
  const std::uint64_t order = I.q - 1;
  const std::uint64_t la = I.log[a.v], lb = I.log[b.v];
  const std::uint64_t k = (lb + order - la) % order;
  const std::uint32_t z = I.zech[k];
  if (z == Impl::kNone) return {0};
  return {I.exp[la + z]};
}

Fq Field::neg(Fq a) const noexcept {
  const auto& I = *impl_;
  if (I.p == 2 || a.v == 0) return a;
  if (I.m == 1) return {I.p - a.v};
  // -1 = g^{(q-1)/2} in odd characteristic
  return {I.exp[I.log[a.v] + (I.q - 1) / 2]};
}

Fq Field::sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }

Fq Field::mul(Fq a, Fq b) const noexcept {
  if (a.v == 0 || b.v == 0) return {0};
  const auto& I = *impl_;
  return {I.exp[std::uint64_t{I.log[a.v]} + I.log[b.v]]};
}

Fq Field::inv(Fq a) const {
  if (a.v == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  const auto& I = *impl_;
  const std::uint64_t order = I.q - 1;
  return {I.exp[(order - I.log[a.v]) % order]};
}

Fq Field::div(Fq a, Fq b) const { return mul(a, inv(b)); }

Fq Field::pow(Fq a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  const auto& I = *impl_;
  const std::uint64_t order = I.q - 1;
  const unsigned __int128 k = static_cast<unsigned __int128>(I.log[a.v]) * (e % order);
  return {I.exp[static_cast<std::uint64_t>(k % order)]};
}

Fq Field::frobenius(Fq a) const noexcept { return pow(a, impl_->p); }

std::uint32_t Field::trace(Fq a) const noexcept {
  const auto& I = *impl_;
  std::uint64_t acc = 0;
  std::uint32_t v = a.v;
  for (unsigned i = 0; i < I.m; ++i) {
    acc += std::uint64_t{v % I.p} * I.basis_trace[i];
    v /= I.p;
  }
  return static_cast<std::uint32_t>(acc % I.p);
}

bool Field::is_square(Fq a) const noexcept {
  if (a.v == 0 || impl_->p == 2) return true;
  return impl_->log[a.v] % 2 == 0;
}

std::optional<Fq> Field::sqrt(Fq a) const noexcept {
  if (a.v == 0) return zero();
  const auto& I = *impl_;
  const std::uint64_t order = I.q - 1;
  const std::uint64_t la = I.log[a.v];
  if (I.p == 2) {
    // order is odd; halve the log modulo order
    const std::uint64_t half = la % 2 == 0 ? la / 2 : (la + order) / 2;
    return Fq{I.exp[half]};
  }
  if (la % 2 != 0) return std::nullopt;
  return Fq{I.exp[la / 2]};
}

std::uint64_t Field::log(Fq a) const {
  if (a.v == 0) throw Error(ErrorCode::InvalidArgument, "log of zero");
  return impl_->log[a.v];
}

Fq Field::exp(std::uint64_t k) const noexcept { return {impl_->exp[k % (impl_->q - 1)]}; }

Fq Field::generator() const noexcept { return {impl_->generator}; }

std::string Field::to_string(Fq a) const {
  const auto d = coefficients(a);
  if (impl_->m == 1) return std::to_string(d[0]);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ']';
  return os.str();
}

bool Field::operator==(const Field& other) const noexcept {
  return impl_ == other.impl_ || (impl_->p == other.impl_->p && impl_->modulus == other.impl_->modulus);
}

}  // namespace curveclass::gf
