#include "extension.hpp"

#include <algorithm>

#include "errors.hpp"

namespace curveclass::gf {

namespace {

Field make_big(const Field& base, unsigned n) {
  if (n == 1) return base;
  return Field::create_primitive(base.characteristic(), base.degree() * n);
}

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

Extension::Extension(const Field& base, unsigned n) : base_(base), big_(make_big(base, n)), n_(n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  const std::uint64_t q = base_.size();
  embedding_.resize(q);
  if (n == 1) {
    for (std::uint64_t i = 0; i < q; ++i) embedding_[i] = Fq{static_cast<std::uint32_t>(i)};
  } else {
    // Prime-field constants have the same index in every field of
    // characteristic p, so the modulus can be evaluated directly in big_.
    const auto mod = base_.modulus();
    std::optional<Fq> theta;
    if (base_.degree() == 1) {
      theta = big_.zero();
    } else {
      for (std::uint64_t i = 0; i < big_.size() && !theta; ++i) {
        const Fq a{static_cast<std::uint32_t>(i)};
        Fq acc{};
        for (std::size_t k = mod.size(); k-- > 0;) acc = big_.add(big_.mul(acc, a), Fq{mod[k]});
        if (acc.v == 0) theta = a;
      }
    }
    if (!theta) throw Error(ErrorCode::Internal, "modulus has no root in the extension");
    std::vector<Fq> theta_pow(base_.degree());
    theta_pow[0] = big_.one();
    for (unsigned i = 1; i < base_.degree(); ++i) theta_pow[i] = big_.mul(theta_pow[i - 1], *theta);
    for (std::uint64_t i = 0; i < q; ++i) {
      const auto digits = base_.coefficients(Fq{static_cast<std::uint32_t>(i)});
      Fq acc{};
      for (unsigned k = 0; k < digits.size(); ++k)
        acc = big_.add(acc, big_.mul(Fq{digits[k]}, theta_pow[k]));
      embedding_[i] = acc;
    }
  }
  for (std::uint64_t i = 0; i < q; ++i) preimage_.emplace(embedding_[i].v, static_cast<std::uint32_t>(i));
}

std::optional<Fq> Extension::restrict(Fq a) const {
  auto it = preimage_.find(a.v);
  if (it == preimage_.end()) return std::nullopt;
  return Fq{it->second};
}

Fq Extension::frobenius(Fq a) const noexcept { return big_.pow(a, base_.size()); }

std::vector<Fq> Extension::embed(const Poly& f) const {
  std::vector<Fq> out;
  out.reserve(f.size());
  for (auto c : f.coefficients()) out.push_back(embed(c));
  return out;
}

Fq Extension::eval_embedded(const Field& big, const std::vector<Fq>& coeffs, Fq x) noexcept {
  Fq acc{};
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = big.add(big.mul(acc, x), coeffs[i]);
  return acc;
}

Fq Extension::eval(const Poly& f, Fq x) const noexcept {
  Fq acc{};
  const auto c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = big_.add(big_.mul(acc, x), embed(c[i]));
  return acc;
}

std::uint64_t necklace_count(std::uint64_t q, unsigned d) {
  std::int64_t total = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    std::int64_t qe = 1;
    for (unsigned i = 0; i < e; ++i) qe *= static_cast<std::int64_t>(q);
    total += moebius(d / e) * qe;
  }
  return static_cast<std::uint64_t>(total / d);
}

std::vector<Poly> irreducibles(const Field& field, unsigned d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  const Extension ext(field, d);
  const Field& big = ext.big();
  std::vector<Poly> out;
  std::vector<bool> seen(big.size(), false);
  for (std::uint64_t i = 0; i < big.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Fq> orbit{Fq{static_cast<std::uint32_t>(i)}};
    seen[i] = true;
    for (Fq y = ext.frobenius(orbit[0]); y != orbit[0]; y = ext.frobenius(y)) {
      orbit.push_back(y);
      seen[y.v] = true;
    }
    if (orbit.size() != d) continue;
    // prod (X - a) over the orbit, coefficients in the big field
    std::vector<Fq> c{big.one()};
    for (Fq a : orbit) {
      std::vector<Fq> next(c.size() + 1, Fq{});
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k + 1] = big.add(next[k + 1], c[k]);
        next[k] = big.sub(next[k], big.mul(a, c[k]));
      }
      c = std::move(next);
    }
    std::vector<Fq> base_coeffs;
    for (Fq b : c) {
      auto r = ext.restrict(b);
      if (!r) throw Error(ErrorCode::Internal, "minimal polynomial not defined over the base field");
      base_coeffs.push_back(*r);
    }
    out.emplace_back(field, std::move(base_coeffs));
  }
  std::sort(out.begin(), out.end());
  if (out.size() != necklace_count(field.size(), d))
    throw Error(ErrorCode::Internal, "irreducible count disagrees with the necklace formula");
  return out;
}

}  // namespace curveclass::gf
