#include "curve.hpp"

#include <algorithm>
#include <charconv>

#include "errors.hpp"
#include "extension.hpp"

namespace curveclass::curve {

using gf::Field;
using gf::Fq;
using gf::Poly;

CurveModel CurveModel::projective_line(const Field& base) {
  return CurveModel{ModelKind::ProjectiveLine, base, Poly(base), Poly(base)};
}

CurveModel CurveModel::double_cover(Poly f, Poly h) {
  if (!(f.field() == h.field()))
    throw Error(ErrorCode::InvalidArgument, "f and h must be defined over the same field");
  Field base = f.field();
  return CurveModel{ModelKind::DoubleCover, std::move(base), std::move(f), std::move(h)};
}

const char* point_kind_name(PointKind kind) noexcept {
  switch (kind) {
    case PointKind::Line: return "line";
    case PointKind::Split: return "split";
    case PointKind::Ramified: return "ramified";
    case PointKind::Inert: return "inert";
  }
  return "?";
}

bool Curve::is_imaginary() const noexcept {
  if (model_.kind != ModelKind::DoubleCover) return false;
  return characteristic() == 2 || *model_.f.degree() % 2 == 1;
}

namespace {

std::uint64_t checked_power(std::uint64_t q, unsigned n, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > cap / q) throw Error(ErrorCode::BudgetExceeded, "q^" + std::to_string(n) + " exceeds the enumeration budget of " + std::to_string(cap));
    r *= q;
  }
  return r;
}

ClosedPoint infinity_point(unsigned degree, unsigned slot, PointKind kind) {
  ClosedPoint pt;
  pt.id = "d" + std::to_string(degree) + "#inf" + std::to_string(slot);
  pt.degree = degree;
  pt.kind = kind;
  pt.at_infinity = true;
  pt.infinity_slot = slot;
  return pt;
}

}  // namespace

Curve validate(const CurveModel& model) {
  Curve c(model);
  const Field& F = model.base;
  if (model.kind == ModelKind::ProjectiveLine) {
    c.genus_ = 0;
    c.infinity_.push_back(infinity_point(1, 0, PointKind::Line));
    return c;
  }
  if (!(model.f.field() == F) || !(model.h.field() == F))
    throw Error(ErrorCode::InvalidArgument, "model polynomials are not over the base field");
  const Poly& f = model.f;
  const Poly& h = model.h;
  if (F.characteristic() != 2) {
    if (!h.is_zero())
      throw Error(ErrorCode::UnsupportedModel, "odd characteristic models must have h = 0 (complete the square first)");
    if (f.is_zero()) throw Error(ErrorCode::SingularModel, "y^2 = 0 is singular");
    if (*f.degree() == 0) throw Error(ErrorCode::GeometricallyReducible, "y^2 = c splits over the algebraic closure");
    if (!gf::gcd(f, f.derivative()).is_one())
      throw Error(ErrorCode::SingularModel, "f is not squarefree: gcd(f, f') = " + gf::gcd(f, f.derivative()).to_string());
    const std::size_t d = *f.degree();
    c.genus_ = static_cast<unsigned>((d - 1) / 2);
    if (d % 2 == 1) {
      c.infinity_.push_back(infinity_point(1, 0, PointKind::Ramified));
    } else if (F.is_square(f.leading())) {
      c.infinity_.push_back(infinity_point(1, 0, PointKind::Split));
      c.infinity_.push_back(infinity_point(1, 1, PointKind::Split));
    } else {
      c.infinity_.push_back(infinity_point(2, 0, PointKind::Inert));
    }
    return c;
  }
  // characteristic 2
  if (h.is_zero())
    throw Error(ErrorCode::GeometricallyReducible, "y^2 = f is purely inseparable over F(x) in characteristic 2");
  if (f.is_zero() || *f.degree() % 2 == 0)
    throw Error(ErrorCode::UnsupportedModel, "characteristic 2 requires deg f odd (imaginary model)");
  const std::size_t g = (*f.degree() - 1) / 2;
  if (*h.degree() > g)
    throw Error(ErrorCode::UnsupportedModel, "characteristic 2 requires deg h <= (deg f - 1)/2");
  // Affine singular points satisfy h(x) = 0, h'(x) y = f'(x), y^2 = f(x);
  // eliminating y leaves the common roots of h and h'^2 f + f'^2.
  const Poly hd = h.derivative(), fd = f.derivative();
  const Poly disc = hd * hd * f + fd * fd;
  if (!gf::gcd(h, disc).is_one())
    throw Error(ErrorCode::SingularModel, "affine model is singular above a root of h");
  c.genus_ = static_cast<unsigned>(g);
  c.infinity_.push_back(infinity_point(1, 0, PointKind::Ramified));
  return c;
}

std::uint64_t count_points(const Curve& curve, unsigned n, const Budget& budget) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  const std::uint64_t q = curve.q();
  const auto& model = curve.model();
  if (model.kind == ModelKind::ProjectiveLine) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < n; ++i) r *= q;
    return r + 1;
  }
  const std::uint64_t Q = checked_power(q, n, budget.enumeration_cap);
  const gf::Extension ext(curve.base(), n);
  const Field& E = ext.big();
  const auto f = ext.embed(model.f);
  const auto h = ext.embed(model.h);
  std::uint64_t affine = 0;
  if (curve.characteristic() != 2) {
    for (std::uint64_t i = 0; i < Q; ++i) {
      const Fq v = gf::Extension::eval_embedded(E, f, Fq{static_cast<std::uint32_t>(i)});
      affine += v.v == 0 ? 1 : (E.is_square(v) ? 2 : 0);
    }
  } else {
    for (std::uint64_t i = 0; i < Q; ++i) {
      const Fq x{static_cast<std::uint32_t>(i)};
      const Fq hv = gf::Extension::eval_embedded(E, h, x);
      if (hv.v == 0) {
        affine += 1;
        continue;
      }
      // y = h z turns the equation into z^2 + z = f / h^2
      const Fq c = E.div(gf::Extension::eval_embedded(E, f, x), E.mul(hv, hv));
      affine += E.trace(c) == 0 ? 2 : 0;
    }
  }
  std::uint64_t at_infinity = 0;
  for (const auto& pt : curve.points_at_infinity())
    if (n % pt.degree == 0) at_infinity += pt.degree;
  return affine + at_infinity;
}

namespace {

// Arithmetic in F_q[x]/(pi) for a monic irreducible pi.
class ResidueField {
 public:
  explicit ResidueField(Poly pi) : pi_(std::move(pi)) {
    const Field& F = pi_.field();
    order_ = 1;
    for (std::size_t i = 0; i < *pi_.degree(); ++i) order_ *= F.size();
  }

  const Field& base() const { return pi_.field(); }
  std::uint64_t order() const { return order_; }
  Poly reduce(const Poly& a) const { return a % pi_; }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % pi_; }
  Poly pow(const Poly& a, std::uint64_t e) const { return gf::powmod(a, e, pi_); }
  Poly inv(const Poly& a) const { return gf::invmod(a, pi_); }
  Poly one() const { return Poly::constant(base(), base().one()); }

  // Elements in index order: base-q digits are the coefficients.
  Poly element(std::uint64_t index) const {
    const Field& F = base();
    std::vector<Fq> c;
    while (index) {
      c.push_back(Fq{static_cast<std::uint32_t>(index % F.size())});
      index /= F.size();
    }
    return Poly(F, std::move(c));
  }

  bool is_square(const Poly& a) const {
    if (a.is_zero()) return true;
    return pow(a, (order_ - 1) / 2).is_one();
  }

  // Tonelli-Shanks; a must be a nonzero square and the characteristic odd.
  Poly sqrt(const Poly& a) const {
    std::uint64_t t = order_ - 1;
    unsigned s = 0;
    while (t % 2 == 0) {
      t /= 2;
      ++s;
    }
    Poly z(base());
    for (std::uint64_t i = 2; i < order_; ++i) {
      z = element(i);
      if (!is_square(z)) break;
    }
    Poly c = pow(z, t);
    Poly x = pow(a, (t + 1) / 2);
    Poly b = pow(a, t);
    unsigned m = s;
    while (!b.is_one()) {
      unsigned k = 0;
      Poly b2 = b;
      while (!b2.is_one()) {
        b2 = mul(b2, b2);
        ++k;
      }
      Poly w = c;
      for (unsigned j = 0; j + k + 1 < m; ++j) w = mul(w, w);
      x = mul(x, w);
      c = mul(w, w);
      b = mul(b, c);
      m = k;
    }
    if (!(mul(x, x) == reduce(a))) throw Error(ErrorCode::Internal, "square root check failed");
    return x;
  }

  // Characteristic 2: absolute trace to F_2 of a.
  bool trace_is_zero(const Poly& a) const {
    const std::size_t k = bits();
    Poly acc = reduce(a), cur = reduce(a);
    for (std::size_t i = 1; i < k; ++i) {
      cur = mul(cur, cur);
      acc += cur;
    }
    return acc.is_zero();
  }

  // Characteristic 2: a root of z^2 + z = c, assuming Tr(c) = 0.
  Poly artin_schreier_root(const Poly& c) const {
    const std::size_t k = bits();
    Poly z(base());
    if (k % 2 == 1) {
      // half trace
      Poly cur = reduce(c);
      for (std::size_t i = 0; i <= (k - 1) / 2; ++i) {
        z += cur;
        cur = mul(mul(cur, cur), mul(cur, cur));
      }
    } else {
      Poly w(base());
      for (std::uint64_t i = 1; i < order_; ++i) {
        w = element(i);
        if (!trace_is_zero(w)) break;
      }
      std::vector<Poly> w_pow{w}, c_pow{reduce(c)};
      for (std::size_t i = 1; i < k; ++i) {
        w_pow.push_back(mul(w_pow.back(), w_pow.back()));
        c_pow.push_back(mul(c_pow.back(), c_pow.back()));
      }
      for (std::size_t i = 0; i + 1 < k; ++i) {
        Poly inner(base());
        for (std::size_t j = i + 1; j < k; ++j) inner += w_pow[j];
        z += mul(inner, c_pow[i]);
      }
    }
    if (!(mul(z, z) + z == reduce(c))) throw Error(ErrorCode::Internal, "Artin-Schreier root check failed");
    return z;
  }

 private:
  std::size_t bits() const { return std::size_t{base().degree()} * *pi_.degree(); }

  Poly pi_;
  std::uint64_t order_ = 1;
};

struct AffinePlace {
  PointKind kind;
  std::vector<Poly> ys;  // two entries for split places
};

AffinePlace classify_place(const Curve& curve, const Poly& pi) {
  const auto& model = curve.model();
  const ResidueField R(pi);
  if (curve.characteristic() != 2) {
    const Poly a = R.reduce(model.f);
    if (a.is_zero()) return {PointKind::Ramified, {}};
    if (!R.is_square(a)) return {PointKind::Inert, {}};
    Poly r = R.sqrt(a);
    Poly s = R.reduce(-r);
    if (s < r) std::swap(r, s);
    return {PointKind::Split, {r, s}};
  }
  const Poly hv = R.reduce(model.h);
  if (hv.is_zero()) return {PointKind::Ramified, {}};
  const Poly hinv = R.inv(hv);
  const Poly c = R.mul(R.reduce(model.f), R.mul(hinv, hinv));
  if (!R.trace_is_zero(c)) return {PointKind::Inert, {}};
  const Poly z = R.artin_schreier_root(c);
  Poly r = R.mul(hv, z);
  Poly s = R.reduce(r + hv);
  if (s < r) std::swap(r, s);
  return {PointKind::Split, {r, s}};
}

}  // namespace

std::vector<ClosedPoint> closed_points(const Curve& curve, unsigned max_degree, const Budget& budget) {
  if (max_degree == 0) throw Error(ErrorCode::InvalidArgument, "max_degree must be at least 1");
  const std::uint64_t q = curve.q();
  const bool line = curve.model().kind == ModelKind::ProjectiveLine;
  checked_power(q, max_degree, budget.enumeration_cap);

  std::vector<std::vector<ClosedPoint>> by_degree(max_degree + 1);
  for (unsigned e = 1; e <= max_degree; ++e) {
    for (const Poly& pi : gf::irreducibles(curve.base(), e)) {
      if (line) {
        ClosedPoint pt;
        pt.degree = e;
        pt.kind = PointKind::Line;
        pt.pi = pi;
        by_degree[e].push_back(std::move(pt));
        continue;
      }
      AffinePlace place = classify_place(curve, pi);
      if (place.kind == PointKind::Split) {
        for (auto& y : place.ys) {
          ClosedPoint pt;
          pt.degree = e;
          pt.kind = PointKind::Split;
          pt.pi = pi;
          pt.y = std::move(y);
          by_degree[e].push_back(std::move(pt));
        }
      } else {
        const unsigned d = place.kind == PointKind::Inert ? 2 * e : e;
        if (d > max_degree) continue;
        ClosedPoint pt;
        pt.degree = d;
        pt.kind = place.kind;
        pt.pi = pi;
        by_degree[d].push_back(std::move(pt));
      }
    }
  }
  std::vector<ClosedPoint> out;
  for (unsigned d = 1; d <= max_degree; ++d) {
    auto& pts = by_degree[d];
    std::stable_sort(pts.begin(), pts.end(), [](const ClosedPoint& a, const ClosedPoint& b) {
      if (auto c = *a.pi <=> *b.pi; c != 0) return c < 0;
      if (a.y && b.y) return *a.y < *b.y;
      return false;
    });
    for (std::size_t i = 0; i < pts.size(); ++i) {
      pts[i].id = "d" + std::to_string(d) + "#" + std::to_string(i);
      out.push_back(std::move(pts[i]));
    }
    for (const auto& inf : curve.points_at_infinity())
      if (inf.degree == d) out.push_back(inf);
  }
  return out;
}

std::optional<unsigned> degree_from_id(const std::string& id) {
  if (id.size() < 3 || id[0] != 'd') return std::nullopt;
  const auto hash = id.find('#');
  if (hash == std::string::npos || hash < 2 || hash + 1 == id.size()) return std::nullopt;
  unsigned d = 0;
  auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + hash, d);
  if (ec != std::errc{} || ptr != id.data() + hash || d == 0) return std::nullopt;
  return d;
}

}  // namespace curveclass::curve
