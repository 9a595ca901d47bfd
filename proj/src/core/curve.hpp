#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "galois_field.hpp"
#include "poly.hpp"

namespace curveclass::curve {

enum class ModelKind { ProjectiveLine, DoubleCover };

/// Either P^1 or the smooth completion of y^2 + h(x) y = f(x).
struct CurveModel {
  ModelKind kind = ModelKind::ProjectiveLine;
  gf::Field base;
  gf::Poly f;
  gf::Poly h;

  static CurveModel projective_line(const gf::Field& base);
  static CurveModel double_cover(gf::Poly f, gf::Poly h);
};

/// How a place of the x-line behaves in the double cover. Points of P^1
/// carry Line.
enum class PointKind { Line, Split, Ramified, Inert };

const char* point_kind_name(PointKind kind) noexcept;

struct ClosedPoint {
  std::string id;  // "d2#0", "d1#inf0"
  unsigned degree = 0;
  PointKind kind = PointKind::Line;
  bool at_infinity = false;
  unsigned infinity_slot = 0;
  std::optional<gf::Poly> pi;  // monic irreducible x-polynomial (affine points)
  std::optional<gf::Poly> y;   // y modulo pi (split places only)

  friend bool operator==(const ClosedPoint&, const ClosedPoint&) = default;
};

/// A validated smooth projective geometrically irreducible curve.
class Curve {
 public:
  const CurveModel& model() const noexcept { return model_; }
  const gf::Field& base() const noexcept { return model_.base; }
  std::uint64_t q() const noexcept { return model_.base.size(); }
  std::uint32_t characteristic() const noexcept { return model_.base.characteristic(); }
  unsigned genus() const noexcept { return genus_; }
  const std::vector<ClosedPoint>& points_at_infinity() const noexcept { return infinity_; }

  /// Odd characteristic y^2 = f with deg f odd, or a characteristic-2 model
  /// (always imaginary here): exactly one rational point at infinity.
  bool is_imaginary() const noexcept;

 private:
  friend Curve validate(const CurveModel& model);
  explicit Curve(CurveModel model) : model_(std::move(model)) {}
  CurveModel model_;
  unsigned genus_ = 0;
  std::vector<ClosedPoint> infinity_;
};

/// Enforces smoothness and geometric irreducibility and computes the genus.
/// Odd characteristic requires h = 0 and f squarefree. Characteristic 2
/// accepts imaginary models deg f = 2g+1, deg h <= g, h != 0 that are smooth
/// on the affine chart; everything else there is UnsupportedModel.
Curve validate(const CurveModel& model);

/// #X(F_{q^n}) by direct enumeration of F_{q^n} (closed form for P^1).
std::uint64_t count_points(const Curve& curve, unsigned n, const Budget& budget = {});

/// All closed points of degree <= max_degree. Within a degree, affine points
/// come first ordered by (pi, y), then the points at infinity.
std::vector<ClosedPoint> closed_points(const Curve& curve, unsigned max_degree, const Budget& budget = {});

/// Degree encoded in an id of the form "d<k>#..."; nullopt if malformed.
std::optional<unsigned> degree_from_id(const std::string& id);

}  // namespace curveclass::curve
