#include "serialize.hpp"

#include <sstream>

#include "errors.hpp"

namespace curveclass::io {

namespace {

std::string rational(const zeta::Rational& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string("missing field: ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad value for field: ") + key);
  }
}

gf::Fq element_from_json(const gf::Field& F, const Json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
  if (j.is_array()) {
    std::vector<std::uint32_t> digits;
    for (const auto& d : j) {
      if (!d.is_number_integer()) throw Error(ErrorCode::InvalidArgument, "field element digits must be integers");
      const auto v = d.get<std::int64_t>();
      const auto p = static_cast<std::int64_t>(F.characteristic());
      digits.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
    }
    return F.from_coefficients(digits);
  }
  throw Error(ErrorCode::InvalidArgument, "field elements are integers or digit lists");
}

gf::Poly poly_from_json(const gf::Field& F, const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "polynomials are coefficient lists");
  std::vector<gf::Fq> c;
  for (const auto& e : j) c.push_back(element_from_json(F, e));
  return gf::Poly(F, std::move(c));
}

Json optional_json(const auto& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json field_element(const gf::Field& F, gf::Fq a) {
  if (F.degree() == 1) return a.v;
  return F.coefficients(a);
}

Json poly_json(const gf::Poly& f) {
  Json out = Json::array();
  for (auto c : f.coefficients()) out.push_back(field_element(f.field(), c));
  return out;
}

curve::Curve curve_from_json(const Json& j) {
  const Json& field = j.contains("field") ? j.at("field") : Json();
  const auto p = get<std::int64_t>(field, "p");
  const auto m = field.contains("m") ? get<std::int64_t>(field, "m") : 1;
  if (p < 2 || p > 0xffffffffLL) throw Error(ErrorCode::NonPrimeCharacteristic, "p out of range");
  if (m < 1 || m > 64) throw Error(ErrorCode::InvalidArgument, "m out of range");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (field.contains("modulus") && !field.at("modulus").is_null()) {
    std::vector<std::uint32_t> mod;
    for (auto v : get<std::vector<std::int64_t>>(field, "modulus"))
      mod.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
    modulus = std::move(mod);
  }
  const auto F = gf::Field::create(static_cast<std::uint32_t>(p), static_cast<unsigned>(m), modulus);
  const Json& model = j.contains("model") ? j.at("model") : Json();
  const auto kind = get<std::string>(model, "kind");
  if (kind == "projective_line") return curve::validate(curve::CurveModel::projective_line(F));
  if (kind != "double_cover") throw Error(ErrorCode::InvalidArgument, "unknown model kind: " + kind);
  const gf::Poly f = poly_from_json(F, model.at("f"));
  const gf::Poly h = model.contains("h") ? poly_from_json(F, model.at("h")) : gf::Poly(F);
  return curve::validate(curve::CurveModel::double_cover(f, h));
}

curve::Curve parse_curve(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("invalid JSON: ") + e.what());
  }
  return curve_from_json(j);
}

Json curve_summary(const curve::Curve& c) {
  const auto& m = c.model();
  Json out;
  out["kind"] = m.kind == curve::ModelKind::ProjectiveLine ? "projective_line" : "double_cover";
  out["p"] = c.characteristic();
  out["m"] = c.base().degree();
  out["q"] = c.q();
  out["modulus"] = std::vector<std::uint32_t>(c.base().modulus().begin(), c.base().modulus().end());
  out["genus"] = c.genus();
  if (m.kind == curve::ModelKind::DoubleCover) {
    out["f"] = poly_json(m.f);
    out["h"] = poly_json(m.h);
  }
  Json inf = Json::array();
  for (const auto& pt : c.points_at_infinity())
    inf.push_back(Json{{"id", pt.id}, {"degree", pt.degree}, {"kind", curve::point_kind_name(pt.kind)}});
  out["points_at_infinity"] = inf;
  return out;
}

Json points(const curve::Curve& c, unsigned max_degree, const Budget& budget) {
  Json list = Json::array();
  for (const auto& pt : curve::closed_points(c, max_degree, budget)) {
    Json e;
    e["id"] = pt.id;
    e["degree"] = pt.degree;
    e["kind"] = curve::point_kind_name(pt.kind);
    e["at_infinity"] = pt.at_infinity;
    e["pi"] = pt.pi ? poly_json(*pt.pi) : Json(nullptr);
    e["y"] = pt.y ? poly_json(*pt.y) : Json(nullptr);
    list.push_back(std::move(e));
  }
  return Json{{"max_degree", max_degree}, {"points", list}};
}

Json zeta_report(const curve::Curve& c, std::uint32_t p, const Budget& budget) {
  const auto L = zeta::l_polynomial(c, budget);
  Json out;
  out["q"] = c.q();
  out["genus"] = c.genus();
  out["L"] = L.coefficients;
  Json counts = Json::array();
  for (unsigned n = 1; n <= std::max(1u, c.genus()); ++n) counts.push_back(L.predicted_count(n));
  out["N"] = counts;
  const auto h = zeta::class_number(L);
  out["h"] = h;
  out["functional_equation"] = L.satisfies_functional_equation();
  out["weil_bounds"] = L.satisfies_weil_bounds();
  if (p != 0) {
    out["p"] = p;
    out["pic_p_nontrivial"] = h % p == 0;
  }
  return out;
}

Json ihara(const zeta::IharaReport& r) {
  Json out;
  out["a"] = rational(r.value.a);
  out["b"] = rational(r.value.b);
  out["q"] = r.value.q;
  out["approx"] = r.value.approx();
  out["threshold"] = r.threshold;
  out["g_minus_1"] = r.g_minus_1;
  out["exceeds"] = r.exceeds;
  return out;
}

Json structure(const picard::AbelianGroupStructure& s) {
  return Json{{"invariant_factors", s.invariant_factors}, {"order", s.order}};
}

Json oracle_report(const curve::Curve& c, std::uint32_t p, const Budget& budget) {
  const auto s = picard::jacobian_group(c, budget);
  Json out = structure(s);
  if (p != 0) {
    out["p"] = p;
    out["p_torsion_dim"] = picard::p_torsion_dim(s, p);
  }
  return out;
}

Json report(const classify::MarkedInstance& in, const classify::Report& r) {
  Json out;
  out["verdict"] = classify::verdict_name(r.verdict);
  out["case"] = r.case_number;
  out["case_tag"] = r.case_tag;
  out["justification"] = r.justification;
  out["cd_bound"] = r.cd_bound;
  out["pi1_description"] = r.pi1_description;
  out["r"] = optional_json(r.r);
  out["p"] = in.p;
  out["S"] = in.S;
  out["T"] = in.T;
  Json inv;
  inv["q"] = r.invariants.q;
  inv["g"] = r.invariants.g;
  inv["h"] = optional_json(r.invariants.h);
  inv["pic_p_nontrivial"] = optional_json(r.invariants.pic_p_nontrivial);
  inv["ihara"] = r.invariants.ihara ? ihara(*r.invariants.ihara) : Json(nullptr);
  inv["mu_p"] = optional_json(r.invariants.mu_p);
  inv["s"] = r.invariants.s ? Json(*r.invariants.s) : Json("unknown");
  out["invariants"] = inv;
  if (r.euler) {
    const auto& e = *r.euler;
    out["euler"] = Json{{"s", e.s},   {"t", e.t},           {"h1", e.h1},
                        {"rho", e.rho}, {"h2", e.h2}, {"chi_ok", e.chi_ok}, {"rho_in_range", e.rho_in_range}};
  } else {
    out["euler"] = nullptr;
  }
  out["note"] = r.note;
  return out;
}

gmodule::GModule parse_gmodule(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("invalid JSON: ") + e.what());
  }
  const auto rank = get<std::int64_t>(j, "rank");
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  const auto gens = get<std::vector<gmodule::Matrix>>(j, "generators");
  const auto label = j.contains("label") ? get<std::string>(j, "label") : std::string();
  return gmodule::make_module(static_cast<std::size_t>(rank), gens, label);
}

Json lemma51_line(const gmodule::GModule& m, std::uint32_t p) {
  const auto r = gmodule::lemma51_check(m, p);
  Json out;
  out["label"] = m.label;
  out["p"] = p;
  out["lhs"] = r.lhs;
  out["rhs"] = r.rhs;
  out["equal"] = r.equal;
  out["group_order"] = m.group_order();
  out["p_divides_order"] = r.p_divides_order;
  return out;
}

}  // namespace curveclass::io
