#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "classifier.hpp"
#include "curve.hpp"
#include "gmodule.hpp"
#include "ihara.hpp"
#include "picard.hpp"
#include "zeta.hpp"

namespace curveclass::io {

using Json = nlohmann::ordered_json;

/// {"field":{"p":..,"m":..,"modulus":[..]?},"model":{"kind":..,"f":[..],"h":[..]}}
/// Coefficients are integers, or lists of F_p digits when m > 1.
curve::Curve parse_curve(const std::string& text);
curve::Curve curve_from_json(const Json& j);

Json field_element(const gf::Field& F, gf::Fq a);
Json poly_json(const gf::Poly& f);

Json curve_summary(const curve::Curve& c);
Json points(const curve::Curve& c, unsigned max_degree, const Budget& budget);
Json zeta_report(const curve::Curve& c, std::uint32_t p, const Budget& budget);  // p = 0: none
Json ihara(const zeta::IharaReport& r);
Json structure(const picard::AbelianGroupStructure& s);
Json oracle_report(const curve::Curve& c, std::uint32_t p, const Budget& budget);
Json report(const classify::MarkedInstance& in, const classify::Report& r);

/// {"rank":m,"generators":[...],"label":..}
gmodule::GModule parse_gmodule(const std::string& text);
/// {label, p, lhs, rhs, equal, group_order}
Json lemma51_line(const gmodule::GModule& m, std::uint32_t p);

}  // namespace curveclass::io
