#include "curveclass/curveclass.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "core/galois_field.hpp"
#include "core/serialize.hpp"

struct cc_curve {
  curveclass::curve::Curve curve;
};

struct cc_gmodule {
  curveclass::gmodule::GModule module;
};

namespace {

using curveclass::Error;
using curveclass::ErrorCode;

thread_local std::string g_last_error;

cc_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CC_INVALID_ARGUMENT;
    case ErrorCode::NonPrimeCharacteristic: return CC_NON_PRIME_CHARACTERISTIC;
    case ErrorCode::ReducibleModulus: return CC_REDUCIBLE_MODULUS;
    case ErrorCode::ZeroPolynomial: return CC_ZERO_POLYNOMIAL;
    case ErrorCode::SingularModel: return CC_SINGULAR_MODEL;
    case ErrorCode::GeometricallyReducible: return CC_GEOMETRICALLY_REDUCIBLE;
    case ErrorCode::UnsupportedModel: return CC_UNSUPPORTED_MODEL;
    case ErrorCode::BudgetExceeded: return CC_BUDGET_EXCEEDED;
    case ErrorCode::OracleUnsupportedModel: return CC_ORACLE_UNSUPPORTED_MODEL;
    case ErrorCode::UnsupportedCase: return CC_UNSUPPORTED_CASE;
    case ErrorCode::CharacteristicClash: return CC_CHARACTERISTIC_CLASH;
    case ErrorCode::InconsistentInput: return CC_INCONSISTENT_INPUT;
    case ErrorCode::NotFinite: return CC_NOT_FINITE;
    case ErrorCode::NotInvertible: return CC_NOT_INVERTIBLE;
    case ErrorCode::UnknownPoint: return CC_UNKNOWN_POINT;
    case ErrorCode::Internal: return CC_INTERNAL;
  }
  return CC_INTERNAL;
}

template <class Fn>
cc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CC_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CC_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

template <class Fn>
cc_status emit(char** out, Fn&& fn) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    *out = dup(fn().dump());
  });
}

std::vector<std::string> ids(const char* const* xs, std::size_t n) {
  std::vector<std::string> out;
  if (n) need(xs, "id list");
  for (std::size_t i = 0; i < n; ++i) {
    need(xs[i], "id");
    out.emplace_back(xs[i]);
  }
  return out;
}

}  // namespace

extern "C" {

const char* cc_status_name(cc_status status) {
  switch (status) {
    case CC_OK: return "Ok";
    case CC_INTERNAL: return "Internal";
    default: break;
  }
  if (status > CC_OK && status < CC_INTERNAL)
    return curveclass::error_code_name(static_cast<ErrorCode>(static_cast<int>(status) - 1));
  return "Unknown";
}

const char* cc_last_error(void) { return g_last_error.c_str(); }

void cc_string_free(char* s) { std::free(s); }

cc_status cc_curve_load_json(const char* json, cc_curve** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = nullptr;
    *out = new cc_curve{curveclass::io::parse_curve(json)};
  });
}

void cc_curve_free(cc_curve* curve) { delete curve; }

cc_status cc_curve_summary_json(const cc_curve* c, char** out) {
  return emit(out, [&] {
    need(c, "curve");
    return curveclass::io::curve_summary(c->curve);
  });
}

cc_status cc_points_json(const cc_curve* c, unsigned max_degree, char** out) {
  return emit(out, [&] {
    need(c, "curve");
    if (max_degree == 0) throw Error(ErrorCode::InvalidArgument, "max degree must be at least 1");
    return curveclass::io::points(c->curve, max_degree, curveclass::Budget::from_environment());
  });
}

cc_status cc_zeta_json(const cc_curve* c, uint32_t p, char** out) {
  return emit(out, [&] {
    need(c, "curve");
    return curveclass::io::zeta_report(c->curve, p, curveclass::Budget::from_environment());
  });
}

cc_status cc_oracle_json(const cc_curve* c, uint32_t p, char** out) {
  return emit(out, [&] {
    need(c, "curve");
    return curveclass::io::oracle_report(c->curve, p, curveclass::Budget::from_environment());
  });
}

cc_status cc_classify_json(const cc_curve* c, uint32_t p, const char* const* S, size_t n_s, const char* const* T,
                           size_t n_t, char** out) {
  return emit(out, [&] {
    need(c, "curve");
    curveclass::classify::MarkedInstance in{c->curve, ids(S, n_s), ids(T, n_t), p};
    const auto r = curveclass::classify::classify(in, curveclass::Budget::from_environment());
    return curveclass::io::report(in, r);
  });
}

cc_status cc_ihara_json(const unsigned* degrees, size_t n, uint64_t q, unsigned genus, char** out) {
  return emit(out, [&] {
    if (n) need(degrees, "degrees");
    const std::vector<unsigned> d(degrees, degrees + n);
    return curveclass::io::ihara(curveclass::zeta::ihara_sum_exceeds(std::span<const unsigned>(d), q, genus));
  });
}

cc_status cc_gmodule_load_json(const char* json, cc_gmodule** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = nullptr;
    *out = new cc_gmodule{curveclass::io::parse_gmodule(json)};
  });
}

cc_status cc_gmodule_random(uint64_t seed, uint64_t index, cc_gmodule** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    *out = new cc_gmodule{curveclass::gmodule::random_module(seed, index)};
  });
}

void cc_gmodule_free(cc_gmodule* module) { delete module; }

cc_status cc_gmodule_check_json(const cc_gmodule* m, uint32_t p, char** out) {
  return emit(out, [&] {
    need(m, "module");
    if (!curveclass::gf::is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
    return curveclass::io::lemma51_line(m->module, p);
  });
}

}  // extern "C"
