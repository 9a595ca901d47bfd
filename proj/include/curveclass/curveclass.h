#ifndef CURVECLASS_CURVECLASS_H
#define CURVECLASS_CURVECLASS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CC_API __declspec(dllexport)
#else
#define CC_API __attribute__((visibility("default")))
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_INVALID_ARGUMENT = 1,
  CC_NON_PRIME_CHARACTERISTIC = 2,
  CC_REDUCIBLE_MODULUS = 3,
  CC_ZERO_POLYNOMIAL = 4,
  CC_SINGULAR_MODEL = 5,
  CC_GEOMETRICALLY_REDUCIBLE = 6,
  CC_UNSUPPORTED_MODEL = 7,
  CC_BUDGET_EXCEEDED = 8,
  CC_ORACLE_UNSUPPORTED_MODEL = 9,
  CC_UNSUPPORTED_CASE = 10,
  CC_CHARACTERISTIC_CLASH = 11,
  CC_INCONSISTENT_INPUT = 12,
  CC_NOT_FINITE = 13,
  CC_NOT_INVERTIBLE = 14,
  CC_UNKNOWN_POINT = 15,
  CC_INTERNAL = 16
} cc_status;

typedef struct cc_curve cc_curve;
typedef struct cc_gmodule cc_gmodule;

/* Stable name of a status code, e.g. "SingularModel". */
CC_API const char* cc_status_name(cc_status status);

/* Message of the last failed call on this thread ("" if none). */
CC_API const char* cc_last_error(void);

/* Strings returned through char** out parameters are owned by the caller. */
CC_API void cc_string_free(char* s);

/* Every computation reads CURVECLASS_BUDGET for the enumeration cap. */

CC_API cc_status cc_curve_load_json(const char* json, cc_curve** out);
CC_API void cc_curve_free(cc_curve* curve);

CC_API cc_status cc_curve_summary_json(const cc_curve* curve, char** out);
CC_API cc_status cc_points_json(const cc_curve* curve, unsigned max_degree, char** out);
/* p = 0 leaves out the Pic[p] test. */
CC_API cc_status cc_zeta_json(const cc_curve* curve, uint32_t p, char** out);
CC_API cc_status cc_oracle_json(const cc_curve* curve, uint32_t p, char** out);
CC_API cc_status cc_classify_json(const cc_curve* curve, uint32_t p, const char* const* S, size_t n_s,
                                  const char* const* T, size_t n_t, char** out);

/* Exact Ihara sum for the given point degrees. */
CC_API cc_status cc_ihara_json(const unsigned* degrees, size_t n, uint64_t q, unsigned genus, char** out);

CC_API cc_status cc_gmodule_load_json(const char* json, cc_gmodule** out);
CC_API cc_status cc_gmodule_random(uint64_t seed, uint64_t index, cc_gmodule** out);
CC_API void cc_gmodule_free(cc_gmodule* module);
/* One harness record: {label, p, lhs, rhs, equal, group_order, p_divides_order}. */
CC_API cc_status cc_gmodule_check_json(const cc_gmodule* module, uint32_t p, char** out);

#ifdef __cplusplus
}
#endif

#endif
