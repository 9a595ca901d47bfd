#include "budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace curveclass {

Budget Budget::from_environment() {
  Budget b;
  const char* env = std::getenv("CURVECLASS_BUDGET");
  if (env == nullptr) return b;
  std::uint64_t v = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec == std::errc{} && ptr == end && v > 0) b.enumeration_cap = v;
  return b;
}

}  // namespace curveclass
