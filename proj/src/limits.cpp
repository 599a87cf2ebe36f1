#include "monoalg/limits.hpp"

#include <cstdlib>

namespace monoalg {

std::size_t oracle_bound_from_env() {
  if (const char* raw = std::getenv("MONOALG_BOUND")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultOracleBound;
}

}  // namespace monoalg
