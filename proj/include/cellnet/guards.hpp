#pragma once

// Size guards for exhaustive operations.  Each guarded operation has a
// documented default ceiling; setting the environment variable CELLNET_MAX_N
// to a positive integer raises (or lowers) every ceiling to that value.

#include <cstdlib>
#include <string>

#include "cellnet/errors.hpp"

namespace cellnet {

// Effective ceiling: CELLNET_MAX_N if set and positive, otherwise def.
inline int max_cells_guard(int def) {
  if (const char* env = std::getenv("CELLNET_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return def;
}

inline void require_cells_at_most(int n, int def, const char* what) {
  int lim = max_cells_guard(def);
  if (n > lim)
    throw SizeLimitExceeded(std::string(what) + " limited to n <= " +
                            std::to_string(lim) +
                            " (override with CELLNET_MAX_N); got n = " +
                            std::to_string(n));
}

}  // namespace cellnet
