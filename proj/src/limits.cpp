#include "premon/limits.hpp"

#include <cstdlib>
#include <string>

namespace premon {
namespace limits {

std::size_t env_cap(const char* env_name, std::size_t fallback) {
  const char* v = std::getenv(env_name);
  if (v == nullptr || *v == '\0') {
    return fallback;
  }
  try {
    long long parsed = std::stoll(v);
    if (parsed <= 0) {
      return fallback;
    }
    return static_cast<std::size_t>(parsed);
  } catch (...) {
    return fallback;
  }
}

std::size_t tn_points() { return env_cap("PREMON_MAX_TN_POINTS", 8); }

std::size_t power_base() { return env_cap("PREMON_MAX_POWER_BASE", 6); }

std::size_t preorder_carrier() {
  return env_cap("PREMON_MAX_PREORDER_CARRIER", 8192);
}

std::size_t rfix_carrier() { return env_cap("PREMON_MAX_RFIX_CARRIER", 1024); }

std::size_t divisibility_carrier() {
  return env_cap("PREMON_MAX_DIV_CARRIER", 512);
}

std::size_t cubic_scan_carrier() {
  return env_cap("PREMON_MAX_CUBIC_CARRIER", 512);
}

std::size_t bfs_states() { return env_cap("PREMON_MAX_BFS_STATES", 200000); }

std::size_t degree3_carrier() {
  return env_cap("PREMON_MAX_DEGREE3_CARRIER", 1024);
}

}  // namespace limits
}  // namespace premon
