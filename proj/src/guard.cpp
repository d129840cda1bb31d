#include "jmkit/guard.hpp"

#include <cstdlib>
#include <string>

namespace jmkit {

int default_guard() {
  if (const char* env = std::getenv("JMKIT_GUARD_N")) {
    try {
      int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
      // fall through to the built-in default on garbage
    }
  }
  return 14;
}

void check_guard(int n, std::optional<int> override_limit) {
  int limit = override_limit.value_or(default_guard());
  if (n > limit)
    throw GuardExceeded("n = " + std::to_string(n) + " exceeds the configured guard " +
                        std::to_string(limit));
}

}  // namespace jmkit
