#pragma once

#include <optional>
#include <stdexcept>

namespace jmkit {

// Raised when a requested size exceeds the configured limit. The limit keeps
// exhaustive sweeps and table builds at desk scale; partition counts grow
// quickly past it.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default limit is 14; the JMKIT_GUARD_N environment variable overrides it.
int default_guard();

// Throws GuardExceeded when n exceeds the limit (the override, when given,
// takes precedence over the environment).
void check_guard(int n, std::optional<int> override_limit = std::nullopt);

}  // namespace jmkit
