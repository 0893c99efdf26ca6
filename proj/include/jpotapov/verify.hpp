#pragma once

#include <cstdint>
#include <ostream>

namespace jp {

/// Runs the cross-module identity suite on `count` seeded random instances and
/// prints one line per check. Returns false as soon as any check fails.
bool run_verification(std::uint64_t seed, int count, std::ostream& out);

}  // namespace jp
