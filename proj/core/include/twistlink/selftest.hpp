#pragma once

#include <cstdint>
#include <ostream>

namespace twistlink {

struct SelftestOptions {
  std::uint64_t seed = 7;
  int count = 100;  // cases per property
};

/// Runs the randomized property suite (generator validity, mirror and
/// round-trip identities, ring axioms, determinant cross-check, covering
/// identity, move invariance, bar-witness equality). Prints one line per
/// property to `out` and returns the number of failing properties.
int run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace twistlink
