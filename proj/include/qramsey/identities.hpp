#pragma once

// Seeded randomized identity suites, all exact equality: semiring laws,
// the ratio/tilde identity, the commutator pair, normal-form composition,
// the family-shift identity, the composition evaluation law, and the
// homomorphism identity behind the shift engine.

#include <cstdint>
#include <string>
#include <vector>

namespace qramsey {

struct IdentitySuiteResult {
  std::string name;
  int cases = 0;
  int passes = 0;
  bool ok() const { return passes == cases; }
};

std::vector<IdentitySuiteResult> run_identity_suites(std::uint64_t seed, int cases);

}  // namespace qramsey
