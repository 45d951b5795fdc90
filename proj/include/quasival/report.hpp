#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qv {

/// Outcome of one sampled law check; stable field names for machine use.
struct CheckReport {
  std::string check;
  std::string law;  // human-readable statement of the property checked
  std::uint64_t seed = 0;
  long pairs = 0;
  long violations = 0;
  std::string witness;  // first counterexample, empty when none

  bool pass() const { return violations == 0; }

  void count(bool ok, const std::string& w) {
    ++pairs;
    if (!ok) {
      ++violations;
      if (witness.empty()) witness = w;
    }
  }
};

}  // namespace qv
