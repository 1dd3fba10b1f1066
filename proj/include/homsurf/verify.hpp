#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homsurf/actions.hpp"

namespace homsurf {

struct CheckResult {
  std::string name;
  int samples = 0;
  double max_error = 0.0;
  bool pass = true;
};

struct VerificationReport {
  std::string family;
  std::vector<CheckResult> checks;
  int samples = 0;
  double max_error = 0.0;
  bool pass = true;
};

// Property suite of one family; the RNG is seeded from seed and the family name.
VerificationReport verify_family(const FamilyId& family, int samples, std::uint64_t seed, double eps = kDefaultEps);

// One report per family with default parameters, in catalogue order. Families run concurrently.
std::vector<VerificationReport> verify_all(int samples, std::uint64_t seed, double eps = kDefaultEps);

}  // namespace homsurf
