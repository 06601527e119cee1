#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ulrich_lab/chern.hpp"
#include "ulrich_lab/picard.hpp"

namespace ulrich_lab::cli {

struct PropertyResult {
  std::string module;
  std::string name;
  long cases = 0;
  long failures = 0;
  /// Description of the first failing case, empty when all passed.
  std::string first_failure;
  double seconds = 0.0;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct CheckOptions {
  /// Randomized cases per property.
  long cases = 1000;
  std::uint64_t rng_seed = 0x5eed'c0de'2024ull;
  /// Seeds run through every trace property, in addition to the shipped ones.
  std::vector<BundleNumerics> extra_seeds;
  /// Largest k for the Chern-recursion comparisons.
  int k_oracle = 20;
};

std::vector<PropertyResult> run_property_checks(const CheckOptions& options);

/// Random rank-r Ulrich candidate on s: c1.H = rd and c2 from the Ulrich relation.
BundleNumerics random_ulrich_candidate(std::mt19937_64& rng, const DelPezzoSurface& s, int r);

}  // namespace ulrich_lab::cli
