#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "toric/catalog.hpp"

namespace toric {

struct VerificationRecord {
  int id = 0;
  std::string anchor;   // short label of the statement being reproduced
  bool pass = false;
  std::size_t checks = 0;
  std::string details;  // counts, and expected vs computed for the first failures
};

struct VerifyConfig {
  ProjectiveSpaceBounds projective{1, 6};
  BundleBounds bundles{2, 7, 2, 5, 3};
  Example41Bounds example41{3, 6, 1, 3};
  BatyrevBounds batyrev{2, 3, 3};
  /// Only fans up to this dimension enter the surface-formula check.
  int hirzebruch_max_d = 6;
  int principal_divisors = 25;
  int permutation_samples = 50;
  int unimodular_transforms = 5;
  std::uint64_t seed = 0x70f1c;
  unsigned workers = 1;
};

/// Runs every reproduction check over the configured grids. Records come back
/// ordered by id; the optional callback is told each family as it starts.
std::vector<VerificationRecord> verify_paper(
    const VerifyConfig& config, const std::function<void(const std::string&)>& progress = {});

}  // namespace toric
