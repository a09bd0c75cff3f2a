#pragma once

#include <cstdint>
#include <span>

#include "tda/landscape.hpp"

namespace tda {

struct PermutationTestResult {
  Real p_value = 0;
  Real observed_distance = 0;
  int exceeding = 0;  // shuffles whose distance was strictly larger
  int shuffles = 0;
};

/// Two-sample test on landscapes. The observed statistic is the L^p distance
/// between the two sample averages; each shuffle pools both samples, splits
/// them into equal halves and counts strict exceedances. Shuffle s draws from
/// derive_seed(seed, s), so results are reproducible. When every distance is
/// zero no shuffle exceeds and the p-value is 0.
/// Throws UnequalSampleSizes, EmptyInput, InvalidArgument (shuffles < 1).
PermutationTestResult permutation_test(std::span<const Landscape> a, std::span<const Landscape> b, int shuffles,
                                       std::uint64_t seed, Real p = 2);

}  // namespace tda
