#include "tda/permutation_test.hpp"

#include <numeric>
#include <vector>

#include "tda/error.hpp"
#include "tda/random.hpp"

namespace tda {

PermutationTestResult permutation_test(std::span<const Landscape> a, std::span<const Landscape> b, int shuffles,
                                       std::uint64_t seed, Real p) {
  if (a.size() != b.size()) throw Error(ErrorCode::UnequalSampleSizes, "samples must have equal size");
  if (a.empty()) throw Error(ErrorCode::EmptyInput, "samples must be non-empty");
  if (shuffles < 1) throw Error(ErrorCode::InvalidArgument, "need at least one shuffle");

  PermutationTestResult result;
  result.shuffles = shuffles;
  result.observed_distance = landscape_distance(average_landscapes(a), average_landscapes(b), p);

  std::vector<const Landscape*> pooled;
  for (const auto& l : a) pooled.push_back(&l);
  for (const auto& l : b) pooled.push_back(&l);
  const std::size_t half = a.size();

  std::vector<std::size_t> order(pooled.size());
  std::vector<Landscape> first, second;
  for (int s = 0; s < shuffles; ++s) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    rng.shuffle(std::span<std::size_t>(order));
    first.clear();
    second.clear();
    for (std::size_t i = 0; i < order.size(); ++i) (i < half ? first : second).push_back(*pooled[order[i]]);
    const Real d = landscape_distance(average_landscapes(first), average_landscapes(second), p);
    if (d > result.observed_distance) ++result.exceeding;
  }
  result.p_value = static_cast<Real>(result.exceeding) / static_cast<Real>(shuffles);
  return result;
}

}  // namespace tda
