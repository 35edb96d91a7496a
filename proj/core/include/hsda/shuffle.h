#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hsda/spectrum.h"

namespace hsda {

/// Number of high-band coefficients shuffled when none is given.
inline constexpr std::size_t kDefaultTopK = 2000;

struct GridPos {
  std::size_t row = 0;
  std::size_t col = 0;
  bool operator==(const GridPos&) const = default;
};

/// Replayable record of one shuffle: which cells move and where.
///
/// After apply_plan, the cell at selected[i] holds the value that was at
/// selected[permutation[i]].
struct ShufflePlan {
  std::size_t k = 0;
  /// Descending |coeff|; equal magnitudes ordered by ascending row-major index.
  std::vector<GridPos> selected;
  /// Bijection on [0, k).
  std::vector<std::size_t> permutation;
  std::uint64_t seed = 0;
};

/// Positions of the k largest-magnitude coefficients, largest first, ties
/// broken by ascending row-major index. Throws InvalidParameter if k exceeds
/// the number of cells.
std::vector<GridPos> select_top_k(const CenteredSpectrum& spectrum, std::size_t k);

/// select_top_k plus a uniform permutation of the k slots drawn by seeded
/// Fisher-Yates. Same (spectrum, k, seed) always gives the same plan.
ShufflePlan make_plan(const CenteredSpectrum& spectrum, std::size_t k, std::uint64_t seed);

/// Relocates the selected coefficients according to the plan; every other
/// cell is copied unchanged. Throws InvalidInput if the plan references a
/// cell outside the grid or is internally inconsistent.
CenteredSpectrum apply_plan(const CenteredSpectrum& spectrum, const ShufflePlan& plan);

}  // namespace hsda
