#include "hsda/shuffle.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "hsda/errors.h"
#include "hsda/random.h"

namespace hsda {

std::vector<GridPos> select_top_k(const CenteredSpectrum& spectrum, std::size_t k) {
  const std::size_t n = spectrum.size();
  if (k > n) {
    throw InvalidParameter("select_top_k: k = " + std::to_string(k) + " exceeds the " +
                           std::to_string(n) + " cells of the spectrum");
  }
  if (k == 0) return {};

  const auto coeffs = spectrum.coeffs();
  std::vector<double> magnitude(n);
  for (std::size_t i = 0; i < n; ++i) magnitude[i] = std::abs(coeffs[i]);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto before = [&](std::size_t a, std::size_t b) {
    if (magnitude[a] != magnitude[b]) return magnitude[a] > magnitude[b];
    return a < b;
  };
  if (k < n) std::nth_element(order.begin(), order.begin() + k, order.end(), before);
  std::sort(order.begin(), order.begin() + k, before);

  std::vector<GridPos> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back({order[i] / spectrum.width(), order[i] % spectrum.width()});
  }
  return out;
}

ShufflePlan make_plan(const CenteredSpectrum& spectrum, std::size_t k, std::uint64_t seed) {
  ShufflePlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.selected = select_top_k(spectrum, k);
  plan.permutation.resize(k);
  std::iota(plan.permutation.begin(), plan.permutation.end(), std::size_t{0});

  SeededRng rng(seed);
  for (std::size_t i = k; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(plan.permutation[i - 1], plan.permutation[j]);
  }
  return plan;
}

CenteredSpectrum apply_plan(const CenteredSpectrum& spectrum, const ShufflePlan& plan) {
  const std::size_t k = plan.k;
  if (plan.selected.size() != k || plan.permutation.size() != k) {
    throw InvalidInput("apply_plan: plan has k = " + std::to_string(k) + " but " +
                       std::to_string(plan.selected.size()) + " positions and " +
                       std::to_string(plan.permutation.size()) + " permutation slots");
  }

  std::vector<bool> seen_slot(k, false);
  for (const std::size_t slot : plan.permutation) {
    if (slot >= k || seen_slot[slot]) {
      throw InvalidInput("apply_plan: permutation is not a bijection on [0, k)");
    }
    seen_slot[slot] = true;
  }

  std::vector<bool> seen_cell(spectrum.size(), false);
  for (const GridPos& pos : plan.selected) {
    if (pos.row >= spectrum.height() || pos.col >= spectrum.width()) {
      throw InvalidInput("apply_plan: position (" + std::to_string(pos.row) + ", " +
                         std::to_string(pos.col) + ") is outside the " +
                         std::to_string(spectrum.width()) + "x" +
                         std::to_string(spectrum.height()) + " grid");
    }
    const std::size_t index = pos.row * spectrum.width() + pos.col;
    if (seen_cell[index]) throw InvalidInput("apply_plan: duplicate selected position");
    seen_cell[index] = true;
  }

  CenteredSpectrum out = spectrum;
  for (std::size_t i = 0; i < k; ++i) {
    const GridPos& dst = plan.selected[i];
    const GridPos& src = plan.selected[plan.permutation[i]];
    out.at(dst.row, dst.col) = spectrum.at(src.row, src.col);
  }
  return out;
}

}  // namespace hsda
