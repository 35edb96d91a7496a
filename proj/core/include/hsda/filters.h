#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hsda/spectrum.h"

namespace hsda {

/// Cutoff used when none is given.
inline constexpr double kDefaultCutoff = 10.0;

/// Real-valued row-major grid, used for frequency masks.
class RealGrid {
 public:
  RealGrid(std::size_t width, std::size_t height, std::vector<double> values);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::span<const double> values() const { return values_; }
  double at(std::size_t row, std::size_t col) const { return values_[row * width_ + col]; }

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<double> values_;
};

/// Matched Gaussian low-pass and high-pass masks on a centered frequency grid.
///
/// low(r, c) = exp(-(x^2 + y^2) / (2 D^2)) where x = c - width/2 and
/// y = r - height/2 (integer division), measured in frequency-grid cells.
/// high = 1 - low, cell by cell, so the two masks sum to exactly one.
class GaussianFilterPair {
 public:
  std::size_t width() const { return low_.width(); }
  std::size_t height() const { return low_.height(); }
  double cutoff() const { return cutoff_; }
  const RealGrid& low() const { return low_; }
  const RealGrid& high() const { return high_; }

 private:
  friend GaussianFilterPair build_gaussian_pair(std::size_t, std::size_t, double);
  GaussianFilterPair(double cutoff, RealGrid low, RealGrid high)
      : cutoff_(cutoff), low_(std::move(low)), high_(std::move(high)) {}

  double cutoff_;
  RealGrid low_;
  RealGrid high_;
};

/// Throws InvalidInput on a zero dimension and InvalidParameter unless
/// `cutoff` is finite and positive.
GaussianFilterPair build_gaussian_pair(std::size_t width, std::size_t height, double cutoff);

/// Element-wise product. Throws InvalidInput when the grid sizes differ.
CenteredSpectrum apply_mask(const CenteredSpectrum& spectrum, const RealGrid& mask);

}  // namespace hsda
