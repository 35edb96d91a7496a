#include "hsda/filters.h"

#include <cmath>
#include <string>

#include "hsda/errors.h"

namespace hsda {

RealGrid::RealGrid(std::size_t width, std::size_t height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (width == 0 || height == 0) throw InvalidInput("RealGrid: dimensions must be at least 1x1");
  if (values_.size() != width * height) {
    throw InvalidInput("RealGrid: expected " + std::to_string(width * height) + " values, got " +
                       std::to_string(values_.size()));
  }
}

GaussianFilterPair build_gaussian_pair(std::size_t width, std::size_t height, double cutoff) {
  if (width == 0 || height == 0) {
    throw InvalidInput("build_gaussian_pair: dimensions must be at least 1x1");
  }
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw InvalidParameter("build_gaussian_pair: cutoff must be finite and > 0, got " +
                           std::to_string(cutoff));
  }

  const auto cx = static_cast<long long>(width / 2);
  const auto cy = static_cast<long long>(height / 2);
  const double denom = 2.0 * cutoff * cutoff;

  std::vector<double> low(width * height);
  std::vector<double> high(width * height);
  for (std::size_t r = 0; r < height; ++r) {
    const auto y = static_cast<double>(static_cast<long long>(r) - cy);
    for (std::size_t c = 0; c < width; ++c) {
      const auto x = static_cast<double>(static_cast<long long>(c) - cx);
      const double g = std::exp(-(x * x + y * y) / denom);
      low[r * width + c] = g;
      high[r * width + c] = 1.0 - g;
    }
  }
  return GaussianFilterPair(cutoff, RealGrid(width, height, std::move(low)),
                            RealGrid(width, height, std::move(high)));
}

CenteredSpectrum apply_mask(const CenteredSpectrum& spectrum, const RealGrid& mask) {
  if (spectrum.width() != mask.width() || spectrum.height() != mask.height()) {
    throw InvalidInput("apply_mask: mask is " + std::to_string(mask.width()) + "x" +
                       std::to_string(mask.height()) + " but spectrum is " +
                       std::to_string(spectrum.width()) + "x" +
                       std::to_string(spectrum.height()));
  }
  CenteredSpectrum out(spectrum.width(), spectrum.height());
  const auto in = spectrum.coeffs();
  const auto m = mask.values();
  auto dst = out.coeffs();
  for (std::size_t i = 0; i < in.size(); ++i) dst[i] = m[i] * in[i];
  return out;
}

}  // namespace hsda
