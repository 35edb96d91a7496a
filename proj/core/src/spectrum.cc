#include "hsda/spectrum.h"

#include <cmath>
#include <numbers>
#include <string>

#include "fft_plan.h"
#include "hsda/errors.h"

namespace hsda {
namespace {

void check_dims(std::size_t width, std::size_t height, const char* what) {
  if (width == 0 || height == 0) {
    throw InvalidInput(std::string(what) + ": dimensions must be at least 1x1, got " +
                       std::to_string(width) + "x" + std::to_string(height));
  }
}

// Natural DFT index -> centered index along one axis.
inline std::size_t to_centered(std::size_t natural, std::size_t n) { return (natural + n / 2) % n; }
// Centered index -> natural DFT index.
inline std::size_t to_natural(std::size_t centered, std::size_t n) {
  return (centered + n - n / 2) % n;
}

// Unnormalized 2D forward DFT of a row-major complex grid, natural order.
std::vector<Complex> fft2(const std::vector<Complex>& grid, std::size_t width,
                          std::size_t height) {
  const auto row_plan = detail::plan_for(width);
  const auto col_plan = detail::plan_for(height);

  std::vector<Complex> rows(grid.size());
  for (std::size_t r = 0; r < height; ++r) {
    row_plan->forward(grid.data() + r * width, 1, rows.data() + r * width);
  }

  std::vector<Complex> out(grid.size());
  std::vector<Complex> column(height);
  for (std::size_t c = 0; c < width; ++c) {
    col_plan->forward(rows.data() + c, width, column.data());
    for (std::size_t r = 0; r < height; ++r) out[r * width + c] = column[r];
  }
  return out;
}

}  // namespace

ChannelPlane::ChannelPlane(std::size_t width, std::size_t height)
    : width_(width), height_(height) {
  check_dims(width, height, "ChannelPlane");
  samples_.assign(width * height, 0.0);
}

ChannelPlane::ChannelPlane(std::size_t width, std::size_t height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  check_dims(width, height, "ChannelPlane");
  if (samples_.size() != width * height) {
    throw InvalidInput("ChannelPlane: expected " + std::to_string(width * height) +
                       " samples, got " + std::to_string(samples_.size()));
  }
}

CenteredSpectrum::CenteredSpectrum(std::size_t width, std::size_t height)
    : width_(width), height_(height) {
  check_dims(width, height, "CenteredSpectrum");
  coeffs_.assign(width * height, Complex{});
}

CenteredSpectrum::CenteredSpectrum(std::size_t width, std::size_t height,
                                   std::vector<Complex> coeffs)
    : width_(width), height_(height), coeffs_(std::move(coeffs)) {
  check_dims(width, height, "CenteredSpectrum");
  if (coeffs_.size() != width * height) {
    throw InvalidInput("CenteredSpectrum: expected " + std::to_string(width * height) +
                       " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

CenteredSpectrum forward_fft(const ChannelPlane& plane) {
  const std::size_t w = plane.width();
  const std::size_t h = plane.height();
  std::vector<Complex> grid(plane.samples().begin(), plane.samples().end());
  const std::vector<Complex> natural = fft2(grid, w, h);

  CenteredSpectrum out(w, h);
  for (std::size_t r = 0; r < h; ++r) {
    const std::size_t cr = to_centered(r, h);
    for (std::size_t c = 0; c < w; ++c) out.at(cr, to_centered(c, w)) = natural[r * w + c];
  }
  return out;
}

ChannelPlane inverse_fft(const CenteredSpectrum& spectrum) {
  const std::size_t w = spectrum.width();
  const std::size_t h = spectrum.height();

  // ifft(X) = conj(fft(conj(X))) / N; only the real part is kept, which the
  // outer conjugate leaves unchanged.
  std::vector<Complex> grid(w * h);
  for (std::size_t cr = 0; cr < h; ++cr) {
    const std::size_t r = to_natural(cr, h);
    for (std::size_t cc = 0; cc < w; ++cc) {
      grid[r * w + to_natural(cc, w)] = std::conj(spectrum.at(cr, cc));
    }
  }
  const std::vector<Complex> natural = fft2(grid, w, h);

  const double scale = 1.0 / static_cast<double>(w * h);
  std::vector<double> samples(w * h);
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = natural[i].real() * scale;
  return ChannelPlane(w, h, std::move(samples));
}

CenteredSpectrum dft_oracle(const ChannelPlane& plane) {
  const std::size_t w = plane.width();
  const std::size_t h = plane.height();
  CenteredSpectrum out(w, h);
  for (std::size_t v = 0; v < h; ++v) {
    for (std::size_t u = 0; u < w; ++u) {
      Complex acc{};
      for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
          // Phase fraction reduced exactly in integers before going to floating point.
          const double turns = static_cast<double>((u * x) % w) / static_cast<double>(w) +
                               static_cast<double>((v * y) % h) / static_cast<double>(h);
          const double phase = -2.0 * std::numbers::pi * turns;
          acc += plane.at(y, x) * Complex(std::cos(phase), std::sin(phase));
        }
      }
      out.at(to_centered(v, h), to_centered(u, w)) = acc;
    }
  }
  return out;
}

}  // namespace hsda
