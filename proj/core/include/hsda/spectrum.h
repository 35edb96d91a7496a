#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hsda {

using Complex = std::complex<double>;

/// One image channel as real samples, row-major.
class ChannelPlane {
 public:
  /// Zero-filled plane. Throws InvalidInput if either dimension is 0.
  ChannelPlane(std::size_t width, std::size_t height);
  /// Throws InvalidInput if a dimension is 0 or samples.size() != width * height.
  ChannelPlane(std::size_t width, std::size_t height, std::vector<double> samples);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return samples_.size(); }

  std::span<const double> samples() const { return samples_; }
  std::span<double> samples() { return samples_; }

  double at(std::size_t row, std::size_t col) const { return samples_[row * width_ + col]; }
  double& at(std::size_t row, std::size_t col) { return samples_[row * width_ + col]; }

  bool operator==(const ChannelPlane&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<double> samples_;
};

/// Complex frequency grid, row-major, with the DC term stored at
/// (row = height / 2, col = width / 2) using integer division.
class CenteredSpectrum {
 public:
  CenteredSpectrum(std::size_t width, std::size_t height);
  CenteredSpectrum(std::size_t width, std::size_t height, std::vector<Complex> coeffs);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return coeffs_.size(); }
  std::size_t center_row() const { return height_ / 2; }
  std::size_t center_col() const { return width_ / 2; }

  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }

  const Complex& at(std::size_t row, std::size_t col) const { return coeffs_[row * width_ + col]; }
  Complex& at(std::size_t row, std::size_t col) { return coeffs_[row * width_ + col]; }

  bool operator==(const CenteredSpectrum&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Complex> coeffs_;
};

/// Unnormalized 2D DFT of `plane`, re-indexed so DC sits at the center cell.
/// Any size is handled exactly (mixed radix, Bluestein for large primes).
CenteredSpectrum forward_fft(const ChannelPlane& plane);

/// Undoes the centering, applies the inverse DFT scaled by 1/(W*H) and keeps
/// the real part. No clamping.
ChannelPlane inverse_fft(const CenteredSpectrum& spectrum);

/// Direct double-sum DFT with the same layout as forward_fft. O((W*H)^2);
/// meant for validating forward_fft on small grids.
CenteredSpectrum dft_oracle(const ChannelPlane& plane);

}  // namespace hsda
