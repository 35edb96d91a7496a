#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hsda/spectrum.h"

namespace hsda {

/// Interleaved 8-bit RGB image, row-major. Channel 0 is red, 1 green, 2 blue.
class RasterImage {
 public:
  static constexpr std::size_t kChannels = 3;

  /// Black image. Throws InvalidInput on a zero dimension.
  RasterImage(std::size_t width, std::size_t height);
  /// Throws InvalidInput on a zero dimension or if pixels.size() != width * height * 3.
  RasterImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> pixels() { return pixels_; }

  std::uint8_t at(std::size_t row, std::size_t col, std::size_t channel) const {
    return pixels_[(row * width_ + col) * kChannels + channel];
  }
  std::uint8_t& at(std::size_t row, std::size_t col, std::size_t channel) {
    return pixels_[(row * width_ + col) * kChannels + channel];
  }

  bool operator==(const RasterImage&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// Single-channel 8-bit image; only produced by diagnostics.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// Lifts one channel to floating point. Throws InvalidInput if channel > 2.
ChannelPlane extract_channel(const RasterImage& image, std::size_t channel);

/// Clamp to [0, 255], round half away from zero.
std::uint8_t quantize_sample(double value);

/// Writes the quantized plane into `channel` of `image`. Sizes must match.
void replace_channel(RasterImage& image, std::size_t channel, const ChannelPlane& plane);

}  // namespace hsda
