#include "hsda/image.h"

#include <cmath>
#include <string>

#include "hsda/errors.h"

namespace hsda {

RasterImage::RasterImage(std::size_t width, std::size_t height)
    : RasterImage(width, height, std::vector<std::uint8_t>(width * height * kChannels, 0)) {}

RasterImage::RasterImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) throw InvalidInput("RasterImage: dimensions must be at least 1x1");
  if (pixels_.size() != width * height * kChannels) {
    throw InvalidInput("RasterImage: expected " + std::to_string(width * height * kChannels) +
                       " bytes, got " + std::to_string(pixels_.size()));
  }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) throw InvalidInput("GrayImage: dimensions must be at least 1x1");
  if (pixels_.size() != width * height) {
    throw InvalidInput("GrayImage: expected " + std::to_string(width * height) + " bytes, got " +
                       std::to_string(pixels_.size()));
  }
}

ChannelPlane extract_channel(const RasterImage& image, std::size_t channel) {
  if (channel >= RasterImage::kChannels) {
    throw InvalidInput("extract_channel: channel must be 0, 1 or 2, got " +
                       std::to_string(channel));
  }
  std::vector<double> samples(image.width() * image.height());
  const auto px = image.pixels();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = px[i * RasterImage::kChannels + channel];
  }
  return ChannelPlane(image.width(), image.height(), std::move(samples));
}

std::uint8_t quantize_sample(double value) {
  if (!(value > 0.0)) return 0;  // also maps NaN to 0
  if (value >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::round(value));
}

void replace_channel(RasterImage& image, std::size_t channel, const ChannelPlane& plane) {
  if (channel >= RasterImage::kChannels) {
    throw InvalidInput("replace_channel: channel must be 0, 1 or 2");
  }
  if (plane.width() != image.width() || plane.height() != image.height()) {
    throw InvalidInput("replace_channel: plane size does not match image size");
  }
  auto px = image.pixels();
  const auto samples = plane.samples();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    px[i * RasterImage::kChannels + channel] = quantize_sample(samples[i]);
  }
}

}  // namespace hsda
