#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsda/image.h"

namespace hsda {

enum class ImageFormat { kPng, kJpeg, kUnknown };

/// A well-formed file the pipeline does not handle: an unknown container,
/// grayscale, or anything carrying alpha.
class UnsupportedImage : public std::runtime_error {
 public:
  explicit UnsupportedImage(const std::string& what) : std::runtime_error(what) {}
};

/// Corrupt or truncated image data.
class ImageDecodeError : public std::runtime_error {
 public:
  explicit ImageDecodeError(const std::string& what) : std::runtime_error(what) {}
};

/// Identifies PNG or JPEG by signature bytes.
ImageFormat sniff_format(std::span<const std::uint8_t> bytes);

/// Decodes an 8-bit RGB PNG (palette and 16-bit RGB are converted) or a
/// three-component JPEG.
RasterImage decode_image(std::span<const std::uint8_t> bytes);

/// Deterministic PNG encoding: zlib level 1 (throughput over size), no
/// timestamp or text chunks.
std::vector<std::uint8_t> encode_png(const RasterImage& image);
std::vector<std::uint8_t> encode_png(const GrayImage& image);

/// Throws std::runtime_error on I/O failure.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace hsda
