#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "hsda/image_io.h"
#include "oracles.h"
#include "test_data.h"

namespace hsda::testing {

// Writes `count` RGB images (PNG, plus one JPEG fixture) spread over nested
// directories. Every image has at least 2000 pixels so default K applies.
inline void write_image_corpus(const std::filesystem::path& root, int count,
                               std::uint64_t seed = 1, std::size_t width = 64,
                               std::size_t height = 48) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::filesystem::path dir = root / ("cam" + std::to_string(i % 3)) / "seq";
    std::filesystem::create_directories(dir);
    const auto name = "frame_" + std::to_string(i) + ".png";
    write_file(dir / name, encode_png(random_image(rng, width, height)));
  }
  std::filesystem::copy_file(data_path("chelsea_96x64.jpg"), root / "chelsea.jpg",
                             std::filesystem::copy_options::overwrite_existing);
}

}  // namespace hsda::testing
