#include "hsda/image_io.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "test_data.h"

namespace hsda {
namespace {

TEST(ImageIo, SniffsSignatures) {
  EXPECT_EQ(sniff_format(read_file(testing::data_path("chelsea_96x64.png"))), ImageFormat::kPng);
  EXPECT_EQ(sniff_format(read_file(testing::data_path("chelsea_96x64.jpg"))), ImageFormat::kJpeg);
  const std::vector<std::uint8_t> text = {'h', 'e', 'l', 'l', 'o'};
  EXPECT_EQ(sniff_format(text), ImageFormat::kUnknown);
  EXPECT_EQ(sniff_format({}), ImageFormat::kUnknown);
}

TEST(ImageIo, DecodesRgbPngAndJpeg) {
  const RasterImage png = testing::load_fixture("chelsea_96x64.png");
  const RasterImage jpg = testing::load_fixture("chelsea_96x64.jpg");
  EXPECT_EQ(png.width(), 96u);
  EXPECT_EQ(png.height(), 64u);
  EXPECT_EQ(jpg.width(), 96u);
  EXPECT_EQ(jpg.height(), 64u);
  // Lossy, but the same picture.
  double err = 0.0;
  for (std::size_t i = 0; i < png.pixels().size(); ++i) {
    err += std::abs(int(png.pixels()[i]) - int(jpg.pixels()[i]));
  }
  EXPECT_LT(err / static_cast<double>(png.pixels().size()), 8.0);
}

TEST(ImageIo, RejectsGrayscaleAndAlpha) {
  EXPECT_THROW(testing::load_fixture("chelsea_gray.png"), UnsupportedImage);
  EXPECT_THROW(testing::load_fixture("chelsea_gray.jpg"), UnsupportedImage);
  EXPECT_THROW(testing::load_fixture("chelsea_rgba.png"), UnsupportedImage);
  const std::vector<std::uint8_t> text = {'n', 'o', 'p', 'e'};
  EXPECT_THROW(decode_image(text), UnsupportedImage);
}

TEST(ImageIo, TruncatedDataIsDecodeError) {
  std::vector<std::uint8_t> png = read_file(testing::data_path("chelsea_96x64.png"));
  png.resize(png.size() / 2);
  EXPECT_THROW(decode_image(png), ImageDecodeError);
  std::vector<std::uint8_t> jpg = read_file(testing::data_path("chelsea_96x64.jpg"));
  jpg.resize(40);
  EXPECT_THROW(decode_image(jpg), ImageDecodeError);
}

TEST(ImageIo, PngRoundtripIsLosslessAndDeterministic) {
  std::mt19937_64 rng(1);
  const RasterImage img = testing::random_image(rng, 37, 23);
  const auto bytes = encode_png(img);
  EXPECT_EQ(decode_image(bytes), img);
  EXPECT_EQ(encode_png(img), bytes);
}

TEST(ImageIo, GrayPngEncodes) {
  const GrayImage g(3, 2, {0, 50, 100, 150, 200, 250});
  const auto bytes = encode_png(g);
  EXPECT_EQ(sniff_format(bytes), ImageFormat::kPng);
  // Grayscale is not a pipeline input.
  EXPECT_THROW(decode_image(bytes), UnsupportedImage);
}

TEST(ImageIo, ReadMissingFileThrows) {
  EXPECT_THROW(read_file(testing::data_path("does-not-exist.png")), std::runtime_error);
}

}  // namespace
}  // namespace hsda
