#include "hsda/image_io.h"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

// jpeglib.h needs FILE from <cstdio> in scope.
#include <jpeglib.h>

namespace hsda {
namespace {

// libpng and libjpeg report fatal errors by longjmp. Every function that calls
// setjmp below keeps its C++ state behind a pointer created before setjmp, so
// the jump never skips a destructor or observes a clobbered local.

struct ErrorText {
  char message[JMSG_LENGTH_MAX > 256 ? JMSG_LENGTH_MAX : 256] = "unknown error";
};

// ---- PNG -------------------------------------------------------------------

struct PngReadCursor {
  const std::uint8_t* data;
  std::size_t size;
  std::size_t pos;
};

void png_read_from_memory(png_structp png, png_bytep out, png_size_t count) {
  auto* cursor = static_cast<PngReadCursor*>(png_get_io_ptr(png));
  if (count > cursor->size - cursor->pos) png_error(png, "unexpected end of PNG data");
  std::memcpy(out, cursor->data + cursor->pos, count);
  cursor->pos += count;
}

void png_write_to_vector(png_structp png, png_bytep data, png_size_t count) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + count);
}

void png_flush_noop(png_structp) {}

[[noreturn]] void png_error_to_jump(png_structp png, png_const_charp message) {
  auto* text = static_cast<ErrorText*>(png_get_error_ptr(png));
  std::snprintf(text->message, sizeof(text->message), "%s", message);
  png_longjmp(png, 1);
}

void png_warning_ignore(png_structp, png_const_charp) {}

struct PngDecodeState {
  ErrorText error;
  PngReadCursor cursor{};
  std::string unsupported;
  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
  png_uint_32 width = 0;
  png_uint_32 height = 0;
};

RasterImage decode_png(std::span<const std::uint8_t> bytes) {
  auto state = std::make_unique<PngDecodeState>();
  state->cursor = {bytes.data(), bytes.size(), 0};

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &state->error,
                                           png_error_to_jump, png_warning_ignore);
  if (png == nullptr) throw std::runtime_error("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ImageDecodeError(std::string("PNG: ") + state->error.message);
  }

  png_set_read_fn(png, &state->cursor, png_read_from_memory);
  png_read_info(png, info);

  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  const bool has_trns = png_get_valid(png, info, PNG_INFO_tRNS) != 0;

  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    state->unsupported = "grayscale PNG";
  } else if (color_type == PNG_COLOR_TYPE_RGB_ALPHA || has_trns) {
    state->unsupported = "PNG with alpha channel";
  }

  if (state->unsupported.empty()) {
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (bit_depth == 16) png_set_strip_16(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    state->width = png_get_image_width(png, info);
    state->height = png_get_image_height(png, info);
    const std::size_t stride = png_get_rowbytes(png, info);
    if (stride != static_cast<std::size_t>(state->width) * 3) {
      png_error(png, "unexpected row layout after conversion to RGB");
    }
    state->pixels.resize(stride * state->height);
    state->rows.resize(state->height);
    for (png_uint_32 r = 0; r < state->height; ++r) {
      state->rows[r] = state->pixels.data() + r * stride;
    }
    png_read_image(png, state->rows.data());
    png_read_end(png, nullptr);
  }

  png_destroy_read_struct(&png, &info, nullptr);
  if (!state->unsupported.empty()) throw UnsupportedImage(state->unsupported);
  return RasterImage(state->width, state->height, std::move(state->pixels));
}

struct PngEncodeState {
  ErrorText error;
  std::vector<std::uint8_t> out;
  std::vector<png_const_bytep> rows;
};

std::vector<std::uint8_t> encode_png_rows(std::size_t width, std::size_t height, int color_type,
                                          std::size_t channels,
                                          std::span<const std::uint8_t> pixels) {
  auto state = std::make_unique<PngEncodeState>();
  state->rows.resize(height);
  for (std::size_t r = 0; r < height; ++r) state->rows[r] = pixels.data() + r * width * channels;

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &state->error,
                                            png_error_to_jump, png_warning_ignore);
  if (png == nullptr) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error(std::string("PNG encode: ") + state->error.message);
  }

  png_set_write_fn(png, &state->out, png_write_to_vector, png_flush_noop);
  png_set_compression_level(png, 1);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
               color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, const_cast<png_bytepp>(state->rows.data()));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return std::move(state->out);
}

// ---- JPEG ------------------------------------------------------------------

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  ErrorText text;
};

[[noreturn]] void jpeg_error_to_jump(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->text.message);
  std::longjmp(err->jump, 1);
}

void jpeg_output_ignore(j_common_ptr) {}

struct JpegDecodeState {
  jpeg_decompress_struct cinfo{};
  JpegErrorManager err{};
  std::string unsupported;
  std::vector<std::uint8_t> pixels;
  std::size_t width = 0;
  std::size_t height = 0;
};

RasterImage decode_jpeg(std::span<const std::uint8_t> bytes) {
  auto state = std::make_unique<JpegDecodeState>();
  jpeg_decompress_struct& cinfo = state->cinfo;
  cinfo.err = jpeg_std_error(&state->err.base);
  state->err.base.error_exit = jpeg_error_to_jump;
  state->err.base.output_message = jpeg_output_ignore;

  if (setjmp(state->err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw ImageDecodeError(std::string("JPEG: ") + state->err.text.message);
  }

  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);

  if (cinfo.num_components != 3) {
    state->unsupported = cinfo.num_components == 1 ? "grayscale JPEG"
                                                   : "JPEG with " +
                                                         std::to_string(cinfo.num_components) +
                                                         " components";
  } else {
    cinfo.out_color_space = JCS_RGB;
    cinfo.dct_method = JDCT_ISLOW;
    jpeg_start_decompress(&cinfo);
    state->width = cinfo.output_width;
    state->height = cinfo.output_height;
    const std::size_t stride = state->width * 3;
    state->pixels.resize(stride * state->height);
    while (cinfo.output_scanline < cinfo.output_height) {
      JSAMPROW row = state->pixels.data() + cinfo.output_scanline * stride;
      jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
  }

  jpeg_destroy_decompress(&cinfo);
  if (!state->unsupported.empty()) throw UnsupportedImage(state->unsupported);
  return RasterImage(state->width, state->height, std::move(state->pixels));
}

}  // namespace

ImageFormat sniff_format(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t kPngMagic[] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (bytes.size() >= sizeof(kPngMagic) &&
      std::memcmp(bytes.data(), kPngMagic, sizeof(kPngMagic)) == 0) {
    return ImageFormat::kPng;
  }
  if (bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF) {
    return ImageFormat::kJpeg;
  }
  return ImageFormat::kUnknown;
}

RasterImage decode_image(std::span<const std::uint8_t> bytes) {
  switch (sniff_format(bytes)) {
    case ImageFormat::kPng: return decode_png(bytes);
    case ImageFormat::kJpeg: return decode_jpeg(bytes);
    case ImageFormat::kUnknown: break;
  }
  throw UnsupportedImage("not a PNG or JPEG file");
}

std::vector<std::uint8_t> encode_png(const RasterImage& image) {
  return encode_png_rows(image.width(), image.height(), PNG_COLOR_TYPE_RGB, 3, image.pixels());
}

std::vector<std::uint8_t> encode_png(const GrayImage& image) {
  return encode_png_rows(image.width(), image.height(), PNG_COLOR_TYPE_GRAY, 1, image.pixels());
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("read error on " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write error on " + path.string());
}

}  // namespace hsda
