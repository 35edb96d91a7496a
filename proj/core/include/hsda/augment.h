#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "hsda/filters.h"
#include "hsda/image.h"
#include "hsda/shuffle.h"

namespace hsda {

/// Which color channel the shuffle perturbs.
class ChannelPolicy {
 public:
  static ChannelPolicy random() { return ChannelPolicy(std::nullopt); }
  /// Throws InvalidParameter if channel > 2.
  static ChannelPolicy fixed(std::size_t channel);

  bool is_random() const { return !fixed_; }
  std::optional<std::size_t> fixed_channel() const { return fixed_; }

  bool operator==(const ChannelPolicy&) const = default;

 private:
  explicit ChannelPolicy(std::optional<std::size_t> fixed) : fixed_(fixed) {}
  std::optional<std::size_t> fixed_;
};

struct AugmentConfig {
  std::size_t k = kDefaultTopK;
  double cutoff = kDefaultCutoff;
  ChannelPolicy channel = ChannelPolicy::random();
  std::uint64_t seed = 0;

  /// Throws InvalidParameter unless cutoff is finite and positive.
  void validate() const;
};

/// Everything needed to regenerate one augmented output from its source.
struct AugmentRecord {
  std::string source;
  std::size_t channel = 0;
  std::size_t k = 0;
  double cutoff = 0.0;
  std::uint64_t seed = 0;
  std::string output;

  bool operator==(const AugmentRecord&) const = default;
};

struct AugmentResult {
  RasterImage image;
  AugmentRecord record;
};

enum class Band { kLow, kHigh };

/// Thread-safe cache of Gaussian masks keyed by (width, height, cutoff).
class FilterBank {
 public:
  FilterBank();
  ~FilterBank();
  FilterBank(const FilterBank&) = delete;
  FilterBank& operator=(const FilterBank&) = delete;

  std::shared_ptr<const GaussianFilterPair> get(std::size_t width, std::size_t height,
                                                double cutoff);

  /// Shared by the free functions below.
  static FilterBank& global();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// The channel drawn for `seed` under `policy` and the seed handed to the
/// shuffle plan. A fixed policy still consumes the channel draw, so a record
/// replayed with fixed(record.channel) reproduces the same plan.
struct ChannelDraw {
  std::size_t channel;
  std::uint64_t plan_seed;
};
ChannelDraw draw_channel(const ChannelPolicy& policy, std::uint64_t seed);

/// Full high-frequency shuffle augmentation of one image.
///
/// Picks a channel, splits its centered spectrum into Gaussian low and high
/// bands, shuffles the cfg.k largest high-band coefficients, adds the
/// shuffled high band back onto the untouched low band and inverts. The
/// result is clamped, rounded half away from zero and written back into the
/// chosen channel; the other two channels are copied byte for byte.
///
/// `seed` drives every random choice; cfg.seed is not consulted. Throws
/// InvalidParameter when cfg.k exceeds width * height or cfg.cutoff <= 0.
AugmentResult hsda_augment(const RasterImage& image, const AugmentConfig& cfg,
                           std::uint64_t seed, FilterBank& bank = FilterBank::global());

/// Same pipeline on an already-extracted plane, without quantization.
ChannelPlane hsda_augment_plane(const ChannelPlane& plane, std::size_t k,
                                const GaussianFilterPair& filters, std::uint64_t plan_seed);

/// Per-channel band-limited reconstruction (low = blurred, high = edges).
RasterImage reconstruct_band(const RasterImage& image, double cutoff, Band band,
                             FilterBank& bank = FilterBank::global());

/// reconstruct_band before clamping and quantization.
std::array<ChannelPlane, 3> reconstruct_band_unquantized(const RasterImage& image, double cutoff,
                                                         Band band,
                                                         FilterBank& bank = FilterBank::global());

/// Log-magnitude view log(1 + |coeff|) of one channel's centered spectrum,
/// linearly rescaled so the minimum maps to 0 and the maximum to 255. A flat
/// spectrum (max - min <= 1e-9 * max(1, max)) maps to all zeros.
GrayImage spectrum_visual(const RasterImage& image, std::size_t channel);

}  // namespace hsda
