#include "hsda/augment.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "hsda/errors.h"
#include "hsda/random.h"

namespace hsda {

ChannelPolicy ChannelPolicy::fixed(std::size_t channel) {
  if (channel >= RasterImage::kChannels) {
    throw InvalidParameter("channel must be 0 (red), 1 (green) or 2 (blue), got " +
                           std::to_string(channel));
  }
  return ChannelPolicy(channel);
}

void AugmentConfig::validate() const {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw InvalidParameter("cutoff D must be finite and > 0, got " + std::to_string(cutoff));
  }
}

struct FilterBank::Impl {
  std::mutex mutex;
  std::map<std::tuple<std::size_t, std::size_t, double>,
           std::shared_ptr<const GaussianFilterPair>>
      pairs;
};

FilterBank::FilterBank() : impl_(std::make_unique<Impl>()) {}
FilterBank::~FilterBank() = default;

std::shared_ptr<const GaussianFilterPair> FilterBank::get(std::size_t width, std::size_t height,
                                                          double cutoff) {
  const auto key = std::make_tuple(width, height, cutoff);
  {
    std::lock_guard lock(impl_->mutex);
    if (auto it = impl_->pairs.find(key); it != impl_->pairs.end()) return it->second;
  }
  // Built outside the lock; a racing builder produces an identical pair.
  auto pair = std::make_shared<const GaussianFilterPair>(build_gaussian_pair(width, height, cutoff));
  std::lock_guard lock(impl_->mutex);
  return impl_->pairs.try_emplace(key, std::move(pair)).first->second;
}

FilterBank& FilterBank::global() {
  static FilterBank bank;
  return bank;
}

ChannelDraw draw_channel(const ChannelPolicy& policy, std::uint64_t seed) {
  SeededRng rng(seed);
  const auto drawn = static_cast<std::size_t>(rng.below(RasterImage::kChannels));
  const std::uint64_t plan_seed = rng.next();
  return {policy.fixed_channel().value_or(drawn), plan_seed};
}

ChannelPlane hsda_augment_plane(const ChannelPlane& plane, std::size_t k,
                                const GaussianFilterPair& filters, std::uint64_t plan_seed) {
  const CenteredSpectrum spectrum = forward_fft(plane);
  const CenteredSpectrum low = apply_mask(spectrum, filters.low());
  const CenteredSpectrum high = apply_mask(spectrum, filters.high());

  const ShufflePlan plan = make_plan(high, k, plan_seed);
  CenteredSpectrum combined = apply_plan(high, plan);

  auto dst = combined.coeffs();
  const auto lo = low.coeffs();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = lo[i] + dst[i];
  return inverse_fft(combined);
}

AugmentResult hsda_augment(const RasterImage& image, const AugmentConfig& cfg,
                           std::uint64_t seed, FilterBank& bank) {
  cfg.validate();
  const std::size_t cells = image.width() * image.height();
  if (cfg.k > cells) {
    throw InvalidParameter("k = " + std::to_string(cfg.k) + " exceeds the " +
                           std::to_string(cells) + " pixels of a " +
                           std::to_string(image.width()) + "x" + std::to_string(image.height()) +
                           " image");
  }

  const ChannelDraw draw = draw_channel(cfg.channel, seed);
  const auto filters = bank.get(image.width(), image.height(), cfg.cutoff);
  const ChannelPlane augmented =
      hsda_augment_plane(extract_channel(image, draw.channel), cfg.k, *filters, draw.plan_seed);

  AugmentResult result{image, {}};
  replace_channel(result.image, draw.channel, augmented);
  result.record.channel = draw.channel;
  result.record.k = cfg.k;
  result.record.cutoff = cfg.cutoff;
  result.record.seed = seed;
  return result;
}

std::array<ChannelPlane, 3> reconstruct_band_unquantized(const RasterImage& image, double cutoff,
                                                         Band band, FilterBank& bank) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw InvalidParameter("cutoff D must be finite and > 0, got " + std::to_string(cutoff));
  }
  const auto filters = bank.get(image.width(), image.height(), cutoff);
  const RealGrid& mask = band == Band::kLow ? filters->low() : filters->high();

  auto band_of = [&](std::size_t c) {
    return inverse_fft(apply_mask(forward_fft(extract_channel(image, c)), mask));
  };
  return {band_of(0), band_of(1), band_of(2)};
}

RasterImage reconstruct_band(const RasterImage& image, double cutoff, Band band,
                             FilterBank& bank) {
  const auto planes = reconstruct_band_unquantized(image, cutoff, band, bank);
  RasterImage out(image.width(), image.height());
  for (std::size_t c = 0; c < planes.size(); ++c) replace_channel(out, c, planes[c]);
  return out;
}

GrayImage spectrum_visual(const RasterImage& image, std::size_t channel) {
  const CenteredSpectrum spectrum = forward_fft(extract_channel(image, channel));
  const auto coeffs = spectrum.coeffs();

  std::vector<double> level(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) level[i] = std::log1p(std::abs(coeffs[i]));
  const auto [lo_it, hi_it] = std::minmax_element(level.begin(), level.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  std::vector<std::uint8_t> pixels(level.size(), 0);
  if (hi - lo > 1e-9 * std::max(1.0, hi)) {
    const double scale = 255.0 / (hi - lo);
    for (std::size_t i = 0; i < level.size(); ++i) pixels[i] = quantize_sample((level[i] - lo) * scale);
  }
  return GrayImage(image.width(), image.height(), std::move(pixels));
}

}  // namespace hsda
