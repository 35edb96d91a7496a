#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>
#include <string>
#include <unistd.h>

#include "hsda/augment.h"
#include "hsda/image_io.h"
#include "hsda/job.h"
#include "hsda/shuffle.h"
#include "hsda/spectrum.h"

namespace {

hsda::RasterImage photo() {
  static const hsda::RasterImage image = hsda::decode_image(
      hsda::read_file(std::filesystem::path(HSDA_TEST_DATA_DIR) / "coffee_704x256.png"));
  return image;
}

hsda::ChannelPlane random_plane(std::size_t w, std::size_t h) {
  std::mt19937_64 rng(w * 131 + h);
  std::uniform_real_distribution<double> u(0.0, 255.0);
  std::vector<double> s(w * h);
  for (auto& v : s) v = u(rng);
  return hsda::ChannelPlane(w, h, std::move(s));
}

void BM_ForwardFft(benchmark::State& state) {
  const auto plane = random_plane(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hsda::forward_fft(plane));
  state.SetItemsProcessed(state.iterations() * plane.size());
}
BENCHMARK(BM_ForwardFft)->Args({256, 256})->Args({704, 256})->Args({701, 257})->Unit(benchmark::kMillisecond);

void BM_InverseFft(benchmark::State& state) {
  const auto spectrum = hsda::forward_fft(random_plane(704, 256));
  for (auto _ : state) benchmark::DoNotOptimize(hsda::inverse_fft(spectrum));
}
BENCHMARK(BM_InverseFft)->Unit(benchmark::kMillisecond);

void BM_SelectTopK(benchmark::State& state) {
  const auto spectrum = hsda::forward_fft(random_plane(704, 256));
  for (auto _ : state) benchmark::DoNotOptimize(hsda::select_top_k(spectrum, state.range(0)));
}
BENCHMARK(BM_SelectTopK)->Arg(1000)->Arg(2000)->Arg(3000)->Unit(benchmark::kMillisecond);

void BM_Augment704x256(benchmark::State& state) {
  const auto image = photo();
  hsda::AugmentConfig cfg;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hsda::hsda_augment(image, cfg, seed++));
}
BENCHMARK(BM_Augment704x256)->Unit(benchmark::kMillisecond);

void BM_EncodePng(benchmark::State& state) {
  const auto image = photo();
  for (auto _ : state) benchmark::DoNotOptimize(hsda::encode_png(image));
}
BENCHMARK(BM_EncodePng)->Unit(benchmark::kMillisecond);

// Whole batch job over 24 frames; the argument is the worker count.
void BM_BatchJob(benchmark::State& state) {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / ("hsda-bench-" + std::to_string(::getpid()));
  const fs::path in = root / "in";
  fs::create_directories(in);
  const auto bytes = hsda::encode_png(photo());
  for (int i = 0; i < 24; ++i) hsda::write_file(in / ("f" + std::to_string(i) + ".png"), bytes);

  for (auto _ : state) {
    hsda::JobSpec job;
    job.input_dir = in;
    job.output_dir = root / "out";
    job.workers = static_cast<std::size_t>(state.range(0));
    job.overwrite = true;
    job.log = [](std::string_view) {};
    benchmark::DoNotOptimize(hsda::run_job(job));
  }
  state.SetItemsProcessed(state.iterations() * 24);
  fs::remove_all(root);
}
BENCHMARK(BM_BatchJob)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
