// hsda: batch high-frequency shuffle augmentation and band diagnostics.
//
//   hsda <augment|band-low|band-high|spectrum> --in DIR --out DIR [options]
//   hsda verify --manifest PATH --in DIR --out DIR
//
// Exit codes: 0 success, 1 some files failed, 2 invalid arguments or config.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include "hsda/augment.h"
#include "hsda/errors.h"
#include "hsda/job.h"
#include "hsda/manifest.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitUsage = 2;

const std::map<std::string, hsda::ChannelPolicy>& channel_names() {
  static const std::map<std::string, hsda::ChannelPolicy> names = {
      {"random", hsda::ChannelPolicy::random()},
      {"r", hsda::ChannelPolicy::fixed(0)},
      {"g", hsda::ChannelPolicy::fixed(1)},
      {"b", hsda::ChannelPolicy::fixed(2)},
      {"red", hsda::ChannelPolicy::fixed(0)},
      {"green", hsda::ChannelPolicy::fixed(1)},
      {"blue", hsda::ChannelPolicy::fixed(2)},
  };
  return names;
}

struct JobOptions {
  std::string input;
  std::string output;
  std::size_t k = hsda::kDefaultTopK;
  double d = hsda::kDefaultCutoff;
  std::uint64_t seed = 0;
  std::string channel = "random";
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::string manifest;
  bool overwrite = false;
  bool resume = false;
};

void add_job_command(CLI::App& app, hsda::JobMode mode, const std::string& description,
                     JobOptions& opts, std::optional<hsda::JobMode>& selected) {
  CLI::App* cmd = app.add_subcommand(std::string(hsda::mode_name(mode)), description);
  cmd->add_option("--in", opts.input, "Input directory (searched recursively)")
      ->required()
      ->check(CLI::ExistingDirectory);
  cmd->add_option("--out", opts.output, "Output directory (created if absent)")->required();
  cmd->add_option("--k", opts.k, "Number of dominant high-band coefficients to shuffle")
      ->capture_default_str();
  cmd->add_option("--d", opts.d, "Gaussian cutoff D in frequency-grid cells")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "Global seed")->envname("HSDA_SEED")->capture_default_str();
  cmd->add_option("--channel", opts.channel, "Channel to perturb or visualize")
      ->capture_default_str()
      ->check(CLI::IsMember({"random", "r", "g", "b", "red", "green", "blue"}, CLI::ignore_case));
  cmd->add_option("--workers", opts.workers, "Parallel worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--manifest", opts.manifest, "Manifest path (default <out>/manifest.jsonl)");
  cmd->add_flag("--overwrite", opts.overwrite, "Replace existing output files");
  cmd->add_flag("--resume", opts.resume, "Keep outputs already recorded with a matching hash");
  cmd->callback([&selected, mode] { selected = mode; });
}

int run_job_command(hsda::JobMode mode, const JobOptions& opts) {
  hsda::JobSpec job;
  job.input_dir = opts.input;
  job.output_dir = opts.output;
  job.mode = mode;
  job.cfg.k = opts.k;
  job.cfg.cutoff = opts.d;
  job.cfg.seed = opts.seed;
  std::string channel = opts.channel;
  std::transform(channel.begin(), channel.end(), channel.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  job.cfg.channel = channel_names().at(channel);
  job.workers = opts.workers;
  job.manifest_path = opts.manifest;
  job.overwrite = opts.overwrite;
  job.resume = opts.resume;

  const hsda::JobSummary summary = hsda::run_job(job);
  std::cout << "processed " << summary.processed << ", skipped " << summary.skipped
            << ", failed " << summary.failed << '\n';
  return summary.failed > 0 ? kExitPartial : kExitOk;
}

int run_verify_command(const std::string& manifest, const std::string& input,
                       const std::string& output, std::size_t workers) {
  const hsda::VerifyReport report = hsda::verify_manifest(manifest, input, output, workers);
  for (const auto& entry : report.entries) {
    if (entry.status == hsda::VerifyStatus::kPass) continue;
    std::cout << hsda::status_name(entry.status) << " line " << entry.line_number;
    if (!entry.dst.empty()) std::cout << " " << entry.dst;
    std::cout << ": " << entry.detail << '\n';
  }
  std::cout << "verified " << report.entries.size() << " records: "
            << report.count(hsda::VerifyStatus::kPass) << " pass, "
            << report.count(hsda::VerifyStatus::kMismatch) << " mismatch, "
            << report.count(hsda::VerifyStatus::kMissingSource) << " missing source, "
            << report.count(hsda::VerifyStatus::kMissingOutput) << " missing output, "
            << report.count(hsda::VerifyStatus::kError) << " error\n";
  return report.ok() ? kExitOk : kExitPartial;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-frequency shuffle data augmentation for image corpora"};
  app.require_subcommand(1);

  JobOptions opts;
  std::optional<hsda::JobMode> selected;
  add_job_command(app, hsda::JobMode::kAugment,
                  "Shuffle the dominant high-frequency coefficients of one channel per image",
                  opts, selected);
  add_job_command(app, hsda::JobMode::kBandLow, "Reconstruct each image from its low band only",
                  opts, selected);
  add_job_command(app, hsda::JobMode::kBandHigh, "Reconstruct each image from its high band only",
                  opts, selected);
  add_job_command(app, hsda::JobMode::kSpectrum, "Write the log-magnitude spectrum of one channel",
                  opts, selected);

  std::string verify_manifest;
  std::string verify_in;
  std::string verify_out;
  std::size_t verify_workers = 1;
  CLI::App* verify = app.add_subcommand("verify", "Replay a manifest and compare outputs byte for byte");
  verify->add_option("--manifest", verify_manifest, "Manifest to replay")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--in", verify_in, "Input root the manifest refers to")->required();
  verify->add_option("--out", verify_out, "Output root the manifest refers to")->required();
  verify->add_option("--workers", verify_workers, "Parallel worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify_command(verify_manifest, verify_in, verify_out, verify_workers);
    return run_job_command(*selected, opts);
  } catch (const hsda::JobError& e) {
    std::cerr << "hsda: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hsda::ManifestError& e) {
    std::cerr << "hsda: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hsda: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hsda: " << e.what() << '\n';
    return kExitPartial;
  }
}
