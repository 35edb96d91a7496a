#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hsda/augment.h"
#include "hsda/manifest.h"

namespace hsda {

/// Invalid job configuration (missing input root, nested roots, zero workers).
class JobError : public std::runtime_error {
 public:
  explicit JobError(const std::string& what) : std::runtime_error(what) {}
};

using LogSink = std::function<void(std::string_view)>;

/// Thread-safe sink writing one line per message to stderr.
LogSink stderr_log();

struct JobSpec {
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  JobMode mode = JobMode::kAugment;
  AugmentConfig cfg;
  std::size_t workers = 1;
  /// Defaults to <output_dir>/manifest.jsonl when empty.
  std::filesystem::path manifest_path;
  bool overwrite = false;
  /// Keep outputs whose manifest record and content hash still match.
  bool resume = false;
  LogSink log;
};

struct JobSummary {
  std::size_t processed = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  bool operator==(const JobSummary&) const = default;
};

/// Processes every PNG/JPEG under the input root in `mode` and mirrors the
/// directory structure under the output root as PNG files. Each source gets
/// seed derive_seed(cfg.seed, relative path), so outputs do not depend on the
/// worker count or traversal order. The manifest ends up sorted by source
/// path with one record per output.
///
/// Files that are not images, or are grayscale or carry alpha, are skipped.
/// Unreadable or corrupt files, and outputs that already exist without
/// `overwrite`, count as failed; the job continues either way. Throws
/// JobError for an invalid spec.
JobSummary run_job(const JobSpec& job);

/// Output path for a source path: same directories, extension replaced by ".png".
std::string output_name(std::string_view relative_source);

/// Runs one mode on a decoded image. Returns the encoded PNG and the channel
/// used (empty for band modes).
struct RenderedOutput {
  std::vector<std::uint8_t> png;
  std::optional<std::size_t> channel;
};
RenderedOutput render(const RasterImage& image, JobMode mode, const AugmentConfig& cfg,
                      std::uint64_t seed, FilterBank& bank = FilterBank::global());

enum class VerifyStatus { kPass, kMismatch, kMissingSource, kMissingOutput, kError };
std::string_view status_name(VerifyStatus status);

struct VerifyEntry {
  std::size_t line_number = 0;
  std::string dst;
  VerifyStatus status = VerifyStatus::kError;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  std::size_t count(VerifyStatus status) const;
  bool ok() const { return count(VerifyStatus::kPass) == entries.size(); }
};

/// Regenerates each record's output from its source and effective seed and
/// compares it with the file on disk and the recorded hash. Problems are
/// reported per record; only an unreadable manifest throws (ManifestError).
VerifyReport verify_manifest(const std::filesystem::path& manifest_path,
                             const std::filesystem::path& input_root,
                             const std::filesystem::path& output_root, std::size_t workers = 1);

}  // namespace hsda
