#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsda {

enum class JobMode { kAugment, kBandLow, kBandHigh, kSpectrum };

/// "augment", "band-low", "band-high", "spectrum".
std::string_view mode_name(JobMode mode);
std::optional<JobMode> parse_mode(std::string_view name);

/// One line of the manifest. Keys on disk: src, dst, mode, channel, k, d,
/// seed_effective, sha256_dst. Fields that do not apply to a mode are null
/// (band modes have no channel or k, spectrum has no k or d).
struct ManifestRecord {
  std::string src;  // relative to the input root, '/' separated
  std::string dst;  // relative to the output root
  JobMode mode = JobMode::kAugment;
  std::optional<std::size_t> channel;
  std::optional<std::size_t> k;
  std::optional<double> d;
  std::uint64_t seed_effective = 0;
  std::string sha256_dst;

  bool operator==(const ManifestRecord&) const = default;
};

class ManifestError : public std::runtime_error {
 public:
  explicit ManifestError(const std::string& what) : std::runtime_error(what) {}
};

/// Single-line JSON object, no trailing newline.
std::string to_json_line(const ManifestRecord& record);

/// Throws ManifestError on malformed JSON, missing keys or wrong types.
ManifestRecord parse_manifest_line(std::string_view line);

struct ManifestLine {
  std::size_t line_number = 0;  // 1-based
  std::optional<ManifestRecord> record;
  std::string error;  // set when record is empty
};

/// Every non-blank line of the file, parsed independently. Throws
/// ManifestError if the file cannot be opened.
std::vector<ManifestLine> read_manifest(const std::filesystem::path& path);

/// Append-only line sink shared by worker threads. Each append is flushed
/// so an interrupted job leaves only whole lines behind.
class ManifestWriter {
 public:
  enum class Mode { kTruncate, kAppend };
  ManifestWriter(const std::filesystem::path& path, Mode mode);

  void append(const ManifestRecord& record);

 private:
  std::mutex mutex_;
  std::ofstream out_;
  std::filesystem::path path_;
};

/// Replaces the file with `records`, one per line, via a temporary file and rename.
void write_manifest(const std::filesystem::path& path, const std::vector<ManifestRecord>& records);

}  // namespace hsda
