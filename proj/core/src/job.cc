#include "hsda/job.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <system_error>
#include <thread>

#include "hsda/digest.h"
#include "hsda/errors.h"
#include "hsda/image_io.h"

namespace hsda {
namespace fs = std::filesystem;

namespace {

constexpr std::string_view kPartialSuffix = ".hsda-partial";

// Runs fn(i) for i in [0, n) on up to `workers` threads pulling from a shared counter.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  const std::size_t threads = std::min(workers, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(loop);
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool has_image_extension(const fs::path& path) {
  const std::string ext = lowercase(path.extension().string());
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

// True if `inner` equals `outer` or lies below it. Both must be canonical.
bool is_within(const fs::path& inner, const fs::path& outer) {
  auto in_it = inner.begin();
  for (auto out_it = outer.begin(); out_it != outer.end(); ++out_it, ++in_it) {
    if (in_it == inner.end() || *in_it != *out_it) return false;
  }
  return true;
}

bool is_safe_relative(std::string_view rel) {
  const fs::path p(rel);
  if (rel.empty() || p.is_absolute() || p.has_root_name()) return false;
  return std::none_of(p.begin(), p.end(), [](const fs::path& part) { return part == ".."; });
}

void write_atomically(const fs::path& dst, std::span<const std::uint8_t> bytes) {
  fs::create_directories(dst.parent_path());
  fs::path partial = dst;
  partial += kPartialSuffix;
  write_file(partial, bytes);
  fs::rename(partial, dst);
}

void remove_partials(const fs::path& root) {
  std::vector<fs::path> stale;
  for (const auto& entry :
       fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied)) {
    if (entry.is_regular_file() && entry.path().string().ends_with(kPartialSuffix)) {
      stale.push_back(entry.path());
    }
  }
  for (const auto& path : stale) fs::remove(path);
}

// The manifest fields implied by the job for one source, without the hash.
ManifestRecord expected_record(const JobSpec& job, const std::string& src, const std::string& dst,
                               std::uint64_t seed) {
  ManifestRecord r;
  r.src = src;
  r.dst = dst;
  r.mode = job.mode;
  r.seed_effective = seed;
  switch (job.mode) {
    case JobMode::kAugment:
      r.channel = draw_channel(job.cfg.channel, seed).channel;
      r.k = job.cfg.k;
      r.d = job.cfg.cutoff;
      break;
    case JobMode::kBandLow:
    case JobMode::kBandHigh:
      r.d = job.cfg.cutoff;
      break;
    case JobMode::kSpectrum:
      r.channel = draw_channel(job.cfg.channel, seed).channel;
      break;
  }
  return r;
}

enum class Outcome { kProcessed, kSkipped, kFailed };

struct Task {
  std::string src;
  std::string dst;
  std::string precheck;  // non-empty: fail without touching the file
  bool not_an_image = false;
};

struct TaskResult {
  Outcome outcome = Outcome::kFailed;
  std::optional<ManifestRecord> record;
};

}  // namespace

LogSink stderr_log() {
  auto mutex = std::make_shared<std::mutex>();
  return [mutex](std::string_view message) {
    std::lock_guard lock(*mutex);
    std::cerr << "hsda: " << message << '\n';
  };
}

std::string output_name(std::string_view relative_source) {
  fs::path p(relative_source);
  p.replace_extension(".png");
  return p.generic_string();
}

RenderedOutput render(const RasterImage& image, JobMode mode, const AugmentConfig& cfg,
                      std::uint64_t seed, FilterBank& bank) {
  switch (mode) {
    case JobMode::kAugment: {
      const AugmentResult result = hsda_augment(image, cfg, seed, bank);
      return {encode_png(result.image), result.record.channel};
    }
    case JobMode::kBandLow:
      return {encode_png(reconstruct_band(image, cfg.cutoff, Band::kLow, bank)), std::nullopt};
    case JobMode::kBandHigh:
      return {encode_png(reconstruct_band(image, cfg.cutoff, Band::kHigh, bank)), std::nullopt};
    case JobMode::kSpectrum: {
      const std::size_t channel = draw_channel(cfg.channel, seed).channel;
      return {encode_png(spectrum_visual(image, channel)), channel};
    }
  }
  throw InvalidParameter("unknown job mode");
}

JobSummary run_job(const JobSpec& job) {
  if (job.workers == 0) throw JobError("worker count must be at least 1");
  try {
    job.cfg.validate();
  } catch (const InvalidParameter& e) {
    throw JobError(e.what());
  }
  std::error_code ec;
  if (!fs::is_directory(job.input_dir, ec)) {
    throw JobError("input directory " + job.input_dir.string() + " does not exist");
  }
  fs::create_directories(job.output_dir, ec);
  if (ec) throw JobError("cannot create output directory " + job.output_dir.string());

  const fs::path in_root = fs::canonical(job.input_dir);
  const fs::path out_root = fs::canonical(job.output_dir);
  if (is_within(out_root, in_root) || is_within(in_root, out_root)) {
    throw JobError("input and output directories must not contain one another");
  }
  const fs::path manifest_path =
      job.manifest_path.empty() ? out_root / "manifest.jsonl" : job.manifest_path;
  if (is_within(fs::weakly_canonical(manifest_path), in_root)) {
    throw JobError("manifest must not be written inside the input directory");
  }
  const LogSink log = job.log ? job.log : stderr_log();

  // Later lines win, so an appended re-run supersedes an interrupted one.
  std::map<std::string, ManifestRecord> previous;
  if (job.resume && fs::exists(manifest_path)) {
    for (const auto& line : read_manifest(manifest_path)) {
      if (line.record) previous[line.record->dst] = *line.record;
    }
  }
  remove_partials(out_root);

  std::vector<std::string> sources;
  for (const auto& entry :
       fs::recursive_directory_iterator(in_root, fs::directory_options::skip_permission_denied)) {
    if (entry.is_regular_file()) sources.push_back(entry.path().lexically_relative(in_root).generic_string());
  }
  std::sort(sources.begin(), sources.end());

  std::vector<Task> tasks;
  std::set<std::string> claimed;
  for (const auto& src : sources) {
    Task task{src, {}, {}, false};
    if (!has_image_extension(src)) {
      task.not_an_image = true;
    } else {
      task.dst = output_name(src);
      if (!claimed.insert(task.dst).second) {
        task.precheck = "output " + task.dst + " is already produced by another source";
      }
    }
    tasks.push_back(std::move(task));
  }

  ManifestWriter writer(manifest_path, job.resume ? ManifestWriter::Mode::kAppend
                                                  : ManifestWriter::Mode::kTruncate);
  FilterBank bank;
  std::vector<TaskResult> results(tasks.size());

  auto process = [&](std::size_t index) {
    const Task& task = tasks[index];
    TaskResult& result = results[index];
    if (task.not_an_image) {
      log("skipped " + task.src + ": unsupported format");
      result.outcome = Outcome::kSkipped;
      return;
    }
    if (!task.precheck.empty()) {
      log("failed " + task.src + ": " + task.precheck);
      return;
    }
    try {
      const std::uint64_t seed = derive_seed(job.cfg.seed, task.src);
      ManifestRecord record = expected_record(job, task.src, task.dst, seed);
      const fs::path dst_path = out_root / fs::path(task.dst);

      if (job.resume) {
        if (auto it = previous.find(task.dst); it != previous.end() && fs::exists(dst_path)) {
          ManifestRecord old = it->second;
          const std::string old_hash = old.sha256_dst;
          old.sha256_dst.clear();
          if (old == record && sha256_hex(read_file(dst_path)) == old_hash) {
            record.sha256_dst = old_hash;
            result = {Outcome::kProcessed, std::move(record)};
            return;
          }
        }
      } else if (!job.overwrite && fs::exists(dst_path)) {
        log("failed " + task.src + ": output " + task.dst + " already exists (use --overwrite)");
        return;
      }

      const std::vector<std::uint8_t> bytes = read_file(in_root / fs::path(task.src));
      if (sniff_format(bytes) == ImageFormat::kUnknown) {
        log("failed " + task.src + ": not a valid PNG or JPEG file");
        return;
      }
      const RasterImage image = decode_image(bytes);
      const RenderedOutput output = render(image, job.mode, job.cfg, seed, bank);
      write_atomically(dst_path, output.png);

      record.sha256_dst = sha256_hex(output.png);
      writer.append(record);
      result = {Outcome::kProcessed, std::move(record)};
    } catch (const UnsupportedImage& e) {
      log("skipped " + task.src + ": " + e.what());
      result.outcome = Outcome::kSkipped;
    } catch (const std::exception& e) {
      log("failed " + task.src + ": " + e.what());
      result.outcome = Outcome::kFailed;
    }
  };
  parallel_for(tasks.size(), job.workers, process);

  JobSummary summary;
  std::vector<ManifestRecord> records;
  for (auto& result : results) {
    switch (result.outcome) {
      case Outcome::kProcessed:
        ++summary.processed;
        records.push_back(std::move(*result.record));
        break;
      case Outcome::kSkipped: ++summary.skipped; break;
      case Outcome::kFailed: ++summary.failed; break;
    }
  }
  // Tasks are already in source order; rewrite so the file is independent of completion order.
  write_manifest(manifest_path, records);
  return summary;
}

std::string_view status_name(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::kPass: return "pass";
    case VerifyStatus::kMismatch: return "mismatch";
    case VerifyStatus::kMissingSource: return "missing-source";
    case VerifyStatus::kMissingOutput: return "missing-output";
    case VerifyStatus::kError: return "error";
  }
  return "unknown";
}

std::size_t VerifyReport::count(VerifyStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const VerifyEntry& e) { return e.status == status; }));
}

VerifyReport verify_manifest(const fs::path& manifest_path, const fs::path& input_root,
                             const fs::path& output_root, std::size_t workers) {
  const std::vector<ManifestLine> lines = read_manifest(manifest_path);
  VerifyReport report;
  report.entries.resize(lines.size());
  FilterBank bank;

  auto check = [&](std::size_t index) {
    const ManifestLine& line = lines[index];
    VerifyEntry& entry = report.entries[index];
    entry.line_number = line.line_number;
    if (!line.record) {
      entry.status = VerifyStatus::kError;
      entry.detail = line.error;
      return;
    }
    const ManifestRecord& rec = *line.record;
    entry.dst = rec.dst;
    if (!is_safe_relative(rec.src) || !is_safe_relative(rec.dst)) {
      entry.status = VerifyStatus::kError;
      entry.detail = "paths must be relative and stay inside their roots";
      return;
    }

    const fs::path src_path = input_root / fs::path(rec.src);
    const fs::path dst_path = output_root / fs::path(rec.dst);
    if (!fs::is_regular_file(src_path)) {
      entry.status = VerifyStatus::kMissingSource;
      entry.detail = "source " + rec.src + " not found";
      return;
    }
    if (!fs::is_regular_file(dst_path)) {
      entry.status = VerifyStatus::kMissingOutput;
      entry.detail = "output " + rec.dst + " not found";
      return;
    }

    try {
      AugmentConfig cfg;
      const bool needs_channel = rec.mode == JobMode::kAugment || rec.mode == JobMode::kSpectrum;
      const bool needs_d = rec.mode != JobMode::kSpectrum;
      if ((needs_channel && !rec.channel) || (rec.mode == JobMode::kAugment && !rec.k) ||
          (needs_d && !rec.d)) {
        throw ManifestError("record lacks a field its mode requires");
      }
      if (rec.channel) cfg.channel = ChannelPolicy::fixed(*rec.channel);
      if (rec.k) cfg.k = *rec.k;
      if (rec.d) cfg.cutoff = *rec.d;

      const RasterImage image = decode_image(read_file(src_path));
      const RenderedOutput regenerated = render(image, rec.mode, cfg, rec.seed_effective, bank);
      const std::vector<std::uint8_t> on_disk = read_file(dst_path);

      if (regenerated.png != on_disk) {
        entry.status = VerifyStatus::kMismatch;
        entry.detail = "output bytes differ from the regenerated image";
      } else if (sha256_hex(on_disk) != rec.sha256_dst) {
        entry.status = VerifyStatus::kMismatch;
        entry.detail = "output hash differs from sha256_dst";
      } else {
        entry.status = VerifyStatus::kPass;
      }
    } catch (const std::exception& e) {
      entry.status = VerifyStatus::kError;
      entry.detail = e.what();
    }
  };
  parallel_for(lines.size(), std::max<std::size_t>(workers, 1), check);
  return report;
}

}  // namespace hsda
