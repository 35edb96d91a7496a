#include "hsda/manifest.h"

#include <json.hpp>

#include <string>

namespace hsda {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

const Json& require_key(const Json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) throw ManifestError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string require_string(const Json& object, const char* key) {
  const Json& value = require_key(object, key);
  if (!value.is_string()) throw ManifestError(std::string("\"") + key + "\" must be a string");
  return value.get<std::string>();
}

std::optional<std::size_t> optional_count(const Json& object, const char* key) {
  const Json& value = require_key(object, key);
  if (value.is_null()) return std::nullopt;
  if (!value.is_number_unsigned()) {
    throw ManifestError(std::string("\"") + key + "\" must be a non-negative integer or null");
  }
  return value.get<std::size_t>();
}

}  // namespace

std::string_view mode_name(JobMode mode) {
  switch (mode) {
    case JobMode::kAugment: return "augment";
    case JobMode::kBandLow: return "band-low";
    case JobMode::kBandHigh: return "band-high";
    case JobMode::kSpectrum: return "spectrum";
  }
  return "unknown";
}

std::optional<JobMode> parse_mode(std::string_view name) {
  for (const JobMode mode :
       {JobMode::kAugment, JobMode::kBandLow, JobMode::kBandHigh, JobMode::kSpectrum}) {
    if (mode_name(mode) == name) return mode;
  }
  return std::nullopt;
}

std::string to_json_line(const ManifestRecord& record) {
  Json j;
  j["src"] = record.src;
  j["dst"] = record.dst;
  j["mode"] = std::string(mode_name(record.mode));
  j["channel"] = optional_json(record.channel);
  j["k"] = optional_json(record.k);
  j["d"] = optional_json(record.d);
  j["seed_effective"] = record.seed_effective;
  j["sha256_dst"] = record.sha256_dst;
  return j.dump();
}

ManifestRecord parse_manifest_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ManifestError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ManifestError("manifest line is not a JSON object");

  ManifestRecord record;
  record.src = require_string(j, "src");
  record.dst = require_string(j, "dst");
  const std::string mode = require_string(j, "mode");
  const auto parsed_mode = parse_mode(mode);
  if (!parsed_mode) throw ManifestError("unknown mode \"" + mode + "\"");
  record.mode = *parsed_mode;
  record.channel = optional_count(j, "channel");
  record.k = optional_count(j, "k");

  const Json& d = require_key(j, "d");
  if (!d.is_null()) {
    if (!d.is_number()) throw ManifestError("\"d\" must be a number or null");
    record.d = d.get<double>();
  }

  const Json& seed = require_key(j, "seed_effective");
  if (!seed.is_number_unsigned()) throw ManifestError("\"seed_effective\" must be an unsigned integer");
  record.seed_effective = seed.get<std::uint64_t>();
  record.sha256_dst = require_string(j, "sha256_dst");
  return record;
}

std::vector<ManifestLine> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest " + path.string());

  std::vector<ManifestLine> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    ManifestLine line;
    line.line_number = number;
    try {
      line.record = parse_manifest_line(text);
    } catch (const ManifestError& e) {
      line.error = e.what();
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

ManifestWriter::ManifestWriter(const std::filesystem::path& path, Mode mode) : path_(path) {
  out_.open(path, mode == Mode::kAppend ? std::ios::app : std::ios::trunc);
  if (!out_) throw ManifestError("cannot open manifest " + path.string() + " for writing");
}

void ManifestWriter::append(const ManifestRecord& record) {
  const std::string line = to_json_line(record) + "\n";
  std::lock_guard lock(mutex_);
  out_ << line;
  out_.flush();
  if (!out_) throw ManifestError("write error on manifest " + path_.string());
}

void write_manifest(const std::filesystem::path& path, const std::vector<ManifestRecord>& records) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ManifestError("cannot open " + tmp.string() + " for writing");
    for (const auto& record : records) out << to_json_line(record) << '\n';
    out.flush();
    if (!out) throw ManifestError("write error on " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hsda
