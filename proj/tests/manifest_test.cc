#include "hsda/manifest.h"

#include <gtest/gtest.h>

#include <json.hpp>

#include "temp_dir.h"

namespace hsda {
namespace {

ManifestRecord sample_record() {
  ManifestRecord r;
  r.src = "cam/front/0001.jpg";
  r.dst = "cam/front/0001.png";
  r.mode = JobMode::kAugment;
  r.channel = 1;
  r.k = 2000;
  r.d = 10.0;
  r.seed_effective = 18446744073709551557ull;  // above 2^53: must survive exactly
  r.sha256_dst = std::string(64, 'a');
  return r;
}

TEST(Manifest, LineHasExactlyTheDocumentedKeys) {
  const auto j = nlohmann::json::parse(to_json_line(sample_record()));
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"channel", "d", "dst", "k", "mode", "seed_effective",
                                            "sha256_dst", "src"}));
  EXPECT_EQ(j["k"], 2000);
  EXPECT_EQ(j["d"], 10.0);
  EXPECT_EQ(j["mode"], "augment");
}

TEST(Manifest, ParseInvertsSerialize) {
  ManifestRecord band = sample_record();
  band.mode = JobMode::kBandHigh;
  band.channel.reset();
  band.k.reset();
  band.d = 0.1 + 0.2;  // not representable in few digits
  for (const ManifestRecord& r : {sample_record(), band}) {
    const std::string line = to_json_line(r);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    EXPECT_EQ(parse_manifest_line(line), r);
  }
}

TEST(Manifest, MalformedLinesAreRejected) {
  EXPECT_THROW(parse_manifest_line("{not json"), ManifestError);
  EXPECT_THROW(parse_manifest_line("[1,2]"), ManifestError);
  EXPECT_THROW(parse_manifest_line(R"({"src":"a"})"), ManifestError);
  nlohmann::json j = nlohmann::json::parse(to_json_line(sample_record()));
  j["mode"] = "sharpen";
  EXPECT_THROW(parse_manifest_line(j.dump()), ManifestError);
  j["mode"] = "augment";
  j["k"] = -3;
  EXPECT_THROW(parse_manifest_line(j.dump()), ManifestError);
}

TEST(Manifest, ModeNamesRoundTrip) {
  for (const JobMode m :
       {JobMode::kAugment, JobMode::kBandLow, JobMode::kBandHigh, JobMode::kSpectrum}) {
    EXPECT_EQ(parse_mode(mode_name(m)), m);
  }
  EXPECT_FALSE(parse_mode("blur").has_value());
}

TEST(Manifest, ReadReportsBadLinesIndividually) {
  testing::TempDir dir;
  const auto path = dir / "m.jsonl";
  {
    ManifestWriter w(path, ManifestWriter::Mode::kTruncate);
    w.append(sample_record());
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "\n{garbage\n";
  }
  {
    ManifestWriter w(path, ManifestWriter::Mode::kAppend);
    w.append(sample_record());
  }
  const auto lines = read_manifest(path);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_TRUE(lines[0].record.has_value());
  EXPECT_FALSE(lines[1].record.has_value());
  EXPECT_EQ(lines[1].line_number, 3u);
  EXPECT_FALSE(lines[1].error.empty());
  EXPECT_TRUE(lines[2].record.has_value());
  EXPECT_THROW(read_manifest(dir / "absent.jsonl"), ManifestError);
}

TEST(Manifest, WriteManifestReplacesContents) {
  testing::TempDir dir;
  const auto path = dir / "m.jsonl";
  write_manifest(path, {sample_record(), sample_record()});
  write_manifest(path, {sample_record()});
  EXPECT_EQ(read_manifest(path).size(), 1u);
  write_manifest(path, {});
  EXPECT_TRUE(read_manifest(path).empty());
}

}  // namespace
}  // namespace hsda
