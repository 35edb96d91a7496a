// Drives the hsda executable end to end: exit codes, seed precedence, verify.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <string>

#include "corpus.h"
#include "hsda/digest.h"
#include "hsda/manifest.h"
#include "temp_dir.h"

namespace hsda {
namespace {

using testing::TempDir;

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + HSDA_CLI_PATH + " " + args +
                          " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string dirs(const TempDir& in, const TempDir& out) {
  return "--in " + in.path().string() + " --out " + out.path().string();
}

TEST(Cli, UsageErrorsExitTwo) {
  TempDir in, out;
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("sharpen " + dirs(in, out)), 2);
  EXPECT_EQ(run("augment --out " + out.path().string()), 2);
  EXPECT_EQ(run("augment " + dirs(in, out) + " --k lots"), 2);
  EXPECT_EQ(run("augment " + dirs(in, out) + " --d 0"), 2);
  EXPECT_EQ(run("augment " + dirs(in, out) + " --workers 0"), 2);
  EXPECT_EQ(run("augment " + dirs(in, out) + " --channel purple"), 2);
  EXPECT_EQ(run("augment --in " + in.path().string() + " --out " + (in / "sub").string()), 2);
  EXPECT_EQ(run("verify --manifest " + (out / "none.jsonl").string() + " " + dirs(in, out)), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST(Cli, AugmentThenVerify) {
  TempDir in, out;
  testing::write_image_corpus(in.path(), 3);
  EXPECT_EQ(run("augment " + dirs(in, out) + " --seed 5 --workers 2"), 0);
  const auto lines = read_manifest(out / "manifest.jsonl");
  ASSERT_EQ(lines.size(), 4u);
  for (const auto& l : lines) {
    EXPECT_EQ(l.record->k, 2000u);
    EXPECT_EQ(l.record->d, 10.0);
    EXPECT_EQ(l.record->seed_effective, derive_seed(5, l.record->src));
  }
  const std::string manifest = (out / "manifest.jsonl").string();
  EXPECT_EQ(run("verify --manifest " + manifest + " " + dirs(in, out)), 0);

  auto bytes = read_file(out / "chelsea.png");
  bytes[bytes.size() / 2] ^= 0x10;
  write_file(out / "chelsea.png", bytes);
  EXPECT_EQ(run("verify --manifest " + manifest + " " + dirs(in, out)), 1);
}

TEST(Cli, PartialFailureExitsOne) {
  TempDir in, out;
  testing::write_image_corpus(in.path(), 1);
  std::ofstream(in / "corrupt.jpg") << "xx";
  EXPECT_EQ(run("augment " + dirs(in, out)), 1);
  // Rerun without --overwrite collides with the existing outputs.
  EXPECT_EQ(run("band-low " + dirs(in, out)), 1);
}

TEST(Cli, SeedFlagBeatsEnvironment) {
  TempDir in, from_env, from_flag, both;
  testing::write_image_corpus(in.path(), 2);
  EXPECT_EQ(run("augment " + dirs(in, from_env), "HSDA_SEED=77"), 0);
  EXPECT_EQ(run("augment " + dirs(in, from_flag) + " --seed 77"), 0);
  EXPECT_EQ(run("augment " + dirs(in, both) + " --seed 77", "HSDA_SEED=3"), 0);
  EXPECT_EQ(testing::snapshot(from_env.path()), testing::snapshot(from_flag.path()));
  EXPECT_EQ(testing::snapshot(both.path()), testing::snapshot(from_flag.path()));
}

TEST(Cli, ModesAndOptionsReachTheManifest) {
  TempDir in;
  testing::write_image_corpus(in.path(), 1);
  {
    TempDir out;
    const auto manifest = out / "custom.jsonl";
    EXPECT_EQ(run("augment " + dirs(in, out) + " --k 300 --d 5 --channel g --manifest " +
                  manifest.string()),
              0);
    for (const auto& l : read_manifest(manifest)) {
      EXPECT_EQ(l.record->k, 300u);
      EXPECT_EQ(l.record->d, 5.0);
      EXPECT_EQ(l.record->channel, 1u);
    }
  }
  for (const std::string mode : {"band-low", "band-high", "spectrum"}) {
    TempDir out;
    EXPECT_EQ(run(mode + " " + dirs(in, out) + " --channel B"), 0) << mode;
    const auto lines = read_manifest(out / "manifest.jsonl");
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(mode_name(lines[0].record->mode), mode);
    EXPECT_EQ(run("verify --manifest " + (out / "manifest.jsonl").string() + " " + dirs(in, out)),
              0);
  }
}

TEST(Cli, ResumeFlagKeepsFinishedOutputs) {
  TempDir in, out;
  testing::write_image_corpus(in.path(), 3);
  EXPECT_EQ(run("augment " + dirs(in, out)), 0);
  const auto first = testing::snapshot(out.path());
  std::filesystem::remove(out / "cam1/seq/frame_1.png");
  EXPECT_EQ(run("augment " + dirs(in, out) + " --resume"), 0);
  EXPECT_EQ(testing::snapshot(out.path()), first);
}

}  // namespace
}  // namespace hsda
