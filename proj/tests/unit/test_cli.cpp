#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;
using namespace specht::cli;
using specht::tableaux::Partition;

class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(fs::temp_directory_path() / ("specht-test-" + std::to_string(::getpid()) + "-" + name)) {
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct Result {
  int rc;
  std::string out;
  std::string err;
};

Result run(RunConfig cfg) {
  std::ostringstream out, err;
  const int rc = run_command(cfg, out, err);
  return {rc, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text, bool skip_comments) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || (skip_comments && line[0] == '#')) continue;
    out.push_back(line);
  }
  return out;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(Cache, RoundTrip) {
  TempDir dir("roundtrip");
  const GramCache cache(dir.path());
  const Partition l({3, 2});
  std::ostringstream err;
  EXPECT_FALSE(cache.load(l, err).has_value());
  const auto g = specht::gram::gram_matrix(l);
  cache.store(g);
  EXPECT_EQ(cache.entry_path(l).filename().string(), "gram_n5_3-2_v" + std::to_string(specht::gram::kBasisOrderVersion) + ".json");
  const auto back = cache.load(l, err);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, g);
  EXPECT_TRUE(err.str().empty());
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    EXPECT_EQ(entry.path().extension(), ".json") << "leftover temporary " << entry.path();
  }
}

TEST(Cache, CorruptEntryIsDiscardedAndRecomputed) {
  TempDir dir("corrupt");
  const GramCache cache(dir.path());
  const Partition l({2, 2, 1});
  const auto g = specht::gram::gram_matrix(l);
  cache.store(g);

  auto entry = nlohmann::json::parse(read_file(cache.entry_path(l)));
  entry["crc32"] = entry["crc32"].get<std::uint32_t>() ^ 1u;
  std::ofstream(cache.entry_path(l), std::ios::trunc) << entry.dump();

  std::ostringstream err;
  EXPECT_FALSE(cache.load(l, err).has_value());
  EXPECT_NE(err.str().find("checksum mismatch"), std::string::npos);

  std::ostringstream err2;
  EXPECT_EQ(cache.get_or_compute(l, err2), g);
  std::ostringstream err3;
  EXPECT_TRUE(cache.load(l, err3).has_value());
  EXPECT_TRUE(err3.str().empty());

  std::ofstream(cache.entry_path(l), std::ios::trunc) << "{\"key\":";
  std::ostringstream err4;
  EXPECT_FALSE(cache.load(l, err4).has_value());
  EXPECT_NE(err4.str().find("discarding"), std::string::npos);
}

TEST(Cache, EntryForAnotherPartitionIsRejected) {
  TempDir dir("wrongkey");
  const GramCache cache(dir.path());
  cache.store(specht::gram::gram_matrix(Partition({3, 1})));
  fs::rename(cache.entry_path(Partition({3, 1})), cache.entry_path(Partition({2, 2})));
  std::ostringstream err;
  EXPECT_FALSE(cache.load(Partition({2, 2}), err).has_value());
  EXPECT_NE(err.str().find("key mismatch"), std::string::npos);
}

TEST(Cache, WarmRunMatchesColdRun) {
  TempDir dir("warm");
  const GramCache cache(dir.path());
  const Partition l({4, 3, 1});
  std::ostringstream err;
  const auto t0 = std::chrono::steady_clock::now();
  const auto cold = cache.get_or_compute(l, err);
  const auto t1 = std::chrono::steady_clock::now();
  const auto warm = cache.get_or_compute(l, err);
  const auto t2 = std::chrono::steady_clock::now();
  EXPECT_EQ(cold, warm);
  EXPECT_TRUE(err.str().empty());
  std::cout << "[ info ] cold " << std::chrono::duration<double>(t1 - t0).count() << " s, warm "
            << std::chrono::duration<double>(t2 - t1).count() << " s\n";
}

TEST(Cache, ChecksumIsCrc32) {
  EXPECT_EQ(payload_checksum(""), 0u);
  EXPECT_EQ(payload_checksum("123456789"), 0xCBF43926u);
}

TEST(Cache, DirectoryResolution) {
  EXPECT_EQ(resolve_cache_dir("/tmp/explicit"), fs::path("/tmp/explicit"));
  ::setenv("SPECHT_CACHE_DIR", "/tmp/from-env", 1);
  EXPECT_EQ(resolve_cache_dir(""), fs::path("/tmp/from-env"));
  EXPECT_EQ(resolve_cache_dir("/tmp/explicit"), fs::path("/tmp/explicit"));
  ::unsetenv("SPECHT_CACHE_DIR");
  EXPECT_FALSE(resolve_cache_dir("").empty());
}

TEST(Commands, TableMatchesGoldenFile) {
  RunConfig cfg;
  cfg.subcommand = "table";
  cfg.n_max = 9;
  cfg.use_cache = false;
  const auto r = run(cfg);
  EXPECT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out, false), lines(read_file(fs::path(SPECHT_GOLDEN_DIR) / "table_n9.txt"), true));
  EXPECT_EQ(reference_table().size(), lines(r.out, false).size());
}

TEST(Commands, OutputIsDeterministicAndCacheIndependent) {
  TempDir dir("determinism");
  RunConfig cfg;
  cfg.subcommand = "snf";
  cfg.partitions = {"3,2,1"};
  cfg.ring = "Fp:3";
  cfg.format = OutputFormat::Json;
  cfg.cache_dir = dir.path().string();
  const auto cold = run(cfg);
  const auto warm = run(cfg);
  cfg.use_cache = false;
  const auto uncached = run(cfg);
  EXPECT_EQ(cold.rc, kExitOk) << cold.err;
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(cold.out, uncached.out);
  EXPECT_FALSE(fs::is_empty(dir.path()));
}

TEST(Commands, SnfText) {
  RunConfig cfg;
  cfg.subcommand = "snf";
  cfg.partitions = {"3,1"};
  cfg.ring = "Z";
  cfg.use_cache = false;
  const auto r = run(cfg);
  EXPECT_EQ(r.rc, kExitOk);
  EXPECT_EQ(r.out, "(3,1) Z: -[1]-> 2 -[2^2]-> 1\n");
}

TEST(Commands, HooksReportMatch) {
  RunConfig cfg;
  cfg.subcommand = "hooks";
  cfg.n = 5;
  cfg.k = 2;
  const auto r = run(cfg);
  EXPECT_EQ(r.rc, kExitOk) << r.err;
  EXPECT_NE(r.out.find("certificate: accepted"), std::string::npos);
  EXPECT_NE(r.out.find("\nmatch\n"), std::string::npos);
}

TEST(Commands, ExitCodes) {
  RunConfig bad_partition;
  bad_partition.subcommand = "snf";
  bad_partition.partitions = {"1,2"};
  bad_partition.use_cache = false;
  EXPECT_EQ(run(bad_partition).rc, kExitUsage);

  RunConfig bad_ring = bad_partition;
  bad_ring.partitions = {"2,1"};
  bad_ring.ring = "Fp:4";
  EXPECT_EQ(run(bad_ring).rc, kExitUsage);

  RunConfig unknown;
  unknown.subcommand = "frobnicate";
  EXPECT_EQ(run(unknown).rc, kExitUsage);

  TempDir dir("unwritable");
  std::ofstream(dir.path()) << "a file where the cache directory should be";
  RunConfig blocked = bad_ring;
  blocked.ring = "Q";
  blocked.use_cache = true;
  blocked.cache_dir = (dir.path() / "sub").string();
  const auto r = run(blocked);
  EXPECT_EQ(r.rc, kExitMismatch);
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
