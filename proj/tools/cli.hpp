#pragma once

// The specht command-line interface as a library: configuration, the Gram matrix
// cache and the subcommands.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "specht/gram.hpp"

namespace specht::cli {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> partitions;
  std::string ring = "Q";
  std::vector<std::uint32_t> primes;
  int n = 0;
  int k = 0;
  int n_max = 0;
  std::string cache_dir;  // empty: SPECHT_CACHE_DIR or the default location
  bool use_cache = true;
  OutputFormat format = OutputFormat::Text;
  double time_budget_seconds = 10.0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand, writing results to out and diagnostics to err.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

std::filesystem::path resolve_cache_dir(const std::string& configured);

// One JSON file per Gram matrix, keyed by (n, lambda, basis order version), with a
// crc32 of the payload. Writes go through a temporary file and an atomic rename.
class GramCache {
 public:
  explicit GramCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(const tableaux::Partition& lambda) const;

  // Empty when missing or invalid; invalid entries are reported to err.
  std::optional<gram::GramMatrix> load(const tableaux::Partition& lambda, std::ostream& err) const;
  void store(const gram::GramMatrix& g) const;
  gram::GramMatrix get_or_compute(const tableaux::Partition& lambda, std::ostream& err) const;

 private:
  std::filesystem::path dir_;
};

std::uint32_t payload_checksum(const std::string& payload);

struct ReferenceRow {
  int n;
  const char* partition;
  const char* chain;
};

// Reference elementary divisors of G(lambda) over Q[q, q^-1] for 4 <= n <= 9.
const std::vector<ReferenceRow>& reference_table();

}  // namespace specht::cli
