#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>
#include <zlib.h>

#include "cli.hpp"
#include "specht/serialize.hpp"

namespace specht::cli {

using serialize::json;

std::filesystem::path resolve_cache_dir(const std::string& configured) {
  if (!configured.empty()) return configured;
  if (const char* env = std::getenv("SPECHT_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "specht";
  }
  return ".specht-cache";
}

std::uint32_t payload_checksum(const std::string& payload) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(payload.data()), static_cast<uInt>(payload.size()));
  return static_cast<std::uint32_t>(crc);
}

namespace {

json cache_key(const tableaux::Partition& lambda) {
  return {{"n", lambda.n()}, {"partition", lambda.to_string()}, {"basis_order_version", gram::kBasisOrderVersion}};
}

}  // namespace

std::filesystem::path GramCache::entry_path(const tableaux::Partition& lambda) const {
  std::string name = "gram_n" + std::to_string(lambda.n()) + "_";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i > 0) name += "-";
    name += std::to_string(lambda.parts()[i]);
  }
  name += "_v" + std::to_string(gram::kBasisOrderVersion) + ".json";
  return dir_ / name;
}

std::optional<gram::GramMatrix> GramCache::load(const tableaux::Partition& lambda, std::ostream& err) const {
  const auto path = entry_path(lambda);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const json entry = json::parse(buf.str());
    if (entry.at("key") != cache_key(lambda)) throw std::runtime_error("key mismatch");
    const std::string payload = entry.at("payload").get<std::string>();
    if (entry.at("crc32").get<std::uint32_t>() != payload_checksum(payload)) {
      throw std::runtime_error("checksum mismatch");
    }
    auto g = serialize::gram_from_json(json::parse(payload));
    if (g.lambda != lambda) throw std::runtime_error("partition mismatch");
    return g;
  } catch (const std::exception& e) {
    err << "cache: discarding " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void GramCache::store(const gram::GramMatrix& g) const {
  std::filesystem::create_directories(dir_);
  const std::string payload = serialize::to_json(g).dump();
  const json entry = {{"key", cache_key(g.lambda)}, {"crc32", payload_checksum(payload)}, {"payload", payload}};
  const auto target = entry_path(g.lambda);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << entry.dump();
    out.flush();
    if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cache: cannot rename into " + target.string() + ": " + ec.message());
  }
}

gram::GramMatrix GramCache::get_or_compute(const tableaux::Partition& lambda, std::ostream& err) const {
  if (auto hit = load(lambda, err)) return *hit;
  auto g = gram::gram_matrix(lambda);
  store(g);
  return g;
}

}  // namespace specht::cli
