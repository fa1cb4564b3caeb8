#include "cartanstab/cache.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "cartanstab/version.hpp"

namespace cartanstab::cache {

std::string CacheKey::stable_hash() const {
  const std::string text = algebra + ":" + std::to_string(rank) + ":" + command;
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

bool entry_matches(const json& line, const CacheKey& key) {
  if (!line.is_object()) return false;
  const auto it = line.find("key");
  if (it == line.end() || !it->is_object()) return false;
  return it->value("algebra", "") == key.algebra && it->value("rank", -1) == key.rank &&
         it->value("command", "") == key.command;
}

}  // namespace

std::optional<CacheFile::Entry> CacheFile::lookup(const CacheKey& key) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;  // missing file is a miss
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json parsed = json::parse(line, nullptr, false);
    if (parsed.is_discarded()) {
      std::cerr << "warning: ignoring corrupted cache line " << lineno << " in " << path_
                << "\n";
      continue;
    }
    if (!entry_matches(parsed, key)) continue;
    if (parsed.value("engine", "") != kEngineVersion) continue;  // version miss
    Entry entry;
    entry.payload = parsed.value("payload", json());
    entry.exit_code = parsed.value("exit", 0);
    return entry;
  }
  return std::nullopt;
}

bool CacheFile::store(const CacheKey& key, const json& payload, int exit_code) const {
  // Rewrite keeping every other valid line; the replaced/new entry goes last.
  std::vector<std::string> kept;
  {
    std::ifstream in(path_);
    std::string line;
    size_t lineno = 0;
    while (in && std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      json parsed = json::parse(line, nullptr, false);
      if (parsed.is_discarded()) {
        std::cerr << "warning: dropping corrupted cache line " << lineno << " in " << path_
                  << "\n";
        continue;
      }
      if (entry_matches(parsed, key)) continue;
      kept.push_back(line);
    }
  }
  json entry;
  entry["hash"] = key.stable_hash();
  entry["key"] = {{"algebra", key.algebra}, {"rank", key.rank}, {"command", key.command}};
  entry["engine"] = kEngineVersion;
  entry["exit"] = exit_code;
  entry["payload"] = payload;

  std::ofstream out(path_, std::ios::trunc);
  if (!out) {
    std::cerr << "warning: cannot write cache file " << path_ << "\n";
    return false;
  }
  for (const auto& line : kept) out << line << "\n";
  out << entry.dump() << "\n";
  return static_cast<bool>(out);
}

}  // namespace cartanstab::cache
