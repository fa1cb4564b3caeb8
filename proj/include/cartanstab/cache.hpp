#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace cartanstab::cache {

using json = nlohmann::json;

struct CacheKey {
  std::string algebra;
  int rank = 0;
  std::string command;

  std::string stable_hash() const;  // FNV-1a over "algebra:rank:command"
};

/// JSON-lines result cache. Entries are served only when the engine version
/// matches; corrupted lines are skipped with a warning on stderr, never a
/// crash. I/O errors surface as std::nullopt / false so commands proceed
/// without the cache.
class CacheFile {
 public:
  explicit CacheFile(std::string path) : path_(std::move(path)) {}

  struct Entry {
    json payload;
    int exit_code = 0;
  };

  std::optional<Entry> lookup(const CacheKey& key) const;
  bool store(const CacheKey& key, const json& payload, int exit_code) const;

 private:
  std::string path_;
};

}  // namespace cartanstab::cache
