#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace bogo::cli {

std::string sha256_hex(const std::string& bytes);

/// Content-addressed store: <dir>/<key[0:2]>/<key>.json. Writes go to a
/// temporary file in the same directory and are renamed into place.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<nlohmann::json> get(const std::string& key) const;
  /// Returns false (after a warning on stderr) when the entry cannot be written.
  bool put(const std::string& key, const std::string& engine_version, const nlohmann::json& request,
           const nlohmann::json& report) const;

  struct Stats {
    std::uint64_t entries = 0;
    std::uint64_t bytes = 0;
  };
  Stats stats() const;
  std::uint64_t clear() const;

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace bogo::cli
