#include "cache.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include <openssl/evp.h>

namespace bogo::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

fs::path Cache::path_for(const std::string& key) const { return dir_ / key.substr(0, 2) / (key + ".json"); }

std::optional<nlohmann::json> Cache::get(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    nlohmann::json entry = nlohmann::json::parse(in);
    if (entry.value("key", "") != key || !entry.contains("report")) return std::nullopt;
    return entry["report"];
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

bool Cache::put(const std::string& key, const std::string& engine_version, const nlohmann::json& request,
                const nlohmann::json& report) const {
  const fs::path target = path_for(key);
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (ec) {
    std::cerr << "warning: cache directory " << dir_ << " is not writable (" << ec.message() << "); not caching\n";
    return false;
  }
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  nlohmann::json entry = {{"key", key},
                          {"engine_version", engine_version},
                          {"created_unix", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
                          {"request", request},
                          {"report", report}};
  std::random_device rd;
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << entry.dump() << '\n';
    if (!out) {
      std::cerr << "warning: cannot write cache entry " << tmp << "; not caching\n";
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    std::cerr << "warning: cannot publish cache entry " << target << " (" << ec.message() << ")\n";
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

Cache::Stats Cache::stats() const {
  Stats s;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return s;
  for (auto it = fs::recursive_directory_iterator(dir_, ec); it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) break;
    if (it->is_regular_file() && it->path().extension() == ".json") {
      ++s.entries;
      s.bytes += it->file_size();
    }
  }
  return s;
}

std::uint64_t Cache::clear() const {
  std::uint64_t removed = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  for (const auto& sub : fs::directory_iterator(dir_, ec)) {
    if (!sub.is_directory() || sub.path().filename().string().size() != 2) continue;
    for (const auto& f : fs::directory_iterator(sub.path(), ec))
      if (f.path().extension() == ".json" && fs::remove(f.path(), ec)) ++removed;
    fs::remove(sub.path(), ec);
  }
  return removed;
}

}  // namespace bogo::cli
