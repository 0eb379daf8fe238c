#include "permgrid/cache.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace permgrid {

namespace {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string sanitized(const std::string& s) {
  std::string out;
  for (char c : s) out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

}  // namespace

std::string cache_file_name(const CacheKey& key) {
  return sanitized(key.spec) + "-" + sanitized(key.method) + "-" + std::to_string(key.order) +
         "-" + fnv1a_hex(key.spec) + ".json";
}

std::optional<std::vector<BigInt>> cache_load(const std::string& dir, const CacheKey& key) {
  const std::filesystem::path path = std::filesystem::path(dir) / cache_file_name(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (j.value("spec", "") != key.spec || j.value("method", "") != key.method ||
      j.value("order", -1) != key.order) {
    return std::nullopt;
  }
  std::vector<BigInt> terms;
  for (const auto& t : j.at("terms")) terms.emplace_back(t.get<std::string>());
  return terms;
}

void cache_store(const std::string& dir, const CacheKey& key, const std::vector<BigInt>& terms) {
  std::filesystem::create_directories(dir);
  nlohmann::json j;
  j["spec"] = key.spec;
  j["method"] = key.method;
  j["order"] = key.order;
  j["terms"] = nlohmann::json::array();
  for (const auto& t : terms) j["terms"].push_back(t.str());

  const std::filesystem::path path = std::filesystem::path(dir) / cache_file_name(key);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace permgrid
