#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permgrid/series.hpp"

namespace permgrid {

/// A cached counting run is keyed by the class spec text, the method and the
/// truncation order; the file name carries a content hash of the spec so a
/// changed spec never aliases an old entry.
struct CacheKey {
  std::string spec;
  std::string method;
  int order = 0;
};

std::string cache_file_name(const CacheKey& key);

/// Returns the cached terms when a matching document exists and its key
/// fields agree; otherwise nothing.
std::optional<std::vector<BigInt>> cache_load(const std::string& dir, const CacheKey& key);

/// Writes a JSON document with all big integers as decimal strings; the
/// write goes to a temporary file first and is renamed into place.
void cache_store(const std::string& dir, const CacheKey& key, const std::vector<BigInt>& terms);

}  // namespace permgrid
