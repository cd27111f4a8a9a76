#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace gocohom {

inline constexpr int kCacheSchemaVersion = 1;

struct CacheKey {
    int n = 0;
    int d = 0;
    std::string kind;
    int schema_version = kCacheSchemaVersion;

    std::string text() const;
};

std::uint64_t fnv1a64(std::string_view data);

// One JSON file per key under the cache directory, named by the key digest.
// Entries carry a content digest; a mismatch is treated as a miss. Writes go
// to a temporary file first and are renamed into place.
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir);

    std::optional<nlohmann::json> get(const CacheKey& key) const;
    void put(const CacheKey& key, const nlohmann::json& payload) const;

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const CacheKey& key) const;

private:
    std::filesystem::path dir_;
};

}  // namespace gocohom
