#include "gocohom/cache.hpp"

#include <fstream>
#include <sstream>

#include <unistd.h>

namespace gocohom {

using nlohmann::json;

std::string CacheKey::text() const {
    return "n=" + std::to_string(n) + ";d=" + std::to_string(d) + ";kind=" + kind +
           ";v=" + std::to_string(schema_version);
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

static std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path DiskCache::path_for(const CacheKey& key) const {
    return dir_ / (hex64(fnv1a64(key.text())) + ".json");
}

std::optional<json> DiskCache::get(const CacheKey& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    json envelope;
    try {
        in >> envelope;
    } catch (const json::exception&) {
        return std::nullopt;
    }
    if (!envelope.is_object() || !envelope.contains("payload")) return std::nullopt;
    const json& k = envelope.value("key", json::object());
    if (k.value("n", -1) != key.n || k.value("d", -1) != key.d ||
        k.value("kind", std::string()) != key.kind ||
        k.value("schema_version", -1) != key.schema_version)
        return std::nullopt;
    const std::string digest = hex64(fnv1a64(envelope["payload"].dump()));
    if (envelope.value("digest", std::string()) != digest) return std::nullopt;
    return envelope["payload"];
}

void DiskCache::put(const CacheKey& key, const json& payload) const {
    json envelope{{"key",
                   {{"n", key.n},
                    {"d", key.d},
                    {"kind", key.kind},
                    {"schema_version", key.schema_version}}},
                  {"digest", hex64(fnv1a64(payload.dump()))},
                  {"payload", payload}};
    const std::filesystem::path target = path_for(key);
    const std::filesystem::path tmp =
        target.string() + "." + std::to_string(::getpid()) + ".tmp";
    {
        std::ofstream out(tmp);
        out << envelope.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace gocohom
