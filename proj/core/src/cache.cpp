#include "ghom/cache.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ghom {

namespace {
constexpr const char* kFormat = "ghom-cache-v1";
}

std::string EnumerationCache::path_for(int genus, const std::string& kind) const {
    return root_ + "/g" + std::to_string(genus) + "/" + kind + ".jsonl";
}

std::optional<std::vector<StableGraph>> EnumerationCache::load(int genus,
                                                               const std::string& kind) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(genus, kind));
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    try {
        auto j = nlohmann::json::parse(header);
        if (j.value("format", "") != kFormat || j.value("kind", "") != kind ||
            j.value("genus", -1) != genus)
            return std::nullopt;
        std::vector<StableGraph> graphs;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            graphs.push_back(from_json_line(line));
        }
        return graphs;
    } catch (const std::exception&) {
        return std::nullopt;  // treat damaged caches as misses
    }
}

void EnumerationCache::store(int genus, const std::string& kind,
                             const std::vector<StableGraph>& graphs) const {
    if (!enabled()) return;
    namespace fs = std::filesystem;
    fs::path path = path_for(genus, kind);
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        nlohmann::ordered_json header;
        header["format"] = kFormat;
        header["kind"] = kind;
        header["genus"] = genus;
        header["count"] = graphs.size();
        out << header.dump() << "\n";
        for (const StableGraph& g : graphs) out << to_json_line(g) << "\n";
    }
    fs::rename(tmp, path);
}

std::string default_cache_root() {
    const char* env = std::getenv("GHOM_CACHE");
    return env ? std::string(env) : std::string();
}

}  // namespace ghom
