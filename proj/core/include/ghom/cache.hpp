#pragma once

#include "ghom/stable_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghom {

// On-disk enumeration cache: <root>/g<genus>/<kind>.jsonl with a
// format-version header line; a stale or foreign header invalidates the
// file.  Writes go to a temp file and are renamed into place.
class EnumerationCache {
public:
    explicit EnumerationCache(std::string root) : root_(std::move(root)) {}

    bool enabled() const { return !root_.empty(); }
    std::string path_for(int genus, const std::string& kind) const;

    std::optional<std::vector<StableGraph>> load(int genus, const std::string& kind) const;
    void store(int genus, const std::string& kind, const std::vector<StableGraph>& graphs) const;

private:
    std::string root_;
};

// Cache root from the GHOM_CACHE environment variable (empty = disabled).
std::string default_cache_root();

}  // namespace ghom
