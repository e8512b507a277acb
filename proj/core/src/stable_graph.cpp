#include "ghom/stable_graph.hpp"

#include <nlohmann/json.hpp>

#include <numeric>
#include <stdexcept>

namespace ghom {

int valence(const StableGraph& g, int v) {
    int n = 0;
    for (int x : g.incidence)
        if (x == v) ++n;
    return n;
}

int total_weight(const StableGraph& g) {
    return std::accumulate(g.weights.begin(), g.weights.end(), 0);
}

bool is_connected(const StableGraph& g) {
    if (g.num_vertices == 0) return false;
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (int e = 0; e < g.num_edges(); ++e) {
        adj[g.edge_u(e)].push_back(g.edge_v(e));
        adj[g.edge_v(e)].push_back(g.edge_u(e));
    }
    std::vector<char> seen(g.num_vertices, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    for (char s : seen)
        if (!s) return false;
    return true;
}

int genus(const StableGraph& g) {
    int b1 = g.num_edges() - g.num_vertices + 1;
    return b1 + total_weight(g);
}

bool is_stable(const StableGraph& g) {
    for (int v = 0; v < g.num_vertices; ++v)
        if (2 * g.weights[v] - 2 + valence(g, v) <= 0) return false;
    return true;
}

void validate(const StableGraph& g) {
    if (g.num_vertices <= 0) throw std::invalid_argument("graph has no vertices");
    if (static_cast<int>(g.weights.size()) != g.num_vertices)
        throw std::invalid_argument("weight vector size mismatch");
    for (int w : g.weights)
        if (w < 0) throw std::invalid_argument("negative vertex weight");
    if (g.incidence.size() % 2 != 0) throw std::invalid_argument("odd number of half-edges");
    for (int x : g.incidence)
        if (x < 0 || x >= g.num_vertices) throw std::invalid_argument("incidence out of range");
}

StableGraph contract(const StableGraph& g, EdgeId e) {
    int ei = e.index();
    if (ei < 0 || ei >= g.num_edges()) throw std::invalid_argument("contract: invalid edge id");
    int u = g.edge_u(ei), v = g.edge_v(ei);
    StableGraph out;
    if (u == v) {
        out.num_vertices = g.num_vertices;
        out.weights = g.weights;
        out.weights[u] += 1;
        for (int f = 0; f < g.num_edges(); ++f) {
            if (f == ei) continue;
            out.add_edge(g.edge_u(f), g.edge_v(f));
        }
        return out;
    }
    int keep = std::min(u, v), drop = std::max(u, v);
    auto rename = [&](int x) {
        if (x == drop) x = keep;
        return x > drop ? x - 1 : x;
    };
    out.num_vertices = g.num_vertices - 1;
    out.weights.reserve(out.num_vertices);
    for (int w = 0; w < g.num_vertices; ++w) {
        if (w == drop) continue;
        out.weights.push_back(g.weights[w] + (w == keep ? g.weights[drop] : 0));
    }
    for (int f = 0; f < g.num_edges(); ++f) {
        if (f == ei) continue;
        out.add_edge(rename(g.edge_u(f)), rename(g.edge_v(f)));
    }
    return out;
}

std::string to_json_line(const StableGraph& g) {
    nlohmann::ordered_json j;
    j["genus"] = genus(g);
    j["weights"] = g.weights;
    auto edges = nlohmann::ordered_json::array();
    for (int e = 0; e < g.num_edges(); ++e) edges.push_back({g.edge_u(e), g.edge_v(e)});
    j["edges"] = edges;
    return j.dump();
}

StableGraph from_json_line(const std::string& line) {
    auto j = nlohmann::json::parse(line);
    StableGraph g;
    g.weights = j.at("weights").get<std::vector<int>>();
    g.num_vertices = static_cast<int>(g.weights.size());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge record");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    validate(g);
    if (!is_connected(g)) throw std::invalid_argument("graph record is disconnected");
    int stored = j.at("genus").get<int>();
    if (stored != genus(g)) throw std::invalid_argument("stored genus disagrees with b1 + total weight");
    return g;
}

}  // namespace ghom
