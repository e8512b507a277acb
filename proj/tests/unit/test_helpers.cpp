#include "test_helpers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ghom::testing {

namespace {

// All multisets of `count` items from pair_types, as index vectors.
void multisets(int count, int types, int lowest, std::vector<int>& current,
               const std::function<void(const std::vector<int>&)>& emit) {
    if (count == 0) {
        emit(current);
        return;
    }
    for (int t = lowest; t < types; ++t) {
        current.push_back(t);
        multisets(count - 1, types, t, current, emit);
        current.pop_back();
    }
}

void weight_vectors(int total, int slots, std::vector<int>& current,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (slots == 1) {
        current.push_back(total);
        emit(current);
        current.pop_back();
        return;
    }
    for (int w = 0; w <= total; ++w) {
        current.push_back(w);
        weight_vectors(total - w, slots - 1, current, emit);
        current.pop_back();
    }
}

}  // namespace

std::set<std::string> brute_force_jg_keys(int genus) {
    std::set<std::string> keys;
    for (int v = 1; v <= 2 * genus - 2; ++v) {
        std::vector<std::pair<int, int>> pair_types;
        for (int a = 0; a < v; ++a)
            for (int b = a; b < v; ++b) pair_types.emplace_back(a, b);
        int max_edges = std::min(3 * genus - 3, genus + v - 1);
        for (int e = std::max(0, v - 1); e <= max_edges; ++e) {
            int b1 = e - v + 1;
            if (b1 < 0 || b1 > genus) continue;
            int wsum = genus - b1;
            std::vector<int> edges_idx, weights_tmp;
            multisets(e, static_cast<int>(pair_types.size()), 0, edges_idx,
                      [&](const std::vector<int>& chosen) {
                          std::vector<std::pair<int, int>> edges;
                          for (int t : chosen) edges.push_back(pair_types[t]);
                          weight_vectors(wsum, v, weights_tmp, [&](const std::vector<int>& w) {
                              StableGraph g = make_graph(v, w, edges);
                              if (!is_connected(g) || !is_stable(g)) return;
                              keys.insert(key_of(g));
                          });
                      });
        }
    }
    return keys;
}

std::set<std::string> brute_force_gc_keys(int genus, int degree) {
    int v = genus + 1 + degree, e = 2 * genus + degree;
    std::set<std::string> keys;
    if (v < 2) return keys;
    std::vector<std::pair<int, int>> pair_types;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) pair_types.emplace_back(a, b);
    std::vector<int> scratch;
    multisets(e, static_cast<int>(pair_types.size()), 0, scratch, [&](const std::vector<int>& chosen) {
        std::vector<std::pair<int, int>> edges;
        for (int t : chosen) edges.push_back(pair_types[t]);
        StableGraph g = make_graph(v, std::vector<int>(v, 0), edges);
        for (int u = 0; u < v; ++u)
            if (valence(g, u) < 3) return;
        if (!is_connected(g)) return;
        keys.insert(key_of(g));
    });
    return keys;
}

std::uint64_t brute_force_aut_order(const StableGraph& g) {
    int n = g.num_vertices;
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    std::vector<int> loops(n, 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.edge_u(e), v = g.edge_v(e);
        if (u == v)
            loops[u]++;
        else {
            mult[u][v]++;
            mult[v][u]++;
        }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t vertex_count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (g.weights[u] != g.weights[perm[u]] || loops[u] != loops[perm[u]]) ok = false;
            for (int v = u + 1; v < n && ok; ++v)
                if (mult[u][v] != mult[perm[u]][perm[v]]) ok = false;
        }
        if (ok) ++vertex_count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::uint64_t lift = 1;
    auto factorial = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (int u = 0; u < n; ++u) {
        lift *= factorial(loops[u]) << loops[u];
        for (int v = u + 1; v < n; ++v) lift *= factorial(mult[u][v]);
    }
    return vertex_count * lift;
}

}  // namespace ghom::testing
