#include "ghom/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace ghom {

namespace {

void sort_by_key(std::vector<GraphAnalysis>& v) {
    std::sort(v.begin(), v.end(),
              [](const GraphAnalysis& a, const GraphAnalysis& b) { return a.key.bytes < b.key.bytes; });
}

int component_data(const StableGraph& g, std::vector<int>& comp) {
    comp.assign(g.num_vertices, -1);
    int n_comp = 0;
    for (int s = 0; s < g.num_vertices; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = n_comp;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = 0; e < g.num_edges(); ++e) {
                int u = g.edge_u(e), w = g.edge_v(e);
                if (u == v && comp[w] < 0) { comp[w] = n_comp; stack.push_back(w); }
                if (w == v && comp[u] < 0) { comp[u] = n_comp; stack.push_back(u); }
            }
        }
        ++n_comp;
    }
    return n_comp;
}

struct AugmentationEngine {
    MultigraphClass cls;
    std::vector<GraphAnalysis> out;

    // States are canonical graphs on the touched vertices only (degree >= 1
    // everywhere); the remaining cls.num_vertices - k vertices are fresh and
    // interchangeable.
    void run() {
        if (cls.num_edges == 0) return;  // no stable graph at our sizes has zero edges
        // Root moves: one edge between two fresh vertices, or a fresh loop.
        if (cls.num_vertices >= 2) {
            StableGraph g;
            g.num_vertices = 2;
            g.weights = {0, 0};
            g.add_edge(0, 1);
            descend(g);
        }
        if (cls.allow_loops && cls.num_vertices >= 1 && (cls.max_valence < 0 || cls.max_valence >= 2)) {
            StableGraph g;
            g.num_vertices = 1;
            g.weights = {0};
            g.add_edge(0, 0);
            descend(g);
        }
        sort_by_key(out);
    }

    bool feasible(const StableGraph& g) const {
        int j = g.num_edges(), k = g.num_vertices;
        int remaining = cls.num_edges - j;
        if (remaining < 0) return false;
        int fresh = cls.num_vertices - k;
        std::vector<int> deg(k, 0);
        for (int x : g.incidence) deg[x]++;
        long long deficiency = static_cast<long long>(fresh) * cls.min_valence;
        long long capacity = 0;
        for (int v = 0; v < k; ++v) {
            deficiency += std::max(0, cls.min_valence - deg[v]);
            if (cls.max_valence >= 0) capacity += cls.max_valence - deg[v];
        }
        if (deficiency > 2LL * remaining) return false;
        if (cls.max_valence >= 0) {
            capacity += static_cast<long long>(fresh) * cls.max_valence;
            if (capacity < 2LL * remaining) return false;
        }
        std::vector<int> comp;
        int n_comp = component_data(g, comp);
        if (n_comp + fresh - 1 > remaining) return false;
        if (cls.max_valence >= 0 && (n_comp > 1 || fresh > 0)) {
            // A saturated proper component can never be reconnected.
            std::vector<char> open(n_comp, 0);
            for (int v = 0; v < k; ++v)
                if (deg[v] < cls.max_valence) open[comp[v]] = 1;
            for (int c = 0; c < n_comp; ++c)
                if (!open[c]) return false;
        }
        return true;
    }

    void emit_if_valid(const GraphAnalysis& raw_analysis) {
        GraphAnalysis an = analyze_as_canonical(raw_analysis.canonical);
        const StableGraph& g = an.canonical;
        if (g.num_vertices != cls.num_vertices) return;
        if (!is_connected(g)) return;
        for (int v = 0; v < g.num_vertices; ++v) {
            int d = valence(g, v);
            if (d < cls.min_valence) return;
            if (cls.max_valence >= 0 && d > cls.max_valence) return;
        }
        out.push_back(std::move(an));
    }

    // Keep only one candidate pair per orbit of Aut acting on vertex pairs.
    std::vector<std::pair<int, int>> orbit_filter(const std::vector<std::pair<int, int>>& pairs,
                                                  const std::vector<Perm>& auts) const {
        std::vector<std::pair<int, int>> keep;
        for (auto [u, v] : pairs) {
            bool minimal = true;
            for (const Perm& phi : auts) {
                int a = phi[u], b = phi[v];
                if (a > b) std::swap(a, b);
                if (std::make_pair(a, b) < std::make_pair(u, v)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) keep.emplace_back(u, v);
        }
        return keep;
    }

    // Everything below works in the frame of the raw graph; automorphisms
    // from the analysis act on raw labels.
    void descend(const StableGraph& child_raw) {
        GraphAnalysis an = analyze_graph(child_raw);
        if (!accept_child(child_raw, an)) return;
        if (child_raw.num_edges() == cls.num_edges) {
            emit_if_valid(an);
            return;
        }
        if (!feasible(child_raw)) return;
        expand(child_raw, an);
    }

    // Parent test: the added edge is by construction the last edge of
    // child_raw; it must lie in the automorphism orbit of the designated
    // pair, which is the lexicographically largest occupied pair (= the
    // last edge of the canonical form), pulled back to raw labels.
    bool accept_child(const StableGraph& child_raw, const GraphAnalysis& an) const {
        const StableGraph& c = an.canonical;
        Perm from_canonical = inverse(an.key.vertex_relabeling);
        int last = c.num_edges() - 1;
        int du = from_canonical[c.edge_u(last)], dv = from_canonical[c.edge_v(last)];
        if (du > dv) std::swap(du, dv);
        std::set<std::pair<int, int>> orbit{{du, dv}};
        std::vector<std::pair<int, int>> frontier{{du, dv}};
        while (!frontier.empty()) {
            auto [u, v] = frontier.back();
            frontier.pop_back();
            for (const Perm& phi : an.vertex_automorphisms) {
                int a = phi[u], b = phi[v];
                if (a > b) std::swap(a, b);
                if (orbit.insert({a, b}).second) frontier.emplace_back(a, b);
            }
        }
        int added = child_raw.num_edges() - 1;
        int a = child_raw.edge_u(added), b = child_raw.edge_v(added);
        if (a > b) std::swap(a, b);
        return orbit.count({a, b}) > 0;
    }

    void expand(const StableGraph& g, const GraphAnalysis& an) {
        int k = g.num_vertices;
        int fresh = cls.num_vertices - k;
        std::vector<int> deg(k, 0);
        for (int x : g.incidence) deg[x]++;
        auto headroom = [&](int v, int need) {
            return cls.max_valence < 0 || deg[v] + need <= cls.max_valence;
        };

        std::vector<std::pair<int, int>> touched_pairs;
        for (int u = 0; u < k; ++u) {
            if (cls.allow_loops && headroom(u, 2)) touched_pairs.emplace_back(u, u);
            for (int v = u + 1; v < k; ++v)
                if (headroom(u, 1) && headroom(v, 1)) touched_pairs.emplace_back(u, v);
        }
        for (auto [u, v] : orbit_filter(touched_pairs, an.vertex_automorphisms)) {
            StableGraph child = g;
            child.add_edge(u, v);
            descend(child);
        }
        if (fresh >= 1) {
            // Attach a fresh vertex to one representative per vertex orbit.
            std::vector<char> seen(k, 0);
            for (int u = 0; u < k; ++u) {
                if (seen[u] || !headroom(u, 1)) continue;
                for (const Perm& phi : an.vertex_automorphisms) seen[phi[u]] = 1;
                StableGraph child = g;
                child.num_vertices = k + 1;
                child.weights.push_back(0);
                child.add_edge(u, k);
                descend(child);
            }
            if (cls.allow_loops && (cls.max_valence < 0 || cls.max_valence >= 2)) {
                StableGraph child = g;
                child.num_vertices = k + 1;
                child.weights.push_back(0);
                child.add_edge(k, k);
                descend(child);
            }
            if (fresh >= 2) {
                StableGraph child = g;
                child.num_vertices = k + 2;
                child.weights.push_back(0);
                child.weights.push_back(0);
                child.add_edge(k, k + 1);
                descend(child);
            }
        }
    }
};

}  // namespace

std::vector<GraphAnalysis> enumerate_connected_multigraphs(const MultigraphClass& cls) {
    AugmentationEngine engine;
    engine.cls = cls;
    if (engine.cls.max_valence < 0 && cls.num_vertices >= 1) {
        // Valid bound: all other vertices still need min_valence.
        engine.cls.max_valence =
            2 * cls.num_edges - cls.min_valence * (cls.num_vertices - 1);
    }
    engine.run();
    return engine.out;
}

std::vector<GraphAnalysis> enumerate_trivalent_matching(int genus) {
    if (genus < 2) throw std::invalid_argument("genus must be >= 2");
    const int n = 2 * genus - 2, m = 3 * genus - 3;
    std::map<std::string, GraphAnalysis> found;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0), last(n, -1);
    int touched = 1;

    auto record = [&]() {
        StableGraph g;
        g.num_vertices = n;
        g.weights.assign(n, 0);
        for (auto [u, v] : edges) g.add_edge(u, v);
        GraphAnalysis an = analyze_as_canonical(g);
        found.emplace(an.key.bytes, std::move(an));
    };

    std::function<void()> rec = [&]() {
        if (static_cast<int>(edges.size()) == m) {
            if (touched == n) record();
            return;
        }
        int v = -1;
        for (int u = 0; u < touched; ++u)
            if (deg[u] < 3) {
                v = u;
                break;
            }
        if (v < 0) return;  // active part saturated early: completion would be disconnected
        // Fill one stub of v; partners are non-decreasing while v is active.
        if (last[v] < 0 && deg[v] <= 1) {
            edges.emplace_back(v, v);
            deg[v] += 2;
            last[v] = v;
            rec();
            last[v] = -1;
            deg[v] -= 2;
            edges.pop_back();
        }
        int lo = std::max(v + 1, last[v]);
        for (int u = lo; u < touched; ++u) {
            if (u == v || deg[u] >= 3) continue;
            int prev = last[v];
            edges.emplace_back(v, u);
            deg[v]++;
            deg[u]++;
            last[v] = u;
            rec();
            last[v] = prev;
            deg[u]--;
            deg[v]--;
            edges.pop_back();
        }
        if (touched < n) {
            int u = touched;
            int prev = last[v];
            edges.emplace_back(v, u);
            deg[v]++;
            deg[u]++;
            last[v] = u;
            touched++;
            rec();
            touched--;
            last[v] = prev;
            deg[u]--;
            deg[v]--;
            edges.pop_back();
        }
    };
    rec();

    std::vector<GraphAnalysis> out;
    out.reserve(found.size());
    for (auto& [bytes, an] : found) out.push_back(std::move(an));
    return out;  // map order == key order
}

std::vector<GraphAnalysis> enumerate_trivalent(int genus) {
    if (genus < 2) throw std::invalid_argument("genus must be >= 2");
    if (genus <= 4) return enumerate_trivalent_matching(genus);
    MultigraphClass cls;
    cls.num_vertices = 2 * genus - 2;
    cls.num_edges = 3 * genus - 3;
    cls.min_valence = 3;
    cls.max_valence = 3;
    cls.allow_loops = true;
    return enumerate_connected_multigraphs(cls);
}

int gc_min_degree(int genus) { return 1 - genus; }
int gc_max_degree(int genus) { return genus - 3; }

std::vector<GraphAnalysis> enumerate_gc_generators(int genus, int degree) {
    if (genus < 2) throw std::invalid_argument("genus must be >= 2");
    if (degree < gc_min_degree(genus) || degree > gc_max_degree(genus)) return {};
    MultigraphClass cls;
    cls.num_vertices = genus + 1 + degree;
    cls.num_edges = 2 * genus + degree;
    cls.min_valence = 3;
    cls.allow_loops = false;
    return enumerate_connected_multigraphs(cls);
}

std::vector<GraphAnalysis> saturate_contractions(const std::vector<GraphAnalysis>& seed) {
    std::map<std::string, GraphAnalysis> all;
    std::vector<const StableGraph*> queue;
    for (const GraphAnalysis& an : seed) {
        auto [it, fresh] = all.emplace(an.key.bytes, an);
        if (fresh) queue.push_back(&it->second.canonical);
    }
    while (!queue.empty()) {
        const StableGraph* g = queue.back();
        queue.pop_back();
        for (int e = 0; e < g->num_edges(); ++e) {
            GraphAnalysis an = analyze_as_canonical(contract(*g, e));
            auto [it, fresh] = all.emplace(an.key.bytes, std::move(an));
            if (fresh) queue.push_back(&it->second.canonical);
        }
    }
    std::vector<GraphAnalysis> out;
    out.reserve(all.size());
    for (auto& [bytes, an] : all) out.push_back(std::move(an));
    return out;
}

std::vector<GraphAnalysis> enumerate_jg(int genus) {
    return saturate_contractions(enumerate_trivalent(genus));
}

}  // namespace ghom
