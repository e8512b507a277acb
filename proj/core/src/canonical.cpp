#include "ghom/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ghom {

std::vector<Perm> group_closure(std::vector<Perm> generators, int n) {
    std::set<Perm> elems;
    elems.insert(identity_perm(n));
    std::vector<Perm> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& f : frontier)
            for (const Perm& g : generators) {
                Perm h = compose(g, f);
                if (elems.insert(h).second) next.push_back(std::move(h));
            }
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

namespace {

// Vertex-level view used by the canonical search.
struct MultView {
    int n = 0;
    std::vector<int> weights;
    std::vector<std::vector<int>> mult;  // n x n, loops excluded
    std::vector<int> loops;
    std::vector<int> val;

    explicit MultView(const StableGraph& g)
        : n(g.num_vertices),
          weights(g.weights),
          mult(g.num_vertices, std::vector<int>(g.num_vertices, 0)),
          loops(g.num_vertices, 0),
          val(g.num_vertices, 0) {
        for (int e = 0; e < g.num_edges(); ++e) {
            int u = g.edge_u(e), v = g.edge_v(e);
            if (u == v) {
                loops[u]++;
            } else {
                mult[u][v]++;
                mult[v][u]++;
            }
            val[u]++;
            val[v]++;
        }
    }
};

// Leaf encoding: weights by canonical position, then the sorted edge list.
struct Encoding {
    std::vector<int> weights;
    std::vector<std::pair<int, int>> edges;

    auto tied() const { return std::tie(weights, edges); }
    bool operator<(const Encoding& o) const { return tied() < o.tied(); }
    bool operator==(const Encoding& o) const { return tied() == o.tied(); }
};

Encoding encode(const MultView& m, const Perm& pos) {
    Encoding enc;
    enc.weights.resize(m.n);
    for (int v = 0; v < m.n; ++v) enc.weights[pos[v]] = m.weights[v];
    for (int v = 0; v < m.n; ++v)
        for (int k = 0; k < m.loops[v]; ++k) enc.edges.emplace_back(pos[v], pos[v]);
    for (int u = 0; u < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v)
            for (int k = 0; k < m.mult[u][v]; ++k)
                enc.edges.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
    std::sort(enc.edges.begin(), enc.edges.end());
    return enc;
}

struct CanonSearch {
    const MultView& m;
    bool have_best = false;
    Encoding best;
    std::set<Perm> minimal_positionings;  // all pos maps attaining the minimum

    explicit CanonSearch(const MultView& mv) : m(mv) {}

    // Normalize colors to ranks 0..k-1 keyed by an invariant sort value.
    template <typename Key>
    static void rerank(std::vector<int>& colors, const std::vector<Key>& key) {
        std::vector<Key> sorted(key);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (size_t v = 0; v < colors.size(); ++v)
            colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key[v]) - sorted.begin());
    }

    void refine(std::vector<int>& colors) const {
        for (;;) {
            int k = *std::max_element(colors.begin(), colors.end()) + 1;
            std::vector<std::pair<int, std::vector<int>>> sig(m.n);
            for (int v = 0; v < m.n; ++v) {
                std::vector<int> to_color(k, 0);
                for (int u = 0; u < m.n; ++u)
                    if (m.mult[v][u]) to_color[colors[u]] += m.mult[v][u];
                sig[v] = {colors[v], std::move(to_color)};
            }
            std::vector<int> next(m.n);
            rerank(next, sig);
            if (next == colors) return;
            colors = std::move(next);
        }
    }

    void search(std::vector<int> colors) {
        refine(colors);
        std::vector<int> class_size(m.n, 0);
        for (int c : colors) class_size[c]++;
        int target = -1;
        for (int c = 0; c < m.n; ++c)
            if (class_size[c] >= 2) {
                target = c;
                break;
            }
        if (target < 0) {
            // Discrete: colors are positions.
            Perm pos(colors.begin(), colors.end());
            Encoding enc = encode(m, pos);
            if (!have_best || enc < best) {
                have_best = true;
                best = std::move(enc);
                minimal_positionings.clear();
                minimal_positionings.insert(pos);
            } else if (enc == best) {
                minimal_positionings.insert(pos);
            }
            return;
        }
        for (int v = 0; v < m.n; ++v) {
            if (colors[v] != target) continue;
            std::vector<int> branched(colors);
            for (int u = 0; u < m.n; ++u)
                if (branched[u] > target || (branched[u] == target && u != v)) branched[u]++;
            search(std::move(branched));
        }
    }
};

std::string key_bytes(const StableGraph& canonical) {
    std::ostringstream os;
    os << "g" << genus(canonical) << ";v" << canonical.num_vertices << ";w";
    for (int v = 0; v < canonical.num_vertices; ++v) {
        if (v) os << ",";
        os << canonical.weights[v];
    }
    os << ";e";
    for (int e = 0; e < canonical.num_edges(); ++e) {
        if (e) os << ",";
        os << canonical.edge_u(e) << "-" << canonical.edge_v(e);
    }
    return os.str();
}

// Edge permutation induced by a vertex automorphism, sending the k-th edge
// of each parallel bundle (and the k-th loop at each vertex) to the k-th of
// the image bundle.
Perm induced_edge_perm(const StableGraph& g, const Perm& vertex_aut) {
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.edge_u(e), v = g.edge_v(e);
        bundles[{std::min(u, v), std::max(u, v)}].push_back(e);
    }
    Perm out(g.num_edges());
    for (const auto& [pair, list] : bundles) {
        int a = vertex_aut[pair.first], b = vertex_aut[pair.second];
        const auto& target = bundles.at({std::min(a, b), std::max(a, b)});
        for (size_t k = 0; k < list.size(); ++k) out[list[k]] = target[k];
    }
    return out;
}

// Lift a vertex automorphism to half-edges, using the same bundle rule.
Perm lift_to_half_edges(const StableGraph& g, const Perm& vertex_aut) {
    Perm edge_map = induced_edge_perm(g, vertex_aut);
    Perm out(g.num_half_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        int f = edge_map[e];
        int u = g.edge_u(e);
        if (g.is_loop(e)) {
            out[2 * e] = 2 * f;
            out[2 * e + 1] = 2 * f + 1;
        } else {
            // Match endpoints through the vertex map.
            if (g.edge_u(f) == vertex_aut[u]) {
                out[2 * e] = 2 * f;
                out[2 * e + 1] = 2 * f + 1;
            } else {
                out[2 * e] = 2 * f + 1;
                out[2 * e + 1] = 2 * f;
            }
        }
    }
    return out;
}

Perm swap_edges_on_half_edges(const StableGraph& g, int e1, int e2) {
    Perm out = identity_perm(g.num_half_edges());
    bool aligned = g.edge_u(e1) == g.edge_u(e2);
    out[2 * e1] = aligned ? 2 * e2 : 2 * e2 + 1;
    out[2 * e1 + 1] = aligned ? 2 * e2 + 1 : 2 * e2;
    out[out[2 * e1]] = 2 * e1;
    out[out[2 * e1 + 1]] = 2 * e1 + 1;
    return out;
}

}  // namespace

GraphAnalysis analyze_graph(const StableGraph& g) {
    validate(g);
    MultView m(g);

    // Initial coloring by (weight, valence, loop count).
    std::vector<int> colors(m.n);
    {
        std::vector<std::tuple<int, int, int>> key(m.n);
        for (int v = 0; v < m.n; ++v) key[v] = {m.weights[v], m.val[v], m.loops[v]};
        CanonSearch::rerank(colors, key);
    }
    CanonSearch search(m);
    search.search(colors);

    // Deterministic representative: lexicographically smallest positioning.
    Perm pos = *search.minimal_positionings.begin();

    GraphAnalysis out;
    out.key.vertex_relabeling = pos;

    StableGraph canon;
    canon.num_vertices = m.n;
    canon.weights.assign(m.n, 0);
    for (int v = 0; v < m.n; ++v) canon.weights[pos[v]] = m.weights[v];
    // Canonical edge order: sort by endpoint pair in canonical positions,
    // ties (parallel copies) by input index.
    std::vector<int> order(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) order[e] = e;
    auto pair_of = [&](int e) {
        int a = pos[g.edge_u(e)], b = pos[g.edge_v(e)];
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pair_of(a) < pair_of(b); });
    out.key.edge_relabeling.assign(g.num_edges(), 0);
    for (int rank = 0; rank < g.num_edges(); ++rank) {
        int e = order[rank];
        out.key.edge_relabeling[e] = rank;
        auto [a, b] = pair_of(e);
        canon.add_edge(a, b);
    }
    out.canonical = std::move(canon);
    out.key.bytes = key_bytes(out.canonical);

    // All vertex automorphisms: pos2^{-1} o pos for each minimal positioning pos2.
    for (const Perm& pos2 : search.minimal_positionings)
        out.vertex_automorphisms.push_back(compose(inverse(pos2), pos));

    // Half-edge level data.
    bool parallel = false, double_loop = false;
    std::uint64_t kernel = 1;
    auto factorial = [](int k) {
        std::uint64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (int u = 0; u < m.n; ++u) {
        if (m.loops[u] >= 2) double_loop = true;
        kernel *= factorial(m.loops[u]) << m.loops[u];
        for (int v = u + 1; v < m.n; ++v) {
            if (m.mult[u][v] >= 2) parallel = true;
            kernel *= factorial(m.mult[u][v]);
        }
    }
    out.aut.group_order = kernel * static_cast<std::uint64_t>(out.vertex_automorphisms.size());
    out.aut.has_odd_edge_automorphism = parallel || double_loop;
    for (const Perm& phi : out.vertex_automorphisms) {
        if (out.aut.has_odd_edge_automorphism) break;
        if (perm_sign(induced_edge_perm(g, phi)) < 0) out.aut.has_odd_edge_automorphism = true;
    }

    // Generators: lifted vertex automorphisms plus bundle-internal moves.
    for (const Perm& phi : out.vertex_automorphisms)
        out.aut.generators.push_back(lift_to_half_edges(g, phi));
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.edge_u(e), v = g.edge_v(e);
        bundles[{std::min(u, v), std::max(u, v)}].push_back(e);
        if (g.is_loop(e)) {
            Perm flip = identity_perm(g.num_half_edges());
            std::swap(flip[2 * e], flip[2 * e + 1]);
            out.aut.generators.push_back(std::move(flip));
        }
    }
    for (const auto& [pair, list] : bundles)
        for (size_t k = 0; k + 1 < list.size(); ++k)
            out.aut.generators.push_back(swap_edges_on_half_edges(g, list[k], list[k + 1]));

    return out;
}

GraphAnalysis analyze_as_canonical(const StableGraph& g) {
    GraphAnalysis an = analyze_graph(g);
    if (an.canonical == g) return an;
    return analyze_graph(an.canonical);
}

std::pair<StableGraph, CanonicalKey> canonical_form(const StableGraph& g) {
    GraphAnalysis an = analyze_graph(g);
    return {std::move(an.canonical), std::move(an.key)};
}

AutInfo automorphisms(const StableGraph& g) { return analyze_graph(g).aut; }

int edge_permutation_sign(const StableGraph& g, const Perm& perm) {
    int H = g.num_half_edges();
    if (static_cast<int>(perm.size()) != H)
        throw std::invalid_argument("half-edge permutation has wrong size");
    std::vector<char> hit(H, 0);
    for (int h = 0; h < H; ++h) {
        if (perm[h] < 0 || perm[h] >= H || hit[perm[h]])
            throw std::invalid_argument("not a permutation of half-edges");
        hit[perm[h]] = 1;
    }
    for (int h = 0; h < H; ++h)
        if (perm[StableGraph::partner(h)] != StableGraph::partner(perm[h]))
            throw std::invalid_argument("permutation does not commute with the pairing involution");
    // Must induce a well-defined vertex bijection.
    std::vector<int> vmap(g.num_vertices, -1);
    for (int h = 0; h < H; ++h) {
        int v = g.incidence[h], w = g.incidence[perm[h]];
        if (vmap[v] == -1)
            vmap[v] = w;
        else if (vmap[v] != w)
            throw std::invalid_argument("permutation does not commute with incidence");
    }
    std::vector<char> seen(g.num_vertices, 0);
    for (int v = 0; v < g.num_vertices; ++v)
        if (vmap[v] >= 0) {
            if (seen[vmap[v]]) throw std::invalid_argument("induced vertex map is not injective");
            seen[vmap[v]] = 1;
        }
    Perm edge_map(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) edge_map[e] = perm[2 * e] / 2;
    return perm_sign(edge_map);
}

std::vector<Perm> edge_permutation_group(const StableGraph& g) {
    GraphAnalysis an = analyze_graph(g);
    std::vector<Perm> gens;
    for (const Perm& he : an.aut.generators) {
        Perm edge_map(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e) edge_map[e] = he[2 * e] / 2;
        gens.push_back(std::move(edge_map));
    }
    return group_closure(std::move(gens), g.num_edges());
}

}  // namespace ghom
