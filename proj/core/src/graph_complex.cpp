#include "ghom/graph_complex.hpp"

#include "ghom/enumerate.hpp"
#include "ghom/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghom {

namespace {

void require_generator_shape(const StableGraph& g) {
    for (int e = 0; e < g.num_edges(); ++e)
        if (g.is_loop(e)) throw std::invalid_argument("generator has a loop");
    for (int w : g.weights)
        if (w != 0) throw std::invalid_argument("generator has positive weight");
    for (int v = 0; v < g.num_vertices; ++v)
        if (valence(g, v) < 3) throw std::invalid_argument("generator has a vertex of valence < 3");
}

bool has_parallel_edges(const StableGraph& g) {
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < g.num_edges(); ++e) {
        int u = g.edge_u(e), v = g.edge_v(e);
        pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

void add_term(ChainVector& acc, const SignedGenerator& sg, int outer_sign) {
    if (sg.sign == 0) return;
    long long& c = acc[sg.key];
    c += outer_sign * sg.sign;
    if (c == 0) acc.erase(sg.key);
}

}  // namespace

SignedGenerator normalize(const StableGraph& g, const std::vector<int>& edge_order) {
    require_generator_shape(g);
    if (static_cast<int>(edge_order.size()) != g.num_edges())
        throw std::invalid_argument("edge order has wrong length");
    GraphAnalysis an = analyze_graph(g);
    if (an.aut.has_odd_edge_automorphism) return {};
    // Position j of the given order carries edge edge_order[j]; in canonical
    // coordinates it sits at edge_relabeling[edge_order[j]].
    Perm carried(g.num_edges());
    std::vector<char> seen(g.num_edges(), 0);
    for (int j = 0; j < g.num_edges(); ++j) {
        int e = edge_order[j];
        if (e < 0 || e >= g.num_edges() || seen[e])
            throw std::invalid_argument("edge order is not a permutation");
        seen[e] = 1;
        carried[j] = an.key.edge_relabeling[e];
    }
    return {perm_sign(carried), an.key.bytes, std::move(an.canonical)};
}

SignedGenerator normalize(const StableGraph& g) {
    return normalize(g, identity_perm(g.num_edges()));
}

ChainVector boundary(const StableGraph& generator) {
    if (has_parallel_edges(generator))
        throw std::invalid_argument("boundary: not a basis generator (parallel edges)");
    ChainVector acc;
    for (int e = 0; e < generator.num_edges(); ++e) {
        // Contraction inherits the edge order with e removed.
        add_term(acc, normalize(contract(generator, e)), e % 2 == 0 ? 1 : -1);
    }
    return acc;
}

ChainVector dual_coboundary(const StableGraph& generator) {
    require_generator_shape(generator);
    const int E = generator.num_edges();
    const int global_sign = (E % 2 == 0) ? 1 : -1;
    ChainVector acc;
    for (int v = 0; v < generator.num_vertices; ++v) {
        std::vector<int> at_v;
        for (int h = 0; h < generator.num_half_edges(); ++h)
            if (generator.incidence[h] == v) at_v.push_back(h);
        int d = static_cast<int>(at_v.size());
        if (d < 4) continue;
        // Unordered partitions {H, H'}: the lowest half-edge stays in H.
        for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
            int keep = 1 + __builtin_popcount(mask);  // |H|
            if (keep < 2 || d - keep < 2) continue;
            StableGraph split = generator;
            split.num_vertices += 1;
            split.weights.push_back(0);
            int fresh = split.num_vertices - 1;
            for (int b = 0; b < d - 1; ++b)
                if (!(mask & (1 << b))) split.incidence[at_v[b + 1]] = fresh;
            split.add_edge(v, fresh);  // the new edge comes last
            add_term(acc, normalize(split), global_sign);
        }
    }
    return acc;
}

StableGraph wheel(int genus) {
    if (genus < 3) throw std::invalid_argument("wheel needs genus >= 3");
    StableGraph g;
    g.num_vertices = genus + 1;
    g.weights.assign(genus + 1, 0);
    const int hub = genus;
    for (int i = 0; i < genus; ++i) g.add_edge(i, hub);
    for (int i = 0; i < genus; ++i) g.add_edge(i, (i + 1) % genus);
    return g;
}

GraphComplex build_graph_complex(int genus) {
    return build_graph_complex(
        genus, [](int g, int k) { return enumerate_gc_generators(g, k); });
}

GraphComplex build_graph_complex(int genus, const GcProvider& provider) {
    if (genus < 2) throw std::invalid_argument("genus must be >= 2");
    GraphComplex gc;
    gc.genus = genus;
    gc.complex.min_degree = gc_min_degree(genus);
    int degrees = gc_max_degree(genus) - gc_min_degree(genus) + 1;
    gc.complex.bases.resize(degrees);
    gc.complex.boundaries.resize(degrees);
    gc.basis_graphs.resize(degrees);

    std::vector<std::map<std::string, int>> index(degrees);
    for (int i = 0; i < degrees; ++i) {
        for (GraphAnalysis& an : provider(genus, gc.complex.min_degree + i)) {
            if (an.aut.has_odd_edge_automorphism) continue;
            index[i][an.key.bytes] = static_cast<int>(gc.complex.bases[i].size());
            gc.complex.bases[i].push_back(an.key.bytes);
            gc.basis_graphs[i].push_back(std::move(an.canonical));
        }
    }
    for (int i = 0; i < degrees; ++i) {
        std::vector<Triplet> raw;
        int rows = (i == 0) ? 0 : static_cast<int>(gc.complex.bases[i - 1].size());
        for (int col = 0; col < static_cast<int>(gc.basis_graphs[i].size()); ++col) {
            for (const auto& [key, coeff] : boundary(gc.basis_graphs[i][col])) {
                if (i == 0) throw std::logic_error("boundary out of the bottom degree");
                auto it = index[i - 1].find(key);
                if (it == index[i - 1].end())
                    throw std::logic_error("boundary term missing from the enumerated basis");
                raw.push_back({it->second, col, Integer(coeff)});
            }
        }
        gc.complex.boundaries[i] = SparseIntMatrix::from_triplets(
            rows, static_cast<int>(gc.complex.bases[i].size()), std::move(raw));
    }
    return gc;
}

std::vector<SparseIntMatrix> build_coboundaries(const GraphComplex& gc) {
    int degrees = gc.complex.num_degrees();
    std::vector<std::map<std::string, int>> index(degrees);
    for (int i = 0; i < degrees; ++i)
        for (int r = 0; r < static_cast<int>(gc.complex.bases[i].size()); ++r)
            index[i][gc.complex.bases[i][r]] = r;

    std::vector<SparseIntMatrix> cob(degrees);
    for (int i = 0; i < degrees; ++i) {
        std::vector<Triplet> raw;
        int rows = (i + 1 < degrees) ? static_cast<int>(gc.complex.bases[i + 1].size()) : 0;
        for (int col = 0; col < static_cast<int>(gc.basis_graphs[i].size()); ++col) {
            for (const auto& [key, coeff] : dual_coboundary(gc.basis_graphs[i][col])) {
                if (i + 1 >= degrees) throw std::logic_error("coboundary out of the top degree");
                auto it = index[i + 1].find(key);
                if (it == index[i + 1].end())
                    throw std::logic_error("coboundary term missing from the enumerated basis");
                raw.push_back({it->second, col, Integer(coeff)});
            }
        }
        cob[i] = SparseIntMatrix::from_triplets(rows, static_cast<int>(gc.complex.bases[i].size()),
                                                std::move(raw));
    }
    return cob;
}

}  // namespace ghom
