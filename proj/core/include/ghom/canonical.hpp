#pragma once

#include "ghom/perm.hpp"
#include "ghom/stable_graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ghom {

// Canonical byte string plus the relabeling that produced it.  Two graphs
// have equal bytes iff they are isomorphic as weighted multigraphs (half-edge
// bijections commuting with partner and incidence, preserving weights).
struct CanonicalKey {
    std::string bytes;
    std::vector<int> vertex_relabeling;  // input vertex -> canonical position
    std::vector<int> edge_relabeling;    // input edge   -> canonical position
};

struct AutInfo {
    std::vector<Perm> generators;  // half-edge permutations generating the full group
    bool has_odd_edge_automorphism = false;
    std::uint64_t group_order = 1;  // order of the half-edge automorphism group
};

// Everything the canonical search produces in one pass.
struct GraphAnalysis {
    StableGraph canonical;
    CanonicalKey key;
    std::vector<Perm> vertex_automorphisms;  // all of them, on input vertex labels
    AutInfo aut;
};

// Relabelings and automorphisms refer to the labels of the input graph.
GraphAnalysis analyze_graph(const StableGraph& g);

// Analysis whose automorphism data acts on the canonical graph itself (the
// form stored by all enumerations).
GraphAnalysis analyze_as_canonical(const StableGraph& g);

std::pair<StableGraph, CanonicalKey> canonical_form(const StableGraph& g);
AutInfo automorphisms(const StableGraph& g);

// Parity of the edge permutation induced by a half-edge permutation.
// Throws std::invalid_argument if perm does not commute with partner or
// does not induce a vertex bijection.
int edge_permutation_sign(const StableGraph& g, const Perm& half_edge_perm);

// Full subgroup of Sym(E(g)) induced by half-edge automorphisms of g,
// acting on g's own edge indices.
std::vector<Perm> edge_permutation_group(const StableGraph& g);

}  // namespace ghom
