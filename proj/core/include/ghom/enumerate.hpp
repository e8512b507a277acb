#pragma once

#include "ghom/canonical.hpp"
#include "ghom/stable_graph.hpp"

#include <vector>

namespace ghom {

struct MultigraphClass {
    int num_vertices = 0;
    int num_edges = 0;
    int min_valence = 3;
    int max_valence = -1;  // -1: unbounded
    bool allow_loops = false;
};

// Isomorph-free enumeration of connected multigraphs (all weights zero) in
// the given class, by canonical augmentation: add one edge at a time and
// keep a child only when the added edge lands in the canonical last-edge
// orbit of the child.  Output is sorted by canonical key.
std::vector<GraphAnalysis> enumerate_connected_multigraphs(const MultigraphClass& cls);

// Exhaustive half-edge matching enumerator for connected trivalent weight-0
// multigraphs with 2g-2 vertices (loops and parallel edges allowed).  The
// simple correctness baseline; quadratic blowup keeps it to small genus.
std::vector<GraphAnalysis> enumerate_trivalent_matching(int genus);

// Maximal cells of Delta_g: trivalent, weight 0, 2g-2 vertices, 3g-3 edges.
// Dispatches to the matching enumerator for g <= 4 and to canonical
// augmentation for g >= 5; the two agree on the overlap (tested).
std::vector<GraphAnalysis> enumerate_trivalent(int genus);

// Graph-complex generator candidates in one degree: loopless, weight 0,
// minimum valence 3, connected, with 2g+k edges and g+1+k vertices.
std::vector<GraphAnalysis> enumerate_gc_generators(int genus, int degree);
int gc_min_degree(int genus);  // 1-g (two vertices, all edges parallel)
int gc_max_degree(int genus);  // g-3 (trivalent)

// Closure of a set of graphs under single-edge contraction, up to
// isomorphism.  Applied to the trivalent seed this yields all of J_g.
std::vector<GraphAnalysis> saturate_contractions(const std::vector<GraphAnalysis>& seed);

std::vector<GraphAnalysis> enumerate_jg(int genus);

}  // namespace ghom
