#pragma once

#include "ghom/canonical.hpp"
#include "ghom/chain_complex.hpp"
#include "ghom/stable_graph.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ghom {

// Result of reducing an ordered graph to the canonical basis: sign 0 means
// the class vanishes (an automorphism permutes the edges oddly).
struct SignedGenerator {
    int sign = 0;
    std::string key;
    StableGraph graph;  // canonical form; valid when sign != 0
};

// Sparse integer chain in one degree, keyed by canonical bytes.
using ChainVector = std::map<std::string, long long>;

// Reduce (g, edge_order) to +-1 times the canonical generator.  The
// canonical edge order of the key is the reference orientation, so the sign
// is the parity of the relabeling composed with the given order.  Requires
// g loopless, all weights zero, minimum valence 3; throws otherwise.
SignedGenerator normalize(const StableGraph& g, const std::vector<int>& edge_order);
SignedGenerator normalize(const StableGraph& g);

// Alternating sum of single-edge contractions, each renormalized; input must
// be a canonical basis graph (no parallel edges).
ChainVector boundary(const StableGraph& generator);

// Vertex-splitting differential: over vertices v and unordered half-edge
// partitions {H, H'} with both sides of size >= 2, reattach H' to a new
// vertex joined to v by a fresh last edge; global sign (-1)^{|E|}.
ChainVector dual_coboundary(const StableGraph& generator);

// Hub joined by g spokes to a g-cycle; edge order is spokes then rim, each
// in cyclic order.  Requires g >= 3.
StableGraph wheel(int genus);

struct GraphComplex {
    int genus = 0;
    GradedChainComplex complex;  // degrees 1-g .. g-3
    std::vector<std::vector<StableGraph>> basis_graphs;  // parallel to complex.bases
};

// Bases are the normalized nonzero generators per degree; boundary matrices
// follow the alternating contraction sum.  The provider overload lets
// callers substitute cached enumerations.
GraphComplex build_graph_complex(int genus);
using GcProvider = std::function<std::vector<GraphAnalysis>(int genus, int degree)>;
GraphComplex build_graph_complex(int genus, const GcProvider& provider);

// Coboundary matrices from the splitting differential; entry i maps degree
// min+i to min+i+1.  Expected to be the transposes of the boundaries.
std::vector<SparseIntMatrix> build_coboundaries(const GraphComplex& gc);

}  // namespace ghom
