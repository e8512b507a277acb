#pragma once

#include "ghom/canonical.hpp"
#include "ghom/chain_complex.hpp"
#include "ghom/ordinary_delta.hpp"
#include "ghom/perm.hpp"
#include "ghom/stable_graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ghom {

// An element of X_p written as coset * representative: the orbit plus a
// relabeling permutation in S_{p+1}, taken modulo the orbit stabilizer.
struct SymElement {
    int dim = -1;
    int orbit = 0;
    Perm coset;
};

struct SymOrbit {
    std::string label;
    StableGraph graph;  // meaningful only when has_graph
    bool has_graph = false;
    std::vector<Perm> stabilizer;  // full subgroup of S_{p+1} fixing the representative
    bool all_even = true;          // no stabilizer element induces an odd permutation
    std::vector<SymElement> faces;  // d_i of the representative, i = 0..p
};

// Finite symmetric Delta-complex stored one orbit per cell, with face maps
// evaluated on representatives; arbitrary elements are reconstructed from
// cosets.  Dimensions run from -1 (augmentation) to top_dim().
struct SymmetricDeltaComplex {
    std::vector<std::vector<SymOrbit>> orbits;  // index p+1

    int top_dim() const { return static_cast<int>(orbits.size()) - 2; }
    int count(int p) const {
        int idx = p + 1;
        if (idx < 0 || idx >= static_cast<int>(orbits.size())) return 0;
        return static_cast<int>(orbits[idx].size());
    }
    const SymOrbit& orbit_of(const SymElement& x) const { return orbits[x.dim + 1][x.orbit]; }

    SymElement representative(int p, int o) const { return {p, o, identity_perm(p + 1)}; }
    SymElement act(const Perm& sigma, const SymElement& x) const {
        return {x.dim, x.orbit, compose(sigma, x.coset)};
    }
    SymElement face(const SymElement& x, int i) const;
    bool elements_equal(const SymElement& a, const SymElement& b) const;
};

// Delta_g: one p-orbit per isomorphism class of stable weighted genus-g
// graphs with p+1 edges; face i contracts the edge labeled i.  X_{-1} is the
// single weight-g vertex.  The second form reuses an existing J_g
// enumeration (e.g. from the cache).
SymmetricDeltaComplex delta_g(int genus);
SymmetricDeltaComplex delta_g_from_objects(int genus, const std::vector<GraphAnalysis>& jg);

// Fixtures: the quotient of an interval by its flip, and the representable
// functor on [p] (an unordered p-simplex).
SymmetricDeltaComplex half_interval_complex();
SymmetricDeltaComplex representable_complex(int p);

// Verifies d_i d_j = d_{j-1} d_i and the four transposition relations on
// every orbit representative; throws std::logic_error on failure.
void check_sym_relations(const SymmetricDeltaComplex& x);

// Cellular chains: basis = orbits with alternating stabilizers, boundary
// sum_i (-1)^i sgn(coset) on surviving faces.  Degree -1 is included, so
// homology of the result is reduced homology.
GradedChainComplex cellular_chain_complex(const SymmetricDeltaComplex& x);

struct ABSplit {
    GradedChainComplex a;  // loopless, all weights zero
    GradedChainComplex b;  // everything else
};

// Splits the cellular complex of a Delta_g instance by the loop/weight
// predicate; throws std::logic_error if any boundary term crosses the
// partition.
ABSplit split_ab(const SymmetricDeltaComplex& delta);

struct ShiftReport {
    bool ok = true;
    int genus = 0;
    std::vector<std::string> mismatches;
};

// Checks that the A-part equals the graph complex under degree shift
// k <-> k + 2g - 1, bases and boundary matrices both.
ShiftReport shift_check(int genus);

// Barycentric subdivision: an ordinary augmented Delta-complex whose
// q-simplices are flags of subsets, glued along the functor structure.
OrdinaryDeltaComplex barycentric_subdivision(const SymmetricDeltaComplex& x);

// Subdivision with the flag data kept structured: simplex q at dimension d
// is (cell label, flag as a chain of integer sets).
struct SubdividedComplex {
    OrdinaryDeltaComplex complex;
    std::vector<std::vector<std::pair<std::string, std::vector<std::vector<int>>>>> cells;  // [q+1]
};
SubdividedComplex barycentric_subdivision_with_flags(const SymmetricDeltaComplex& x);

// JSON export of the subdivision; flags appear as integer-set arrays.
std::string subdivision_to_json(const SymmetricDeltaComplex& x);

}  // namespace ghom
