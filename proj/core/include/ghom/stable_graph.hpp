#pragma once

#include <string>
#include <vector>

namespace ghom {

// An edge is named by the smaller of its two half-edge ids.
struct EdgeId {
    int smaller_half_edge = 0;

    static EdgeId from_index(int e) { return EdgeId{2 * e}; }
    int index() const { return smaller_half_edge / 2; }

    friend bool operator==(EdgeId a, EdgeId b) = default;
};

// Weighted multigraph in half-edge form.  Half-edge h is paired with h^1,
// so edge i owns half-edges 2i and 2i+1; incidence[h] is the vertex h ends
// on.  Loops have incidence[2i] == incidence[2i+1]; parallel edges are
// simply repeated pairs.  This matches the JSONL edge-list layout exactly.
struct StableGraph {
    int num_vertices = 0;
    std::vector<int> weights;    // one per vertex, >= 0
    std::vector<int> incidence;  // size 2*num_edges

    int num_edges() const { return static_cast<int>(incidence.size()) / 2; }
    int num_half_edges() const { return static_cast<int>(incidence.size()); }
    static int partner(int h) { return h ^ 1; }
    int edge_u(int e) const { return incidence[2 * e]; }
    int edge_v(int e) const { return incidence[2 * e + 1]; }
    bool is_loop(int e) const { return edge_u(e) == edge_v(e); }

    void add_edge(int u, int v) {
        incidence.push_back(u);
        incidence.push_back(v);
    }

    friend bool operator==(const StableGraph&, const StableGraph&) = default;
};

int valence(const StableGraph& g, int v);
int total_weight(const StableGraph& g);
bool is_connected(const StableGraph& g);

// b1 + total weight; only meaningful for connected graphs.
int genus(const StableGraph& g);

// 2w(v) - 2 + val(v) > 0 at every vertex.
bool is_stable(const StableGraph& g);

// Structural sanity: weights sized and nonnegative, incidences in range,
// even half-edge count.  Throws std::invalid_argument on violation.
void validate(const StableGraph& g);

// Collapse edge e.  A non-loop merges its endpoints (weights add, the
// surviving vertex is the smaller index, higher vertices shift down); a
// loop bumps its endpoint weight by one.  Remaining edges keep their
// relative order, so edge j of the result is old edge (j < e ? j : j+1).
// Throws std::invalid_argument for an out-of-range edge.
StableGraph contract(const StableGraph& g, EdgeId e);
inline StableGraph contract(const StableGraph& g, int e) { return contract(g, EdgeId::from_index(e)); }

// One JSONL record: {"genus":g,"weights":[...],"edges":[[u,v],...]}.
// Half-edge ids are assigned in edge-list order, so this round-trips the
// half-edge structure losslessly.
std::string to_json_line(const StableGraph& g);
StableGraph from_json_line(const std::string& line);

}  // namespace ghom
