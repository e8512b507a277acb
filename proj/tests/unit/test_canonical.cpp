#include "ghom/canonical.hpp"

#include "ghom/enumerate.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

#include <random>

using namespace ghom;
using namespace ghom::testing;

namespace {

StableGraph shuffled_copy(const StableGraph& g, std::mt19937& rng) {
    Perm vp = identity_perm(g.num_vertices);
    std::shuffle(vp.begin(), vp.end(), rng);
    Perm ep = identity_perm(g.num_edges());
    std::shuffle(ep.begin(), ep.end(), rng);
    StableGraph out;
    out.num_vertices = g.num_vertices;
    out.weights.assign(g.num_vertices, 0);
    for (int v = 0; v < g.num_vertices; ++v) out.weights[vp[v]] = g.weights[v];
    for (int e = 0; e < g.num_edges(); ++e) {
        int f = ep[e];
        int u = vp[g.edge_u(f)], v = vp[g.edge_v(f)];
        if (rng() & 1) std::swap(u, v);
        out.add_edge(u, v);
    }
    return out;
}

}  // namespace

TEST_SUITE("canonical") {

TEST_CASE("canonical form is idempotent with identity relabeling") {
    for (const StableGraph& g : {theta(), dumbbell(), k4(), doubled_c4()}) {
        auto [canon, key] = canonical_form(g);
        auto [canon2, key2] = canonical_form(canon);
        CHECK(key.bytes == key2.bytes);
        CHECK(canon2 == canon);
        CHECK(key2.vertex_relabeling == identity_perm(canon.num_vertices));
        CHECK(key2.edge_relabeling == identity_perm(canon.num_edges()));
    }
}

TEST_CASE("theta key is independent of the labeling") {
    // Both vertex orders, all half-edge orientations.
    std::string expected = key_of(theta());
    for (int mask = 0; mask < 16; ++mask) {
        StableGraph g;
        g.num_vertices = 2;
        g.weights = {0, 0};
        int a = (mask & 8) ? 1 : 0;
        for (int i = 0; i < 3; ++i) {
            int u = a, v = 1 - a;
            if (mask & (1 << i)) std::swap(u, v);
            g.add_edge(u, v);
        }
        CHECK(key_of(g) == expected);
    }
}

TEST_CASE("K4 and the doubled 4-cycle are distinguished") {
    CHECK(key_of(k4()) != key_of(doubled_c4()));
}

TEST_CASE("random relabelings do not change the key") {
    std::mt19937 rng(7);
    for (const GraphAnalysis& an : enumerate_jg(2)) {
        for (int t = 0; t < 100; ++t)
            CHECK(key_of(shuffled_copy(an.canonical, rng)) == an.key.bytes);
    }
    for (const GraphAnalysis& an : enumerate_trivalent(3)) {
        for (int t = 0; t < 100; ++t)
            CHECK(key_of(shuffled_copy(an.canonical, rng)) == an.key.bytes);
    }
}

TEST_CASE("automorphisms of K4") {
    AutInfo info = automorphisms(k4());
    CHECK(info.group_order == 24);
    CHECK_FALSE(info.has_odd_edge_automorphism);
}

TEST_CASE("wheel parity: even wheels die, odd wheels survive") {
    StableGraph w4 = make_graph(5, {0, 0, 0, 0, 0},
                                {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(automorphisms(w4).has_odd_edge_automorphism);
    StableGraph w5 = make_graph(6, {0, 0, 0, 0, 0, 0},
                                {{0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5},
                                 {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    AutInfo info = automorphisms(w5);
    CHECK_FALSE(info.has_odd_edge_automorphism);
    CHECK(info.group_order == 10);  // dihedral
}

TEST_CASE("group order matches the brute-force count") {
    for (const GraphAnalysis& an : enumerate_jg(3))
        CHECK(an.aut.group_order == brute_force_aut_order(an.canonical));
    for (const GraphAnalysis& an : enumerate_trivalent(4))
        CHECK(an.aut.group_order == brute_force_aut_order(an.canonical));
}

TEST_CASE("generators preserve structure and parity is detected") {
    for (const GraphAnalysis& an : enumerate_jg(3)) {
        bool any_odd = false;
        for (const Perm& he : an.aut.generators) {
            int sign = edge_permutation_sign(an.canonical, he);
            if (sign < 0) any_odd = true;
        }
        CHECK(any_odd == an.aut.has_odd_edge_automorphism);
    }
}

TEST_CASE("parallel edges force an odd automorphism") {
    for (const GraphAnalysis& an : enumerate_jg(3)) {
        bool parallel = false;
        std::set<std::pair<int, int>> seen;
        for (int e = 0; e < an.canonical.num_edges(); ++e) {
            int u = an.canonical.edge_u(e), v = an.canonical.edge_v(e);
            if (!seen.insert({std::min(u, v), std::max(u, v)}).second) parallel = true;
        }
        if (parallel) CHECK(an.aut.has_odd_edge_automorphism);
    }
}

TEST_CASE("edge permutation sign") {
    StableGraph t = theta();
    CHECK(edge_permutation_sign(t, identity_perm(6)) == 1);
    // Swap the first two parallel edges: half-edges (0,1) <-> (2,3).
    Perm swap_pair = {2, 3, 0, 1, 4, 5};
    CHECK(edge_permutation_sign(t, swap_pair) == -1);
    // K4 vertex transposition induces two edge 2-cycles.
    StableGraph g = k4();
    AutInfo info = automorphisms(g);
    bool found_transposition_lift = false;
    for (const Perm& he : info.generators) {
        Perm em(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e) em[e] = he[2 * e] / 2;
        int moved = 0;
        for (int e = 0; e < g.num_edges(); ++e)
            if (em[e] != e) ++moved;
        if (moved == 4) {  // a double transposition on edges
            found_transposition_lift = true;
            CHECK(edge_permutation_sign(g, he) == 1);
        }
    }
    CHECK(found_transposition_lift);
    // Malformed input: breaks the pairing involution.
    Perm bad = {1, 0, 2, 3, 4, 5};
    CHECK_THROWS_AS((void)edge_permutation_sign(t, bad), std::invalid_argument);
}

}  // TEST_SUITE
