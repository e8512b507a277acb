#include "ghom/sym_delta.hpp"

#include "ghom/enumerate.hpp"
#include "ghom/graph_complex.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <map>

using namespace ghom;
using namespace ghom::testing;

namespace {

int dim_or_zero(const std::map<int, int>& h, int d) {
    auto it = h.find(d);
    return it == h.end() ? 0 : it->second;
}

}  // namespace

TEST_SUITE("sym_delta") {

TEST_CASE("half interval: chains and homology") {
    SymmetricDeltaComplex x = half_interval_complex();
    check_sym_relations(x);
    GradedChainComplex c = cellular_chain_complex(x);
    CHECK(c.dim(-1) == 1);
    CHECK(c.dim(0) == 1);
    CHECK(c.dim(1) == 0);  // the 1-cell has the full S_2 as stabilizer
    for (auto [k, h] : homology_dims(c)) CHECK(h == 0);
}

TEST_CASE("representable complexes are contractible") {
    for (int p : {1, 2, 3}) {
        SymmetricDeltaComplex x = representable_complex(p);
        check_sym_relations(x);
        for (auto [k, h] : homology_dims(cellular_chain_complex(x))) CHECK(h == 0);
    }
}

TEST_CASE("Delta_2: orbit counts match the contraction closure by edge count") {
    SymmetricDeltaComplex d2 = delta_g(2);
    CHECK(d2.top_dim() == 2);
    std::map<int, int> by_edges;
    for (const GraphAnalysis& an : enumerate_jg(2)) by_edges[an.canonical.num_edges()]++;
    for (int p = -1; p <= 2; ++p) CHECK(d2.count(p) == by_edges[p + 1]);
    check_sym_relations(d2);
}

TEST_CASE("Delta_2 has trivial reduced homology") {
    auto h = homology_dims(cellular_chain_complex(delta_g(2)));
    for (auto [k, v] : h) CHECK(v == 0);
}

TEST_CASE("Delta_3 has one class in reduced degree 5") {
    auto h = homology_dims(cellular_chain_complex(delta_g(3)));
    for (auto [k, v] : h) CHECK(v == (k == 5 ? 1 : 0));
}

TEST_CASE("boundary squares to zero on Delta_3") {
    CHECK_FALSE(find_dd_violation(cellular_chain_complex(delta_g(3))).has_value());
}

TEST_CASE("A/B split: dimensions add and blocks are closed") {
    for (int g : {2, 3}) {
        SymmetricDeltaComplex delta = delta_g(g);
        GradedChainComplex c = cellular_chain_complex(delta);
        ABSplit split = split_ab(delta);  // throws if a boundary crosses
        for (int p = -1; p <= delta.top_dim(); ++p)
            CHECK(split.a.dim(p) + split.b.dim(p) == c.dim(p));
    }
}

TEST_CASE("A-part of Delta_3 is spanned by K4 at the top") {
    ABSplit split = split_ab(delta_g(3));
    CHECK(split.a.dim(5) == 1);
    CHECK(split.a.bases[6][0] == key_of(k4()));
    // Genus 2: the only candidate is killed by parity.
    ABSplit split2 = split_ab(delta_g(2));
    for (int p = -1; p <= 2; ++p) CHECK(split2.a.dim(p) == 0);
}

TEST_CASE("B-part is acyclic at genus 2 and 3") {
    for (int g : {2, 3}) {
        auto h = homology_dims(split_ab(delta_g(g)).b);
        for (auto [k, v] : h) CHECK(v == 0);
    }
}

TEST_CASE("shift check: bases and matrices agree with the graph complex") {
    for (int g : {2, 3, 4}) {
        ShiftReport rep = shift_check(g);
        CHECK(rep.ok);
    }
}

TEST_CASE("homology of the full complex equals homology of the A-part") {
    for (int g : {2, 3, 4}) {
        SymmetricDeltaComplex delta = delta_g(g);
        auto full = homology_dims(cellular_chain_complex(delta));
        auto pure = homology_dims(split_ab(delta).a);
        for (int d = -1; d <= delta.top_dim(); ++d)
            CHECK(dim_or_zero(full, d) == dim_or_zero(pure, d));
    }
}

TEST_CASE("reduced homology of Delta_g matches the shifted graph complex") {
    for (int g : {2, 3}) {
        auto delta_h = homology_dims(cellular_chain_complex(delta_g(g)));
        auto gc_h = homology_dims(build_graph_complex(g).complex);
        for (int k = 1 - g; k <= g - 3; ++k)
            CHECK(dim_or_zero(gc_h, k) == dim_or_zero(delta_h, 2 * g + k - 1));
        for (auto [d, v] : delta_h)
            if (d < 2 * g + (1 - g) - 1) CHECK(v == 0);
    }
}

}  // TEST_SUITE

TEST_SUITE("subdivision") {

TEST_CASE("subdividing the half interval gives an interval") {
    OrdinaryDeltaComplex sd = barycentric_subdivision(half_interval_complex());
    check_simplicial_identities(sd);
    CHECK(sd.count(0) == 2);
    CHECK(sd.count(1) == 1);
    // The edge joins the two distinct vertices.
    CHECK(sd.faces[2][0][0] != sd.faces[2][0][1]);
}

TEST_CASE("subdividing the representable interval gives a path") {
    OrdinaryDeltaComplex sd = barycentric_subdivision(representable_complex(1));
    CHECK(sd.count(0) == 3);
    CHECK(sd.count(1) == 2);
    for (auto [k, h] : ordinary_simplicial_homology(sd)) CHECK(h == 0);
}

TEST_CASE("circle fixture") {
    OrdinaryDeltaComplex circle;
    circle.labels = {{"*"}, {"v"}, {"e"}};
    circle.faces = {{{}}, {{0}}, {{0, 0}}};
    auto h = ordinary_simplicial_homology(circle);
    CHECK(h[1] == 1);
    CHECK(h[0] == 0);
}

TEST_CASE("point fixture has no reduced homology") {
    OrdinaryDeltaComplex point;
    point.labels = {{"*"}, {"v"}};
    point.faces = {{{}}, {{0}}};
    for (auto [k, h] : ordinary_simplicial_homology(point)) CHECK(h == 0);
}

TEST_CASE("subdivision of Delta_2 matches the cellular answer") {
    SymmetricDeltaComplex d2 = delta_g(2);
    OrdinaryDeltaComplex sd = barycentric_subdivision(d2);
    check_simplicial_identities(sd);
    auto cellular = homology_dims(cellular_chain_complex(d2));
    auto simplicial = ordinary_simplicial_homology(sd);
    for (int d = -1; d <= d2.top_dim(); ++d) {
        auto it_c = cellular.find(d);
        auto it_s = simplicial.find(d);
        CHECK((it_c == cellular.end() ? 0 : it_c->second) ==
              (it_s == simplicial.end() ? 0 : it_s->second));
    }
}

TEST_CASE("subdivision vertex count equals the number of cells") {
    SymmetricDeltaComplex d2 = delta_g(2);
    int cells = 0;
    for (int p = 0; p <= d2.top_dim(); ++p) cells += d2.count(p);
    CHECK(barycentric_subdivision(d2).count(0) == cells);
}

}  // TEST_SUITE
