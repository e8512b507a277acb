#include "ghom/graph_complex.hpp"

#include "ghom/chain_complex.hpp"
#include "ghom/enumerate.hpp"
#include "ghom/exact_rank.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace ghom;
using namespace ghom::testing;

TEST_SUITE("graph_complex") {

TEST_CASE("normalize kills the theta graph") {
    CHECK(normalize(theta()).sign == 0);
}

TEST_CASE("normalize of K4 and a transposed ordering") {
    SignedGenerator base = normalize(k4());
    CHECK(base.sign == 1);  // K4 is canonical already
    std::vector<int> order = {1, 0, 2, 3, 4, 5};
    SignedGenerator swapped = normalize(k4(), order);
    CHECK(swapped.key == base.key);
    CHECK(swapped.sign == -1);
}

TEST_CASE("normalize rejects graphs outside the complex") {
    CHECK_THROWS_AS((void)normalize(dumbbell()), std::invalid_argument);          // loops
    CHECK_THROWS_AS((void)normalize(make_graph(2, {1, 0},
        {{0, 1}, {0, 1}, {0, 1}})), std::invalid_argument);                       // weight
    CHECK_THROWS_AS((void)normalize(make_graph(3, {0, 0, 0},
        {{0, 1}, {0, 1}, {1, 2}, {0, 2}})), std::invalid_argument);               // valence 2
}

TEST_CASE("normalize is sgn-equivariant") {
    std::mt19937 rng(3);
    for (const GraphAnalysis& an : enumerate_gc_generators(4, 0)) {
        if (an.aut.has_odd_edge_automorphism) continue;
        SignedGenerator base = normalize(an.canonical);
        for (int t = 0; t < 50; ++t) {
            Perm sigma = identity_perm(an.canonical.num_edges());
            std::shuffle(sigma.begin(), sigma.end(), rng);
            SignedGenerator got = normalize(an.canonical, sigma);
            CHECK(got.key == base.key);
            CHECK(got.sign == perm_sign(sigma) * base.sign);
        }
    }
}

TEST_CASE("wheels") {
    CHECK(key_of(wheel(3)) == key_of(k4()));
    CHECK(normalize(wheel(4)).sign == 0);
    StableGraph w5 = wheel(5);
    CHECK(w5.num_vertices == 6);
    CHECK(w5.num_edges() == 10);
    CHECK(genus(w5) == 5);
    CHECK_THROWS_AS((void)wheel(2), std::invalid_argument);
}

TEST_CASE("wheel cycles: boundary vanishes for g = 3 and 5") {
    for (int g : {3, 5}) {
        SignedGenerator n = normalize(wheel(g));
        REQUIRE(n.sign != 0);
        CHECK(boundary(n.graph).empty());
    }
}

TEST_CASE("boundary of K4 vanishes because every contraction is parallel") {
    CHECK(boundary(normalize(k4()).graph).empty());
}

TEST_CASE("genus 3: K4 spans degree 0, degree 1 empty, homology is one-dimensional") {
    GraphComplex gc = build_graph_complex(3);
    CHECK(gc.complex.dim(0) == 1);
    CHECK(gc.complex.bases[-gc.complex.min_degree][0] == key_of(k4()));
    CHECK(gc.complex.dim(1) == 0);
    auto h = homology_dims(gc.complex);
    for (auto [k, v] : h) CHECK(v == (k == 0 ? 1 : 0));
}

TEST_CASE("genus 2: every degree is empty") {
    GraphComplex gc = build_graph_complex(2);
    for (int k = gc.complex.min_degree; k <= gc.complex.max_degree(); ++k)
        CHECK(gc.complex.dim(k) == 0);
}

TEST_CASE("boundary squares to zero (genus up to 4)") {
    for (int g : {2, 3, 4}) CHECK_FALSE(find_dd_violation(build_graph_complex(g).complex).has_value());
}

TEST_CASE("coboundary is the transpose of the boundary and squares to zero") {
    for (int g : {3, 4}) {
        GraphComplex gc = build_graph_complex(g);
        auto cob = build_coboundaries(gc);
        for (int i = 0; i + 1 < gc.complex.num_degrees(); ++i)
            CHECK(equal(cob[i], transpose(gc.complex.boundaries[i + 1])));
        for (int i = 0; i + 2 < gc.complex.num_degrees(); ++i)
            CHECK(multiply(cob[i + 1], cob[i]).is_zero());
    }
}

TEST_CASE("coboundary of K4 lands in the empty degree above") {
    CHECK(dual_coboundary(normalize(k4()).graph).empty());
}

TEST_CASE("euler characteristic consistency") {
    for (int g : {2, 3, 4}) {
        GraphComplex gc = build_graph_complex(g);
        CHECK(euler_characteristic_of_bases(gc.complex) ==
              euler_characteristic(homology_dims(gc.complex)));
    }
}

}  // TEST_SUITE
