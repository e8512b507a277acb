#include "ghom/stable_graph.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace ghom;
using namespace ghom::testing;

TEST_SUITE("stable_graph") {

TEST_CASE("genus") {
    CHECK(genus(make_graph(1, {3}, {})) == 3);
    CHECK(genus(theta()) == 2);
    StableGraph w5 = make_graph(6, {0, 0, 0, 0, 0, 0},
                                {{0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5},
                                 {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(genus(w5) == 5);
}

TEST_CASE("stability") {
    CHECK(is_stable(make_graph(1, {2}, {})));
    // weight-0 valence-2 vertex in the middle of a path
    CHECK_FALSE(is_stable(make_graph(3, {1, 0, 1}, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_stable(make_graph(1, {1}, {})));
}

TEST_CASE("loops count twice toward valence") {
    StableGraph g = make_graph(2, {0, 0}, {{0, 0}, {0, 1}, {1, 1}});
    CHECK(valence(g, 0) == 3);
    CHECK(valence(g, 1) == 3);
    CHECK(is_stable(g));
}

TEST_CASE("contract bridge of the dumbbell") {
    StableGraph g = contract(dumbbell(), 1);
    CHECK(g.num_vertices == 1);
    CHECK(g.weights == std::vector<int>{0});
    CHECK(g.num_edges() == 2);
    CHECK(genus(g) == 2);
    CHECK(key_of(g) == key_of(make_graph(1, {0}, {{0, 0}, {0, 0}})));
}

TEST_CASE("contract loop of the dumbbell bumps the weight") {
    StableGraph g = contract(dumbbell(), 0);
    CHECK(genus(g) == 2);
    CHECK(key_of(g) == key_of(make_graph(2, {0, 1}, {{0, 0}, {0, 1}})));
}

TEST_CASE("contract theta edge") {
    StableGraph g = contract(theta(), 0);
    CHECK(genus(g) == 2);
    CHECK(key_of(g) == key_of(make_graph(1, {0}, {{0, 0}, {0, 0}})));
}

TEST_CASE("contract rejects bad edge ids") {
    CHECK_THROWS_AS((void)contract(theta(), 3), std::invalid_argument);
    CHECK_THROWS_AS((void)contract(make_graph(1, {2}, {}), 0), std::invalid_argument);
}

TEST_CASE("json line round trip") {
    for (const StableGraph& g : {theta(), dumbbell(), k4(), make_graph(1, {2}, {})}) {
        StableGraph back = from_json_line(to_json_line(g));
        CHECK(back == g);
    }
    CHECK_THROWS(from_json_line(R"({"genus":9,"weights":[0,0],"edges":[[0,1],[0,1],[0,1]]})"));
    CHECK_THROWS(from_json_line(R"({"genus":2,"weights":[0,-1],"edges":[[0,1],[0,1],[0,1]]})"));
}

}  // TEST_SUITE
