#include "ghom/enumerate.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <set>

using namespace ghom;
using namespace ghom::testing;

namespace {

std::set<std::string> keys_of(const std::vector<GraphAnalysis>& v) {
    std::set<std::string> out;
    for (const GraphAnalysis& an : v) out.insert(an.key.bytes);
    return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("trivalent genus 2 is theta and the dumbbell") {
    auto got = enumerate_trivalent(2);
    REQUIRE(got.size() == 2);
    CHECK(keys_of(got) == std::set<std::string>{key_of(theta()), key_of(dumbbell())});
    for (const GraphAnalysis& an : got)
        CHECK(total_weight(an.canonical) == 0);
}

TEST_CASE("matching and canonical augmentation agree through genus 4") {
    for (int g = 2; g <= 4; ++g) {
        auto matched = enumerate_trivalent_matching(g);
        MultigraphClass cls{2 * g - 2, 3 * g - 3, 3, 3, true};
        auto augmented = enumerate_connected_multigraphs(cls);
        CHECK(keys_of(matched) == keys_of(augmented));
    }
    CHECK(enumerate_trivalent_matching(3).size() == 5);
    CHECK(enumerate_trivalent_matching(4).size() == 17);
}

TEST_CASE("enumerations carry no duplicate keys and are sorted") {
    for (auto v : {enumerate_trivalent(3), enumerate_jg(3), enumerate_gc_generators(4, 0)}) {
        CHECK(keys_of(v).size() == v.size());
        for (size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1].key.bytes < v[i].key.bytes);
    }
}

TEST_CASE("contraction closure at genus 2") {
    auto jg = enumerate_jg(2);
    CHECK(jg.size() == 7);
    CHECK(keys_of(jg).count(key_of(make_graph(1, {2}, {}))) == 1);
    for (const GraphAnalysis& an : jg) {
        CHECK(an.canonical.num_edges() <= 3);
        CHECK(an.canonical.num_vertices <= 2);
        CHECK(genus(an.canonical) == 2);
        CHECK(is_stable(an.canonical));
    }
}

TEST_CASE("contraction closure matches direct generation") {
    for (int g : {2, 3}) {
        auto closure = keys_of(enumerate_jg(g));
        auto direct = brute_force_jg_keys(g);
        CHECK(closure == direct);
    }
}

TEST_CASE("contraction preserves genus and stability across J_3") {
    for (const GraphAnalysis& an : enumerate_jg(3)) {
        CHECK(an.canonical.num_edges() <= 6);
        CHECK(an.canonical.num_vertices <= 4);
        for (int e = 0; e < an.canonical.num_edges(); ++e) {
            StableGraph c = contract(an.canonical, e);
            CHECK(genus(c) == 3);
            CHECK(is_stable(c));
            CHECK(is_connected(c));
        }
    }
}

TEST_CASE("contractions in either order agree up to isomorphism") {
    for (const GraphAnalysis& an : enumerate_jg(3)) {
        const StableGraph& g = an.canonical;
        for (int e = 0; e < g.num_edges(); ++e)
            for (int f = e + 1; f < g.num_edges(); ++f) {
                // After contracting e, edge f lives at index f-1.
                std::string one = key_of(contract(contract(g, e), f - 1));
                std::string two = key_of(contract(contract(g, f), e));
                CHECK(one == two);
            }
    }
}

TEST_CASE("graph-complex generator candidates") {
    CHECK(enumerate_gc_generators(3, 1).empty());  // 5 vertices of valence >= 3 need 15 half-edges, 7 edges give 14
    auto g3k0 = enumerate_gc_generators(3, 0);
    CHECK(keys_of(g3k0) == std::set<std::string>{key_of(k4()), key_of(doubled_c4())});
    // Genus 2 support is the single degree -1, where theta is the only class.
    CHECK(gc_min_degree(2) == -1);
    CHECK(gc_max_degree(2) == -1);
    CHECK(enumerate_gc_generators(2, 0).empty());
    CHECK(keys_of(enumerate_gc_generators(2, -1)) == std::set<std::string>{key_of(theta())});
}

TEST_CASE("generator candidates match the brute-force oracle") {
    for (auto [g, k] : std::vector<std::pair<int, int>>{{2, -1}, {3, -2}, {3, -1}, {3, 0}, {4, -2}})
        CHECK(keys_of(enumerate_gc_generators(g, k)) == brute_force_gc_keys(g, k));
}

}  // TEST_SUITE
