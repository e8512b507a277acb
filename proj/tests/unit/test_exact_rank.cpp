#include "ghom/exact_rank.hpp"

#include "ghom/chain_complex.hpp"
#include "ghom/graph_complex.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace ghom;

namespace {

SparseIntMatrix dense(int rows, int cols, const std::vector<std::vector<long long>>& m) {
    std::vector<Triplet> raw;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (m[r][c]) raw.push_back({r, c, Integer(m[r][c])});
    return SparseIntMatrix::from_triplets(rows, cols, std::move(raw));
}

// Rank over Q by plain rational elimination; the independent oracle.
int rank_rational_oracle(const SparseIntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, Rational(0)));
    for (const Triplet& t : m.entries) a[t.row][t.col] = Rational(t.value);
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[rank][c];
            for (int j = c; j < m.cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_SUITE("exact_rank") {

TEST_CASE("identity and zero") {
    CHECK(rank_exact(dense(2, 2, {{1, 0}, {0, 1}})) == 2);
    CHECK(rank_exact(SparseIntMatrix::from_triplets(3, 4, {})) == 0);
}

TEST_CASE("rank matches a rational elimination oracle on random matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8), cols = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols, 0));
        for (auto& row : m)
            for (auto& x : row)
                if (rng() % 3 == 0) x = static_cast<long long>(rng() % 7) - 3;
        SparseIntMatrix s = dense(rows, cols, m);
        int expected = rank_rational_oracle(s);
        CHECK(rank_exact(s) == expected);
        CHECK(rank_exact(transpose(s)) == expected);
        CHECK(rank_mod_p(s, rank_check_primes()[0]) <= expected);
    }
}

TEST_CASE("mod-p rank can drop and the checked rank reports it") {
    // 1x1 matrix [2^31 - 1] vanishes mod the first listed prime.
    SparseIntMatrix m = SparseIntMatrix::from_triplets(1, 1, {{0, 0, Integer(2147483647)}});
    CHECK(rank_mod_p(m, 2147483647u) == 0);
    RankResult res = rank_checked(m);
    CHECK(res.exact == 1);
    CHECK(res.agreed);
    CHECK(res.retries >= 1);
}

TEST_CASE("graph-complex boundaries: exact rank equals mod-p rank") {
    GraphComplex gc = build_graph_complex(4);
    for (const SparseIntMatrix& b : gc.complex.boundaries) {
        RankResult res = rank_checked(b);
        CHECK(res.agreed);
        CHECK(res.retries == 0);
        CHECK(rank_exact(transpose(b)) == res.exact);
    }
}

TEST_CASE("column space membership") {
    SparseIntMatrix m = dense(3, 2, {{1, 0}, {1, 1}, {0, 2}});
    CHECK(in_column_space(m, {Rational(0), Rational(0), Rational(0)}));
    CHECK(in_column_space(m, {Rational(1), Rational(1), Rational(0)}));
    CHECK(in_column_space(m, {Rational(1, 2), Rational(1, 2), Rational(0)}));
    CHECK_FALSE(in_column_space(m, {Rational(1), Rational(0), Rational(0)}));
    CHECK_THROWS_AS((void)in_column_space(m, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("homology dimensions of a two-step complex") {
    // 0 -> Q -> Q^2 -> Q -> 0 with d(x) = (x, -x), d(a, b) = a + b.
    GradedChainComplex c;
    c.min_degree = 0;
    c.bases = {{"bottom"}, {"mid0", "mid1"}, {"top"}};
    c.boundaries.resize(3);
    c.boundaries[0] = SparseIntMatrix::from_triplets(0, 1, {});
    c.boundaries[1] = dense(1, 2, {{1, 1}});
    c.boundaries[2] = dense(2, 1, {{1}, {-1}});
    auto h = homology_dims(c);
    CHECK(h == std::map<int, int>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(euler_characteristic_of_bases(c) == euler_characteristic(h));

    // Breaking the composition is detected.
    c.boundaries[2] = dense(2, 1, {{1}, {1}});
    CHECK_THROWS_AS(homology_dims(c), std::logic_error);
    CHECK(find_dd_violation(c).has_value());
}

TEST_CASE("coordinate text round trip") {
    SparseIntMatrix m = dense(3, 3, {{0, -2, 0}, {1, 0, 0}, {0, 0, 5}});
    SparseIntMatrix back = from_coordinate_text(to_coordinate_text(m));
    CHECK(equal(m, back));
}

}  // TEST_SUITE
