#pragma once

#include "ghom/sparse_matrix.hpp"

#include <cstdint>
#include <vector>

namespace ghom {

// Rank over Q by fraction-free (Bareiss) elimination with Markowitz-style
// min-degree pivoting; exact.
int rank_exact(const SparseIntMatrix& m);

// Rank over F_p; always a lower bound for the rational rank.
int rank_mod_p(const SparseIntMatrix& m, std::uint32_t prime);

// Fixed 31-bit primes consumed in order by the checked-rank retry loop, so
// results are reproducible across runs and platforms.
const std::vector<std::uint32_t>& rank_check_primes();

struct RankResult {
    int exact = 0;
    int mod_p = 0;
    std::uint32_t prime = 0;
    int retries = 0;  // extra primes consumed before exact == mod_p
    bool agreed = false;
};

// Exact rank plus the mod-p cross-check, retrying with fresh primes (up to
// three) when the prime loses rank.
RankResult rank_checked(const SparseIntMatrix& m);

// Is b in the column space of m?  Decided exactly on the augmented matrix.
bool in_column_space(const SparseIntMatrix& m, const std::vector<Rational>& b);

}  // namespace ghom
