#pragma once

#include "ghom/numbers.hpp"

#include <string>
#include <vector>

namespace ghom {

struct Triplet {
    int row = 0;
    int col = 0;
    Integer value;
};

// Coordinate-format sparse matrix over the integers.  Entries are kept
// sorted by (col, row), duplicate-free, with no explicit zeros.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Triplet> entries;

    // Accumulates duplicates, drops zeros, sorts by (col, row).
    static SparseIntMatrix from_triplets(int rows, int cols, std::vector<Triplet> raw);

    std::size_t nnz() const { return entries.size(); }
    bool is_zero() const { return entries.empty(); }
};

SparseIntMatrix transpose(const SparseIntMatrix& m);
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);
bool equal(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Text format: header "rows cols nnz", then one "r c v" line per entry,
// sorted by (c, r).
std::string to_coordinate_text(const SparseIntMatrix& m);
SparseIntMatrix from_coordinate_text(const std::string& text);

}  // namespace ghom
