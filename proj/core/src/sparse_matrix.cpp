#include "ghom/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ghom {

SparseIntMatrix SparseIntMatrix::from_triplets(int rows, int cols, std::vector<Triplet> raw) {
    for (const Triplet& t : raw)
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::invalid_argument("triplet index out of range");
    std::sort(raw.begin(), raw.end(), [](const Triplet& a, const Triplet& b) {
        return std::tie(a.col, a.row) < std::tie(b.col, b.row);
    });
    SparseIntMatrix m;
    m.rows = rows;
    m.cols = cols;
    for (Triplet& t : raw) {
        if (!m.entries.empty() && m.entries.back().row == t.row && m.entries.back().col == t.col) {
            m.entries.back().value += t.value;
            if (m.entries.back().value == 0) m.entries.pop_back();
        } else if (t.value != 0) {
            m.entries.push_back(std::move(t));
        }
    }
    return m;
}

SparseIntMatrix transpose(const SparseIntMatrix& m) {
    std::vector<Triplet> raw;
    raw.reserve(m.entries.size());
    for (const Triplet& t : m.entries) raw.push_back({t.col, t.row, t.value});
    return SparseIntMatrix::from_triplets(m.cols, m.rows, std::move(raw));
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("multiply: dimension mismatch");
    // Column-of-b at a time; a indexed by column.
    std::vector<std::vector<const Triplet*>> a_cols(a.cols);
    for (const Triplet& t : a.entries) a_cols[t.col].push_back(&t);
    std::vector<Triplet> raw;
    std::map<int, Integer> acc;
    size_t i = 0;
    while (i < b.entries.size()) {
        int col = b.entries[i].col;
        acc.clear();
        for (; i < b.entries.size() && b.entries[i].col == col; ++i) {
            const Triplet& tb = b.entries[i];
            for (const Triplet* ta : a_cols[tb.row]) acc[ta->row] += ta->value * tb.value;
        }
        for (auto& [row, v] : acc)
            if (v != 0) raw.push_back({row, col, std::move(v)});
    }
    return SparseIntMatrix::from_triplets(a.rows, b.cols, std::move(raw));
}

bool equal(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols || a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].row != b.entries[i].row || a.entries[i].col != b.entries[i].col ||
            a.entries[i].value != b.entries[i].value)
            return false;
    }
    return true;
}

std::string to_coordinate_text(const SparseIntMatrix& m) {
    std::ostringstream os;
    os << m.rows << " " << m.cols << " " << m.nnz() << "\n";
    for (const Triplet& t : m.entries) os << t.row << " " << t.col << " " << t.value << "\n";
    return os.str();
}

SparseIntMatrix from_coordinate_text(const std::string& text) {
    std::istringstream is(text);
    int rows, cols;
    std::size_t nnz;
    if (!(is >> rows >> cols >> nnz)) throw std::invalid_argument("bad matrix header");
    std::vector<Triplet> raw;
    raw.reserve(nnz);
    for (std::size_t i = 0; i < nnz; ++i) {
        Triplet t;
        std::string v;
        if (!(is >> t.row >> t.col >> v)) throw std::invalid_argument("truncated matrix body");
        t.value = Integer(v);
        raw.push_back(std::move(t));
    }
    return SparseIntMatrix::from_triplets(rows, cols, std::move(raw));
}

}  // namespace ghom
