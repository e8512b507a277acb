#include "ghom/ordinary_delta.hpp"

#include <stdexcept>

namespace ghom {

void check_simplicial_identities(const OrdinaryDeltaComplex& y) {
    for (int q = 1; q <= y.top_dim(); ++q) {
        for (int s = 0; s < y.count(q); ++s) {
            for (int j = 1; j <= q; ++j)
                for (int i = 0; i < j; ++i) {
                    int lhs = y.faces[q][y.faces[q + 1][s][j]][i];
                    int rhs = y.faces[q][y.faces[q + 1][s][i]][j - 1];
                    if (lhs != rhs)
                        throw std::logic_error("simplicial identity fails at dim " + std::to_string(q) +
                                               " simplex " + std::to_string(s));
                }
        }
    }
}

GradedChainComplex simplicial_chain_complex(const OrdinaryDeltaComplex& y) {
    GradedChainComplex c;
    c.min_degree = -1;
    int levels = static_cast<int>(y.labels.size());
    c.bases.resize(levels);
    c.boundaries.resize(levels);
    for (int idx = 0; idx < levels; ++idx) c.bases[idx] = y.labels[idx];
    for (int idx = 0; idx < levels; ++idx) {
        int q = idx - 1;
        int rows = (idx == 0) ? 0 : static_cast<int>(y.labels[idx - 1].size());
        std::vector<Triplet> raw;
        if (q >= 0) {
            for (int s = 0; s < y.count(q); ++s)
                for (int i = 0; i <= q; ++i)
                    raw.push_back({y.faces[idx][s][i], s, (i % 2 == 0) ? Integer(1) : Integer(-1)});
        }
        c.boundaries[idx] =
            SparseIntMatrix::from_triplets(rows, static_cast<int>(y.labels[idx].size()), std::move(raw));
    }
    return c;
}

std::map<int, int> ordinary_simplicial_homology(const OrdinaryDeltaComplex& y) {
    check_simplicial_identities(y);
    return homology_dims(simplicial_chain_complex(y));
}

}  // namespace ghom
