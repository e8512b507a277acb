#pragma once

#include "ghom/chain_complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace ghom {

// Augmented Delta-complex (semi-simplicial set): simplex lists per dimension
// from -1 up, plus face maps.  Index q+1 addresses dimension q; faces of a
// 0-simplex point into the (-1) list.
struct OrdinaryDeltaComplex {
    std::vector<std::vector<std::string>> labels;
    std::vector<std::vector<std::vector<int>>> faces;  // [q+1][simplex][i]

    int top_dim() const { return static_cast<int>(labels.size()) - 2; }
    int count(int q) const {
        int idx = q + 1;
        if (idx < 0 || idx >= static_cast<int>(labels.size())) return 0;
        return static_cast<int>(labels[idx].size());
    }
};

// d_i d_j = d_{j-1} d_i for i < j; throws std::logic_error on violation.
void check_simplicial_identities(const OrdinaryDeltaComplex& y);

GradedChainComplex simplicial_chain_complex(const OrdinaryDeltaComplex& y);

// Reduced rational homology dimensions (the complex is augmented).
std::map<int, int> ordinary_simplicial_homology(const OrdinaryDeltaComplex& y);

}  // namespace ghom
