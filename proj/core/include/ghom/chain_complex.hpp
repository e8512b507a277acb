#pragma once

#include "ghom/sparse_matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ghom {

// A finite chain complex with named bases.  boundaries[i] maps degree
// min_degree+i down to min_degree+i-1; boundaries[0] has zero rows.
struct GradedChainComplex {
    int min_degree = 0;
    std::vector<std::vector<std::string>> bases;
    std::vector<SparseIntMatrix> boundaries;

    int num_degrees() const { return static_cast<int>(bases.size()); }
    int max_degree() const { return min_degree + num_degrees() - 1; }
    bool in_range(int degree) const { return degree >= min_degree && degree <= max_degree(); }
    int dim(int degree) const {
        return in_range(degree) ? static_cast<int>(bases[degree - min_degree].size()) : 0;
    }
    const SparseIntMatrix* boundary_from(int degree) const {
        return in_range(degree) ? &boundaries[degree - min_degree] : nullptr;
    }
};

// Structural check plus the chain-complex axiom; throws std::logic_error
// naming the first offending degree pair.
void check_complex(const GradedChainComplex& c);

// Empty when the boundary squares to zero; otherwise names the offending
// generator.
std::optional<std::string> find_dd_violation(const GradedChainComplex& c);

// Per-degree rational homology dimensions, dim H_d = dim C_d - rank d_d -
// rank d_{d+1}.  Checks the axiom first.
std::map<int, int> homology_dims(const GradedChainComplex& c);

// Same formula with ranks over F_p.  Because mod-p ranks never exceed
// rational ranks, an all-zero answer certifies vanishing.
std::map<int, int> homology_dims_mod_p(const GradedChainComplex& c, std::uint32_t prime);

long long euler_characteristic_of_bases(const GradedChainComplex& c);
long long euler_characteristic(const std::map<int, int>& homology);

// JSON export: per-degree basis keys and boundary triplets sorted (col, row).
std::string complex_to_json(const GradedChainComplex& c);

}  // namespace ghom
