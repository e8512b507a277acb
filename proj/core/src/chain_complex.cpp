#include "ghom/chain_complex.hpp"

#include "ghom/exact_rank.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace ghom {

void check_complex(const GradedChainComplex& c) {
    if (c.bases.size() != c.boundaries.size())
        throw std::logic_error("complex: bases/boundaries length mismatch");
    for (int i = 0; i < c.num_degrees(); ++i) {
        int expected_rows = (i == 0) ? 0 : static_cast<int>(c.bases[i - 1].size());
        if (c.boundaries[i].cols != static_cast<int>(c.bases[i].size()) ||
            c.boundaries[i].rows != expected_rows)
            throw std::logic_error("complex: boundary shape mismatch at degree " +
                                   std::to_string(c.min_degree + i));
    }
    for (int i = 0; i + 1 < c.num_degrees(); ++i) {
        if (!multiply(c.boundaries[i], c.boundaries[i + 1]).is_zero())
            throw std::logic_error("boundary does not square to zero between degrees " +
                                   std::to_string(c.min_degree + i + 1) + " and " +
                                   std::to_string(c.min_degree + i - 1));
    }
}

std::optional<std::string> find_dd_violation(const GradedChainComplex& c) {
    for (int i = 0; i + 1 < c.num_degrees(); ++i) {
        SparseIntMatrix prod = multiply(c.boundaries[i], c.boundaries[i + 1]);
        if (prod.is_zero()) continue;
        int col = prod.entries.front().col;
        return "boundary fails to square to zero on generator " + c.bases[i + 1][col] +
               " in degree " + std::to_string(c.min_degree + i + 1);
    }
    return std::nullopt;
}

namespace {

template <typename RankFn>
std::map<int, int> dims_with(const GradedChainComplex& c, RankFn rank) {
    check_complex(c);
    std::vector<int> ranks(c.num_degrees() + 1, 0);
    for (int i = 0; i < c.num_degrees(); ++i) ranks[i] = rank(c.boundaries[i]);
    std::map<int, int> h;
    for (int i = 0; i < c.num_degrees(); ++i) {
        int d = c.min_degree + i;
        h[d] = c.dim(d) - ranks[i] - ranks[i + 1];
    }
    return h;
}

}  // namespace

std::map<int, int> homology_dims(const GradedChainComplex& c) {
    return dims_with(c, [](const SparseIntMatrix& m) { return rank_exact(m); });
}

std::map<int, int> homology_dims_mod_p(const GradedChainComplex& c, std::uint32_t prime) {
    return dims_with(c, [&](const SparseIntMatrix& m) { return rank_mod_p(m, prime); });
}

long long euler_characteristic_of_bases(const GradedChainComplex& c) {
    long long chi = 0;
    for (int d = c.min_degree; d <= c.max_degree(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dim(d));
    return chi;
}

long long euler_characteristic(const std::map<int, int>& homology) {
    long long chi = 0;
    for (auto [d, h] : homology) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(h);
    return chi;
}

std::string complex_to_json(const GradedChainComplex& c) {
    nlohmann::ordered_json j;
    j["min_degree"] = c.min_degree;
    auto degrees = nlohmann::ordered_json::array();
    for (int i = 0; i < c.num_degrees(); ++i) {
        nlohmann::ordered_json d;
        d["degree"] = c.min_degree + i;
        d["basis"] = c.bases[i];
        nlohmann::ordered_json b;
        b["rows"] = c.boundaries[i].rows;
        b["cols"] = c.boundaries[i].cols;
        auto entries = nlohmann::ordered_json::array();
        for (const Triplet& t : c.boundaries[i].entries)
            entries.push_back({t.row, t.col, t.value.convert_to<long long>()});
        b["entries"] = entries;
        d["boundary"] = b;
        degrees.push_back(d);
    }
    j["degrees"] = degrees;
    return j.dump();
}

}  // namespace ghom
