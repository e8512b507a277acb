#include "ghom/sym_delta.hpp"

#include "ghom/canonical.hpp"
#include "ghom/enumerate.hpp"
#include "ghom/graph_complex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ghom {

namespace {

bool stabilizer_contains(const std::vector<Perm>& stab, const Perm& p) {
    return std::find(stab.begin(), stab.end(), p) != stab.end();
}

}  // namespace

SymElement SymmetricDeltaComplex::face(const SymElement& x, int i) const {
    const int p = x.dim;
    // d_i(sigma * rep) = rho^{-1} * d_{i'}(rep) with i' = sigma^{-1}(i) and
    // rho the residual permutation of [p-1] from sigma^{-1} o delta^i =
    // delta^{i'} o rho.
    Perm sigma_inv = inverse(x.coset);
    int ip = sigma_inv[i];
    Perm rho(p);
    for (int t = 0; t < p; ++t) {
        int s = sigma_inv[t < i ? t : t + 1];
        rho[t] = s < ip ? s : s - 1;
    }
    const SymElement& base = orbits[p + 1][x.orbit].faces[ip];
    return {p - 1, base.orbit, compose(inverse(rho), base.coset)};
}

bool SymmetricDeltaComplex::elements_equal(const SymElement& a, const SymElement& b) const {
    if (a.dim != b.dim || a.orbit != b.orbit) return false;
    return stabilizer_contains(orbit_of(a).stabilizer, compose(inverse(b.coset), a.coset));
}

namespace {

// Element of X_{p-1} reached by contracting edge `label` of the canonical
// representative graph, expressed against the canonical target orbit.
SymElement contracted_element(const StableGraph& rep, int label,
                              const std::map<std::string, int>& orbit_index) {
    GraphAnalysis an = analyze_graph(contract(rep, label));
    auto it = orbit_index.find(an.key.bytes);
    if (it == orbit_index.end()) throw std::logic_error("contraction left the enumerated set");
    // Edges of the contraction inherit labels in order; the canonical
    // relabeling pi turns the representative's identity labeling into the
    // coset pi^{-1}.
    return {rep.num_edges() - 2, it->second, inverse(an.key.edge_relabeling)};
}

}  // namespace

SymmetricDeltaComplex delta_g(int genus) {
    return delta_g_from_objects(genus, enumerate_jg(genus));
}

SymmetricDeltaComplex delta_g_from_objects(int genus, const std::vector<GraphAnalysis>& jg) {
    if (genus < 2) throw std::invalid_argument("genus must be >= 2");
    const int top = 3 * genus - 4;

    SymmetricDeltaComplex x;
    x.orbits.resize(top + 2);

    std::vector<std::map<std::string, int>> index_by_dim(top + 2);
    for (const GraphAnalysis& an : jg) {
        int p = an.canonical.num_edges() - 1;
        auto& dim_orbits = x.orbits[p + 1];
        index_by_dim[p + 1][an.key.bytes] = static_cast<int>(dim_orbits.size());
        SymOrbit orbit;
        orbit.label = an.key.bytes;
        orbit.graph = an.canonical;
        orbit.has_graph = true;
        orbit.stabilizer = edge_permutation_group(an.canonical);
        orbit.all_even = !an.aut.has_odd_edge_automorphism;
        dim_orbits.push_back(std::move(orbit));
    }
    if (x.orbits[0].size() != 1)
        throw std::logic_error("X_{-1} must be the single weight-g vertex");

    for (int p = 0; p <= top; ++p) {
        for (SymOrbit& orbit : x.orbits[p + 1]) {
            orbit.faces.reserve(p + 1);
            for (int i = 0; i <= p; ++i)
                orbit.faces.push_back(contracted_element(orbit.graph, i, index_by_dim[p]));
        }
    }
    return x;
}

SymmetricDeltaComplex half_interval_complex() {
    SymmetricDeltaComplex x;
    x.orbits.resize(3);
    x.orbits[0].push_back({"*", {}, false, {Perm{}}, true, {}});
    x.orbits[1].push_back({"pt", {}, false, {identity_perm(1)}, true, {SymElement{-1, 0, Perm{}}}});
    SymOrbit arc;
    arc.label = "arc";
    arc.stabilizer = {identity_perm(2), transposition(2, 0, 1)};
    arc.all_even = false;
    arc.faces = {SymElement{0, 0, identity_perm(1)}, SymElement{0, 0, identity_perm(1)}};
    x.orbits[2].push_back(std::move(arc));
    return x;
}

SymmetricDeltaComplex representable_complex(int p) {
    SymmetricDeltaComplex x;
    x.orbits.resize(p + 2);
    // One free orbit per subset of [p]; the representative is the order
    // embedding, whose faces are again order embeddings.
    std::vector<std::map<std::vector<int>, int>> index(p + 2);
    std::vector<std::vector<std::vector<int>>> subsets(p + 2);
    for (int mask = 0; mask < (1 << (p + 1)); ++mask) {
        std::vector<int> s;
        for (int i = 0; i <= p; ++i)
            if (mask & (1 << i)) s.push_back(i);
        int q = static_cast<int>(s.size()) - 1;
        index[q + 1][s] = static_cast<int>(subsets[q + 1].size());
        subsets[q + 1].push_back(s);
    }
    for (int q = -1; q <= p; ++q) {
        for (const auto& s : subsets[q + 1]) {
            SymOrbit orbit;
            std::ostringstream label;
            label << "S{";
            for (size_t i = 0; i < s.size(); ++i) label << (i ? "," : "") << s[i];
            label << "}";
            orbit.label = label.str();
            orbit.stabilizer = {identity_perm(q + 1)};
            orbit.all_even = true;
            for (int i = 0; i <= q; ++i) {
                std::vector<int> t = s;
                t.erase(t.begin() + i);
                orbit.faces.push_back(SymElement{q - 1, index[q][t], identity_perm(q)});
            }
            x.orbits[q + 1].push_back(std::move(orbit));
        }
    }
    return x;
}

void check_sym_relations(const SymmetricDeltaComplex& x) {
    for (int p = 1; p <= x.top_dim(); ++p) {
        for (int o = 0; o < x.count(p); ++o) {
            SymElement rep = x.representative(p, o);
            for (int j = 1; j <= p; ++j)
                for (int i = 0; i < j; ++i) {
                    SymElement lhs = x.face(x.face(rep, j), i);
                    SymElement rhs = x.face(x.face(rep, i), j - 1);
                    if (!x.elements_equal(lhs, rhs))
                        throw std::logic_error("face identity d_i d_j = d_{j-1} d_i fails at dim " +
                                               std::to_string(p) + " orbit " + std::to_string(o));
                }
            for (int j = 1; j <= p; ++j) {
                SymElement tj = x.act(transposition(p + 1, j - 1, j), rep);
                for (int i = 0; i <= p; ++i) {
                    SymElement lhs = x.face(tj, i);
                    SymElement rhs;
                    if (i > j)
                        rhs = x.act(transposition(p, j - 1, j), x.face(rep, i));
                    else if (i == j)
                        rhs = x.face(rep, i - 1);
                    else if (i == j - 1)
                        rhs = x.face(rep, i + 1);
                    else
                        rhs = x.act(transposition(p, j - 2, j - 1), x.face(rep, i));
                    if (!x.elements_equal(lhs, rhs))
                        throw std::logic_error("transposition relation fails at dim " + std::to_string(p) +
                                               " orbit " + std::to_string(o) + " (i=" + std::to_string(i) +
                                               ", j=" + std::to_string(j) + ")");
                }
            }
        }
    }
}

namespace {

GradedChainComplex cellular_from_predicate(const SymmetricDeltaComplex& x,
                                           const std::function<bool(const SymOrbit&)>& keep,
                                           bool forbid_crossing) {
    GradedChainComplex c;
    c.min_degree = -1;
    int levels = x.top_dim() + 2;
    c.bases.resize(levels);
    c.boundaries.resize(levels);

    std::vector<std::map<int, int>> basis_index(levels);
    for (int p = -1; p <= x.top_dim(); ++p)
        for (int o = 0; o < x.count(p); ++o) {
            const SymOrbit& orbit = x.orbits[p + 1][o];
            if (!orbit.all_even || !keep(orbit)) continue;
            basis_index[p + 1][o] = static_cast<int>(c.bases[p + 1].size());
            c.bases[p + 1].push_back(orbit.label);
        }

    for (int p = -1; p <= x.top_dim(); ++p) {
        std::vector<Triplet> raw;
        int rows = (p == -1) ? 0 : static_cast<int>(c.bases[p].size());
        for (int o = 0; o < x.count(p); ++o) {
            auto col_it = basis_index[p + 1].find(o);
            if (col_it == basis_index[p + 1].end()) continue;
            const SymOrbit& orbit = x.orbits[p + 1][o];
            for (int i = 0; i <= p; ++i) {
                const SymElement& f = orbit.faces[i];
                const SymOrbit& target = x.orbits[p][f.orbit];
                if (!target.all_even) continue;
                if (!keep(target)) {
                    if (forbid_crossing)
                        throw std::logic_error("boundary term crosses the A/B partition at " + orbit.label);
                    continue;
                }
                int sign = ((i % 2 == 0) ? 1 : -1) * perm_sign(f.coset);
                raw.push_back({basis_index[p][f.orbit], col_it->second, Integer(sign)});
            }
        }
        c.boundaries[p + 1] =
            SparseIntMatrix::from_triplets(rows, static_cast<int>(c.bases[p + 1].size()), std::move(raw));
    }
    return c;
}

bool is_pure_part(const SymOrbit& orbit) {
    if (!orbit.has_graph) throw std::logic_error("split_ab needs graph-backed orbits");
    if (total_weight(orbit.graph) != 0) return false;
    for (int e = 0; e < orbit.graph.num_edges(); ++e)
        if (orbit.graph.is_loop(e)) return false;
    return true;
}

}  // namespace

GradedChainComplex cellular_chain_complex(const SymmetricDeltaComplex& x) {
    return cellular_from_predicate(x, [](const SymOrbit&) { return true; }, false);
}

ABSplit split_ab(const SymmetricDeltaComplex& delta) {
    ABSplit s;
    s.a = cellular_from_predicate(delta, is_pure_part, true);
    s.b = cellular_from_predicate(delta, [](const SymOrbit& o) { return !is_pure_part(o); }, true);
    return s;
}

ShiftReport shift_check(int genus) {
    ShiftReport report;
    report.genus = genus;
    GraphComplex gc = build_graph_complex(genus);
    ABSplit split = split_ab(delta_g(genus));
    const int shift = 2 * genus - 1;

    auto note = [&](std::string msg) {
        report.ok = false;
        report.mismatches.push_back(std::move(msg));
    };

    // The A-part must be empty outside the shifted graph-complex range.
    for (int p = -1; p <= split.a.max_degree(); ++p) {
        int k = p - shift;
        if (k < gc.complex.min_degree || k > gc.complex.max_degree()) {
            if (split.a.dim(p) != 0)
                note("A has unexpected cells in dimension " + std::to_string(p));
        }
    }
    for (int k = gc.complex.min_degree; k <= gc.complex.max_degree(); ++k) {
        int p = k + shift;
        const auto& gc_basis = gc.complex.bases[k - gc.complex.min_degree];
        std::vector<std::string> a_basis;
        if (split.a.in_range(p)) a_basis = split.a.bases[p + 1];
        if (gc_basis != a_basis) {
            note("basis mismatch at degree " + std::to_string(k) + " / dimension " + std::to_string(p));
            continue;
        }
        const SparseIntMatrix& dk = gc.complex.boundaries[k - gc.complex.min_degree];
        SparseIntMatrix ak;
        if (split.a.in_range(p))
            ak = split.a.boundaries[p + 1];
        else
            ak = SparseIntMatrix::from_triplets(0, 0, {});
        // Row counts agree once the bases below agree (possibly both empty).
        if (!equal(dk, ak)) note("boundary matrix mismatch at degree " + std::to_string(k));
    }
    return report;
}

SubdividedComplex barycentric_subdivision_with_flags(const SymmetricDeltaComplex& x) {
    using Flag = std::vector<std::vector<int>>;

    auto apply_perm = [](const Perm& rho, const Flag& flag) {
        Flag out;
        out.reserve(flag.size());
        for (const auto& part : flag) {
            std::vector<int> mapped;
            mapped.reserve(part.size());
            for (int v : part) mapped.push_back(rho[v]);
            std::sort(mapped.begin(), mapped.end());
            out.push_back(std::move(mapped));
        }
        return out;
    };
    auto canonical_flag = [&](const SymOrbit& orbit, Flag flag) {
        Flag best = flag;
        for (const Perm& rho : orbit.stabilizer) {
            Flag candidate = apply_perm(rho, flag);
            if (candidate < best) best = std::move(candidate);
        }
        return best;
    };
    auto flag_label = [](const SymOrbit& orbit, const Flag& flag) {
        std::ostringstream os;
        os << orbit.label << "|";
        for (const auto& part : flag) {
            os << "(";
            for (size_t i = 0; i < part.size(); ++i) os << (i ? " " : "") << part[i];
            os << ")";
        }
        return os.str();
    };

    SubdividedComplex out;
    OrdinaryDeltaComplex& sd = out.complex;
    int levels = x.top_dim() + 2;
    sd.labels.resize(levels);
    sd.faces.resize(levels);
    out.cells.resize(levels);

    // Key: (dim p of the cell, orbit, canonical flag with top part [p]).
    std::map<std::tuple<int, int, Flag>, int> index;
    sd.labels[0].push_back("*");
    sd.faces[0].push_back({});
    out.cells[0].emplace_back("*", Flag{});

    // Enumerate ordered partitions of [p] per orbit, bucketed by length.
    for (int p = 0; p <= x.top_dim(); ++p) {
        for (int o = 0; o < x.count(p); ++o) {
            const SymOrbit& orbit = x.orbits[p + 1][o];
            std::vector<int> block;
            Flag prefix;
            std::vector<int> remaining(p + 1);
            for (int i = 0; i <= p; ++i) remaining[i] = i;
            // Recursive ordered set partitions; each prefix union is a flag set.
            std::function<void(std::vector<int>, Flag)> rec = [&](std::vector<int> rest, Flag acc) {
                if (rest.empty()) {
                    int q = static_cast<int>(acc.size()) - 1;
                    Flag canon = canonical_flag(orbit, acc);
                    auto key = std::make_tuple(p, o, canon);
                    if (!index.count(key)) {
                        index[key] = static_cast<int>(sd.labels[q + 1].size());
                        sd.labels[q + 1].push_back(flag_label(orbit, canon));
                        sd.faces[q + 1].emplace_back(q + 1, -1);
                        out.cells[q + 1].emplace_back(orbit.label, canon);
                    }
                    return;
                }
                int m = static_cast<int>(rest.size());
                for (int mask = 1; mask < (1 << m); ++mask) {
                    std::vector<int> part;
                    std::vector<int> next;
                    for (int i = 0; i < m; ++i)
                        (mask & (1 << i) ? part : next).push_back(rest[i]);
                    Flag acc2 = acc;
                    std::vector<int> uni = acc.empty() ? std::vector<int>{} : acc.back();
                    uni.insert(uni.end(), part.begin(), part.end());
                    std::sort(uni.begin(), uni.end());
                    acc2.push_back(uni);
                    rec(next, std::move(acc2));
                }
            };
            rec(remaining, {});
        }
    }

    // Face maps.  The flag stored under (p, o) always has top part [p].
    for (const auto& [key, sidx] : index) {
        const auto& [p, o, flag] = key;
        const SymOrbit& orbit = x.orbits[p + 1][o];
        int q = static_cast<int>(flag.size()) - 1;
        for (int i = 0; i <= q; ++i) {
            int face_idx;
            if (i < q) {
                Flag sub = flag;
                sub.erase(sub.begin() + i);
                face_idx = index.at(std::make_tuple(p, o, canonical_flag(orbit, sub)));
            } else if (q == 0) {
                face_idx = 0;  // the augmentation point
            } else {
                // Drop the top set: restrict the cell to the labels in
                // flag[q-1] via the order embedding, then renormalize.
                const std::vector<int>& support = flag[q - 1];
                std::vector<int> missing;
                for (int t = 0; t <= p; ++t)
                    if (!std::binary_search(support.begin(), support.end(), t)) missing.push_back(t);
                SymElement y = x.representative(p, o);
                for (auto it = missing.rbegin(); it != missing.rend(); ++it) y = x.face(y, *it);
                // Position of each old label inside the support.
                std::vector<int> pos(p + 1, -1);
                for (size_t t = 0; t < support.size(); ++t) pos[support[t]] = static_cast<int>(t);
                Perm coset_inv = inverse(y.coset);
                Flag sub;
                for (int t = 0; t < q; ++t) {
                    std::vector<int> part;
                    for (int v : flag[t]) part.push_back(coset_inv[pos[v]]);
                    std::sort(part.begin(), part.end());
                    sub.push_back(std::move(part));
                }
                const SymOrbit& target = x.orbits[y.dim + 1][y.orbit];
                face_idx = index.at(std::make_tuple(y.dim, y.orbit, canonical_flag(target, sub)));
            }
            sd.faces[q + 1][sidx][i] = face_idx;
        }
    }
    return out;
}

OrdinaryDeltaComplex barycentric_subdivision(const SymmetricDeltaComplex& x) {
    return barycentric_subdivision_with_flags(x).complex;
}

std::string subdivision_to_json(const SymmetricDeltaComplex& x) {
    SubdividedComplex sd = barycentric_subdivision_with_flags(x);
    nlohmann::ordered_json j;
    auto dims = nlohmann::ordered_json::array();
    for (int q = -1; q <= sd.complex.top_dim(); ++q) {
        nlohmann::ordered_json level;
        level["dim"] = q;
        auto simplices = nlohmann::ordered_json::array();
        for (int s = 0; s < sd.complex.count(q); ++s) {
            nlohmann::ordered_json entry;
            entry["cell"] = sd.cells[q + 1][s].first;
            entry["flag"] = sd.cells[q + 1][s].second;
            entry["faces"] = sd.complex.faces[q + 1][s];
            simplices.push_back(entry);
        }
        level["simplices"] = simplices;
        dims.push_back(level);
    }
    j["dimensions"] = dims;
    return j.dump();
}

}  // namespace ghom
