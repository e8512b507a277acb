// ghom: enumerate stable weighted graphs, compute exact homology of the
// graph complex and of the tropical moduli complex Delta_g, and run the
// verification batteries.

#include "ghom/cache.hpp"
#include "ghom/canonical.hpp"
#include "ghom/chain_complex.hpp"
#include "ghom/enumerate.hpp"
#include "ghom/exact_rank.hpp"
#include "ghom/graph_complex.hpp"
#include "ghom/growth.hpp"
#include "ghom/sym_delta.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>

namespace {

using namespace ghom;

constexpr int kExitUsage = 1;
constexpr int kExitMathFailure = 2;

struct DegreeRange {
    bool given = false;
    int lo = 0, hi = 0;
};

DegreeRange parse_degrees(const std::string& text) {
    DegreeRange r;
    if (text.empty()) return r;
    r.given = true;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, dots));
        r.hi = std::stoi(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw CLI::ValidationError("--degrees", "empty degree range");
    return r;
}

std::vector<GraphAnalysis> analyses_of(const std::vector<StableGraph>& graphs) {
    std::vector<GraphAnalysis> out;
    out.reserve(graphs.size());
    for (const StableGraph& g : graphs) out.push_back(analyze_graph(g));
    return out;
}

std::vector<StableGraph> graphs_of(const std::vector<GraphAnalysis>& analyses) {
    std::vector<StableGraph> out;
    out.reserve(analyses.size());
    for (const GraphAnalysis& an : analyses) out.push_back(an.canonical);
    return out;
}

std::vector<GraphAnalysis> cached_enumeration(const EnumerationCache& cache, int genus,
                                              const std::string& kind,
                                              const std::function<std::vector<GraphAnalysis>()>& compute) {
    if (auto hit = cache.load(genus, kind)) return analyses_of(*hit);
    std::vector<GraphAnalysis> fresh = compute();
    cache.store(genus, kind, graphs_of(fresh));
    return fresh;
}

std::vector<GraphAnalysis> cached_jg(const EnumerationCache& cache, int genus) {
    return cached_enumeration(cache, genus, "jg", [&] { return enumerate_jg(genus); });
}

GcProvider cached_gc_provider(const EnumerationCache& cache) {
    return [&cache](int genus, int degree) {
        return cached_enumeration(cache, genus, "gc-degree" + std::to_string(degree),
                                  [&] { return enumerate_gc_generators(genus, degree); });
    };
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

// ---------------------------------------------------------------- enumerate

int run_enumerate(const EnumerationCache& cache, int genus, const std::string& kind,
                  const DegreeRange& degrees, const std::string& out_path) {
    std::vector<GraphAnalysis> result;
    if (kind == "trivalent") {
        result = cached_enumeration(cache, genus, "trivalent", [&] { return enumerate_trivalent(genus); });
    } else if (kind == "jg") {
        result = cached_jg(cache, genus);
    } else if (kind == "gc-generators") {
        int lo = degrees.given ? std::max(degrees.lo, gc_min_degree(genus)) : gc_min_degree(genus);
        int hi = degrees.given ? std::min(degrees.hi, gc_max_degree(genus)) : gc_max_degree(genus);
        auto provider = cached_gc_provider(cache);
        for (int k = lo; k <= hi; ++k)
            for (GraphAnalysis& an : provider(genus, k)) result.push_back(std::move(an));
        std::sort(result.begin(), result.end(),
                  [](const GraphAnalysis& a, const GraphAnalysis& b) { return a.key.bytes < b.key.bytes; });
    } else {
        std::cerr << "unknown --kind " << kind << "\n";
        return kExitUsage;
    }

    std::ostringstream jsonl;
    for (const GraphAnalysis& an : result) jsonl << to_json_line(an.canonical) << "\n";

    std::map<std::pair<int, int>, int> by_shape;
    for (const GraphAnalysis& an : result)
        by_shape[{an.canonical.num_vertices, an.canonical.num_edges()}]++;
    std::ostringstream summary;
    summary << "summary kind=" << kind << " genus=" << genus << " classes=" << result.size() << "\n";
    for (auto [shape, n] : by_shape)
        summary << "count v=" << shape.first << " e=" << shape.second << " classes=" << n << "\n";

    if (out_path.empty()) {
        std::cout << jsonl.str();
        std::cerr << summary.str();
    } else {
        try {
            write_text(out_path, jsonl.str());
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return kExitUsage;
        }
        std::cout << summary.str();
    }
    return 0;
}

// ----------------------------------------------------------------- homology

GradedChainComplex complex_for(const EnumerationCache& cache, const std::string& selector, int genus) {
    if (selector == "gc") return build_graph_complex(genus, cached_gc_provider(cache)).complex;
    SymmetricDeltaComplex delta = delta_g_from_objects(genus, cached_jg(cache, genus));
    if (selector == "c" || selector == "delta") return cellular_chain_complex(delta);
    ABSplit split = split_ab(delta);
    if (selector == "a") return std::move(split.a);
    if (selector == "b") return std::move(split.b);
    throw CLI::ValidationError("--complex", "unknown selector " + selector);
}

int run_homology(const EnumerationCache& cache, int genus, const std::string& selector,
                 const DegreeRange& degrees, std::uint32_t mod_p, const std::string& out_path) {
    GradedChainComplex c = complex_for(cache, selector, genus);
    if (auto violation = find_dd_violation(c)) {
        std::cerr << "invariant failure: " << *violation << "\n";
        return kExitMathFailure;
    }
    std::vector<int> ranks(c.num_degrees() + 1, 0);
    for (int i = 0; i < c.num_degrees(); ++i)
        ranks[i] = mod_p ? rank_mod_p(c.boundaries[i], mod_p) : rank_exact(c.boundaries[i]);

    std::ostringstream csv;
    csv << "complex,genus,degree,dim_chains,rank_in,rank_out,dim_homology\n";
    for (int i = 0; i < c.num_degrees(); ++i) {
        int d = c.min_degree + i;
        if (degrees.given && (d < degrees.lo || d > degrees.hi)) continue;
        int h = c.dim(d) - ranks[i] - ranks[i + 1];
        csv << selector << "," << genus << "," << d << "," << c.dim(d) << "," << ranks[i + 1] << ","
            << ranks[i] << "," << h << "\n";
    }
    if (out_path.empty())
        std::cout << csv.str();
    else
        write_text(out_path, csv.str());
    return 0;
}

// ------------------------------------------------------------------- verify

struct CheckList {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    bool all_passed = true;

    void add(const std::string& name, bool passed, const std::string& detail = "") {
        nlohmann::ordered_json c;
        c["name"] = name;
        c["passed"] = passed;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        all_passed = all_passed && passed;
        std::cout << (passed ? "[ok]   " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
    }
};

StableGraph random_relabeling(const StableGraph& g, std::mt19937& rng) {
    Perm vp = identity_perm(g.num_vertices);
    std::shuffle(vp.begin(), vp.end(), rng);
    Perm ep = identity_perm(g.num_edges());
    std::shuffle(ep.begin(), ep.end(), rng);
    StableGraph out;
    out.num_vertices = g.num_vertices;
    out.weights.assign(g.num_vertices, 0);
    for (int v = 0; v < g.num_vertices; ++v) out.weights[vp[v]] = g.weights[v];
    for (int e = 0; e < g.num_edges(); ++e) {
        int f = ep[e];
        int u = vp[g.edge_u(f)], v = vp[g.edge_v(f)];
        if (rng() & 1) std::swap(u, v);
        out.add_edge(u, v);
    }
    return out;
}

void verify_signs(CheckList& list, const EnumerationCache& cache, int genus) {
    std::mt19937 rng(20240901);
    bool canonical_ok = true;
    int tested = 0;
    for (const GraphAnalysis& an : cached_jg(cache, genus)) {
        for (int trial = 0; trial < 100; ++trial) {
            StableGraph shuffled = random_relabeling(an.canonical, rng);
            if (analyze_graph(shuffled).key.bytes != an.key.bytes) canonical_ok = false;
        }
        ++tested;
    }
    list.add("canonical key invariant under relabeling (genus " + std::to_string(genus) + ")",
             canonical_ok, std::to_string(tested) + " graphs x 100 trials");

    GraphComplex gc = build_graph_complex(genus, cached_gc_provider(cache));
    bool sgn_ok = true;
    int graphs = 0;
    for (const auto& level : gc.basis_graphs)
        for (const StableGraph& g : level) {
            SignedGenerator base = normalize(g);
            for (int trial = 0; trial < 50; ++trial) {
                Perm sigma = identity_perm(g.num_edges());
                std::shuffle(sigma.begin(), sigma.end(), rng);
                SignedGenerator got = normalize(g, sigma);
                if (got.key != base.key || got.sign != perm_sign(sigma) * base.sign) sgn_ok = false;
            }
            ++graphs;
        }
    list.add("normalize is sgn-equivariant (genus " + std::to_string(genus) + ")", sgn_ok,
             std::to_string(graphs) + " generators x 50 permutations");
}

void verify_relations(CheckList& list, const EnumerationCache& cache, int genus) {
    for (auto& [name, complex] :
         std::vector<std::pair<std::string, SymmetricDeltaComplex>>{
             {"half interval", half_interval_complex()},
             {"representable [2]", representable_complex(2)},
             {"representable [3]", representable_complex(3)}}) {
        try {
            check_sym_relations(complex);
            list.add("face/transposition relations: " + name, true);
        } catch (const std::exception& e) {
            list.add("face/transposition relations: " + name, false, e.what());
        }
    }
    try {
        check_sym_relations(delta_g_from_objects(genus, cached_jg(cache, genus)));
        list.add("face/transposition relations: Delta_" + std::to_string(genus), true);
    } catch (const std::exception& e) {
        list.add("face/transposition relations: Delta_" + std::to_string(genus), false, e.what());
    }
}

void verify_duality(CheckList& list, const EnumerationCache& cache, int genus) {
    GraphComplex gc = build_graph_complex(genus, cached_gc_provider(cache));
    std::vector<SparseIntMatrix> cob = build_coboundaries(gc);
    bool transpose_ok = true, dd_ok = true, cc_ok = true;
    std::string residual;
    for (int i = 0; i + 1 < gc.complex.num_degrees(); ++i) {
        SparseIntMatrix expected = transpose(gc.complex.boundaries[i + 1]);
        if (equal(cob[i], expected)) continue;
        transpose_ok = false;
        // Record a residual global sign per degree when that is all there is.
        SparseIntMatrix negated = expected;
        for (Triplet& t : negated.entries) t.value = -t.value;
        int d = gc.complex.min_degree + i;
        residual += equal(cob[i], negated) ? "global sign -1 at degree " + std::to_string(d) + "; "
                                           : "entrywise mismatch at degree " + std::to_string(d) + "; ";
    }
    for (int i = 0; i + 1 < gc.complex.num_degrees(); ++i)
        if (!multiply(gc.complex.boundaries[i], gc.complex.boundaries[i + 1]).is_zero()) dd_ok = false;
    for (int i = 0; i + 2 < gc.complex.num_degrees(); ++i)
        if (!multiply(cob[i + 1], cob[i]).is_zero()) cc_ok = false;
    std::string g = std::to_string(genus);
    list.add("coboundary = transpose of boundary (genus " + g + ")", transpose_ok, residual);
    list.add("boundary squares to zero (genus " + g + ")", dd_ok);
    list.add("coboundary squares to zero (genus " + g + ")", cc_ok);
}

void verify_acyclic(CheckList& list, const EnumerationCache& cache, int genus) {
    ABSplit split = split_ab(delta_g_from_objects(genus, cached_jg(cache, genus)));
    auto h = homology_dims(split.b);
    bool ok = true;
    for (auto [k, v] : h)
        if (v != 0) ok = false;
    list.add("loop/weight part acyclic (genus " + std::to_string(genus) + ")", ok);
}

void verify_shift(CheckList& list, int genus) {
    ShiftReport rep = shift_check(genus);
    std::string detail;
    for (const std::string& m : rep.mismatches) detail += m + "; ";
    list.add("graph complex = shifted pure part (genus " + std::to_string(genus) + ")", rep.ok, detail);
}

void verify_subdivision(CheckList& list, const EnumerationCache& cache, int genus) {
    auto compare = [&](const std::string& name, const SymmetricDeltaComplex& x) {
        auto cellular = homology_dims(cellular_chain_complex(x));
        auto simplicial = ordinary_simplicial_homology(barycentric_subdivision(x));
        bool ok = true;
        for (int d = -1; d <= x.top_dim(); ++d) {
            int lhs = cellular.count(d) ? cellular[d] : 0;
            int rhs = simplicial.count(d) ? simplicial[d] : 0;
            if (lhs != rhs) ok = false;
        }
        list.add("cellular homology matches subdivision: " + name, ok);
    };
    compare("half interval", half_interval_complex());
    compare("representable [2]", representable_complex(2));
    compare("Delta_" + std::to_string(genus), delta_g_from_objects(genus, cached_jg(cache, genus)));
}

void verify_wheel(CheckList& list, const EnumerationCache& cache, int genus) {
    StableGraph w = wheel(genus);
    SignedGenerator n = normalize(w);
    std::string g = std::to_string(genus);
    if (genus % 2 == 0) {
        list.add("wheel W_" + g + " vanishes (odd edge automorphism)", n.sign == 0);
        return;
    }
    list.add("wheel W_" + g + " is a nonzero chain", n.sign != 0);
    list.add("wheel W_" + g + " is a cycle", boundary(n.graph).empty());
    if (genus <= 5) {
        GraphComplex gc = build_graph_complex(genus, cached_gc_provider(cache));
        int i0 = -gc.complex.min_degree;
        std::vector<Rational> vec(gc.complex.dim(0), Rational(0));
        bool found = false;
        for (int r = 0; r < gc.complex.dim(0); ++r)
            if (gc.complex.bases[i0][r] == n.key) {
                vec[r] = n.sign;
                found = true;
            }
        bool is_boundary = found && in_column_space(gc.complex.boundaries[i0 + 1], vec);
        list.add("wheel W_" + g + " is not a boundary", found && !is_boundary);
    }
}

void verify_growth(CheckList& list, int order) {
    GrowthReport rep = growth_report(order);
    auto a = p_coefficients(std::min(order, 30));
    auto a_oracle = p_coefficients_series_oracle(std::min(order, 30));
    list.add("p(t) recurrence matches series-division oracle (n <= 30)", a == a_oracle);
    auto lie = lie_dimensions(std::min(order, 30));
    auto lie_oracle = lie_dimensions_log_oracle(std::min(order, 30));
    list.add("Moebius inversion matches log-expansion oracle (n <= 30)", lie == lie_oracle);
    bool integral = true;
    try {
        lie_dimensions(order);
    } catch (const std::exception&) {
        integral = false;
    }
    list.add("Lie dimensions integral and nonnegative (n <= " + std::to_string(order) + ")", integral);
    // a_n = sum_{d|n} d A_d, re-checked after inversion.
    auto a_full = p_coefficients(order);
    auto lie_full = lie_dimensions(order);
    bool preinv = true;
    for (int n = 1; n <= order; ++n) {
        Integer s(0);
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) s += d * lie_full[d];
        if (s != a_full[n]) preinv = false;
    }
    list.add("a_n = sum of d*A_d over divisors", preinv);
    bool odd_generators = true;
    for (int n = 3; n <= order; n += 2)
        if (lie_full[n] <= 0) odd_generators = false;
    list.add("A_n > 0 for all odd n >= 3", odd_generators);
    list.add("alpha within 1e-4 of 0.75488", std::abs(rep.roots.alpha - 0.75488) < 1e-4,
             std::to_string(rep.roots.alpha));
    list.add("beta0 within 1e-4 of 1.3247", std::abs(rep.roots.beta0 - 1.3247) < 1e-4,
             std::to_string(rep.roots.beta0));
    if (order >= 400)
        list.add("|a_n alpha^n - 1| < 1e-6 on 200..N", rep.tail_within_threshold,
                 "stable from n=" + std::to_string(rep.first_stable_n));
    list.add("residue at alpha is -alpha (1e-8)",
             std::abs(rep.residue_at_alpha + rep.roots.alpha) < 1e-8,
             std::to_string(rep.residue_at_alpha));
}

int run_verify(const EnumerationCache& cache, const std::string& suite, int genus, int order,
               const std::string& out_path) {
    CheckList list;
    bool genus_given = genus > 0;
    auto each_genus = [&](std::vector<int> defaults, auto&& fn) {
        if (genus_given)
            fn(genus);
        else
            for (int g : defaults) fn(g);
    };
    if (suite == "signs") {
        each_genus({3}, [&](int g) { verify_signs(list, cache, g); });
    } else if (suite == "relations") {
        each_genus({3}, [&](int g) { verify_relations(list, cache, g); });
    } else if (suite == "duality") {
        each_genus({3, 4}, [&](int g) { verify_duality(list, cache, g); });
    } else if (suite == "acyclic") {
        each_genus({2, 3, 4}, [&](int g) { verify_acyclic(list, cache, g); });
    } else if (suite == "shift") {
        each_genus({2, 3, 4}, [&](int g) { verify_shift(list, g); });
    } else if (suite == "subdivision") {
        each_genus({2, 3}, [&](int g) { verify_subdivision(list, cache, g); });
    } else if (suite == "wheel") {
        each_genus({5}, [&](int g) { verify_wheel(list, cache, g); });
    } else if (suite == "growth") {
        verify_growth(list, order);
    } else {
        std::cerr << "unknown suite " << suite << "\n";
        return kExitUsage;
    }
    nlohmann::ordered_json report;
    report["suite"] = suite;
    if (genus_given) report["genus"] = genus;
    report["passed"] = list.all_passed;
    report["checks"] = list.checks;
    if (!out_path.empty()) write_text(out_path, report.dump(2) + "\n");
    return list.all_passed ? 0 : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homology of graph complexes and tropical moduli complexes"};
    app.require_subcommand(1);

    std::string cache_root = ghom::default_cache_root();
    app.add_option("--cache", cache_root, "cache root (overrides GHOM_CACHE)");

    int genus = 0;
    std::string kind = "jg", selector = "gc", degrees_text, out_path, suite;
    std::uint32_t mod_p = 0;
    int max_order = 400;

    CLI::App* enumerate = app.add_subcommand("enumerate", "isomorph-free graph enumerations (JSONL)");
    enumerate->add_option("--genus", genus, "genus")->required()->check(CLI::Range(2, 12));
    enumerate->add_option("--kind", kind, "trivalent | jg | gc-generators")->required();
    enumerate->add_option("--degrees,--degree", degrees_text, "degree or A..B range (gc-generators)");
    enumerate->add_option("--out", out_path, "output path (default: stdout)");
    enumerate->add_option("--cache", cache_root, "cache root");

    CLI::App* homology = app.add_subcommand("homology", "per-degree exact homology table (CSV)");
    homology->add_option("--genus", genus, "genus")->required()->check(CLI::Range(2, 12));
    homology->add_option("--complex", selector, "gc | c | a | b | delta")->required();
    homology->add_option("--degrees,--degree", degrees_text, "restrict reported degrees");
    homology->add_option("--mod-p", mod_p, "use ranks over this prime instead of exact ranks");
    homology->add_option("--out", out_path, "output path (default: stdout)");
    homology->add_option("--cache", cache_root, "cache root");

    CLI::App* verify = app.add_subcommand("verify", "invariant batteries; nonzero exit on failure");
    verify->add_option("suite", suite, "signs | relations | duality | acyclic | shift | subdivision | wheel | growth")
        ->required();
    verify->add_option("--genus", genus, "genus (default: the suite's standard set)")->check(CLI::Range(2, 12));
    verify->add_option("--max", max_order, "series order for the growth suite");
    verify->add_option("--out", out_path, "JSON report path");
    verify->add_option("--cache", cache_root, "cache root");

    CLI::App* growth = app.add_subcommand("growth", "growth table n,a_n,A_n,a_n*alpha^n (CSV)");
    growth->add_option("--max", max_order, "series order N");
    growth->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* export_cmd = app.add_subcommand("export", "complex with bases and boundary triplets (JSON)");
    export_cmd->add_option("--genus", genus, "genus")->required()->check(CLI::Range(2, 12));
    export_cmd->add_option("--complex", selector, "gc | c | a | b | delta | sd")->required();
    export_cmd->add_option("--out", out_path, "output path (default: stdout)")->required();
    export_cmd->add_option("--cache", cache_root, "cache root");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    ghom::EnumerationCache cache(cache_root);
    try {
        if (app.got_subcommand(enumerate))
            return run_enumerate(cache, genus, kind, parse_degrees(degrees_text), out_path);
        if (app.got_subcommand(homology))
            return run_homology(cache, genus, selector, parse_degrees(degrees_text), mod_p, out_path);
        if (app.got_subcommand(verify)) return run_verify(cache, suite, genus, max_order, out_path);
        if (app.got_subcommand(growth)) {
            ghom::GrowthReport rep = ghom::growth_report(max_order);
            std::string csv = ghom::growth_csv(rep);
            if (out_path.empty())
                std::cout << csv;
            else
                write_text(out_path, csv);
            std::cerr << "alpha=" << rep.roots.alpha << " beta0=" << rep.roots.beta0
                      << " residue=" << rep.residue_at_alpha << "\n";
            return 0;
        }
        if (app.got_subcommand(export_cmd)) {
            if (selector == "sd") {
                SymmetricDeltaComplex delta = delta_g_from_objects(genus, cached_jg(cache, genus));
                write_text(out_path, subdivision_to_json(delta) + "\n");
            } else {
                write_text(out_path, ghom::complex_to_json(complex_for(cache, selector, genus)) + "\n");
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
