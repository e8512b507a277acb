#include "ghom/exact_rank.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace ghom {

namespace {

// Shared sparse elimination frame: rows as ordered column->value maps plus a
// per-column index of occupied rows.
template <typename Value>
struct Frame {
    std::vector<std::map<int, Value>> row;
    std::vector<std::set<int>> col_rows;
    std::vector<char> row_active, col_active;

    explicit Frame(const SparseIntMatrix& m, auto convert)
        : row(m.rows), col_rows(m.cols), row_active(m.rows, 1), col_active(m.cols, 1) {
        for (const Triplet& t : m.entries) {
            Value v = convert(t.value);
            if (v == Value(0)) continue;
            row[t.row][t.col] = v;
            col_rows[t.col].insert(t.row);
        }
    }

    // Min-degree pivot: smallest column support, then smallest row support,
    // lowest index on ties.
    std::pair<int, int> pick_pivot() const {
        int best_col = -1;
        size_t best_cnnz = 0;
        for (int c = 0; c < static_cast<int>(col_rows.size()); ++c) {
            if (!col_active[c] || col_rows[c].empty()) continue;
            if (best_col < 0 || col_rows[c].size() < best_cnnz) {
                best_col = c;
                best_cnnz = col_rows[c].size();
            }
        }
        if (best_col < 0) return {-1, -1};
        int best_row = -1;
        size_t best_rnnz = 0;
        for (int r : col_rows[best_col]) {
            if (best_row < 0 || row[r].size() < best_rnnz) {
                best_row = r;
                best_rnnz = row[r].size();
            }
        }
        return {best_row, best_col};
    }

    void set_entry(int r, int c, Value v) {
        if (v == Value(0)) {
            if (row[r].erase(c)) col_rows[c].erase(r);
        } else {
            if (row[r].emplace(c, v).second)
                col_rows[c].insert(r);
            else
                row[r][c] = std::move(v);
        }
    }

    void retire(int r, int c) {
        row_active[r] = 0;
        col_active[c] = 0;
        for (const auto& [j, v] : row[r]) col_rows[j].erase(r);
        row[r].clear();
        col_rows[c].clear();
    }
};

}  // namespace

int rank_exact(const SparseIntMatrix& m) {
    Frame<Integer> f(m, [](const Integer& v) { return v; });
    // Bareiss with lazy rescaling: a stored row last synchronized at pivot
    // value d represents (current_prev / d) times itself; the rescale
    // multiply-then-divide is exact by the minor identity.
    std::vector<Integer> denom(m.rows, 1);
    Integer prev = 1;
    int rank = 0;
    auto sync = [&](int r) {
        if (denom[r] == prev) return;
        for (auto& [j, v] : f.row[r]) {
            v *= prev;
            Integer q = v / denom[r];
            assert(q * denom[r] == v);
            v = std::move(q);
        }
        denom[r] = prev;
    };
    for (;;) {
        auto [pr, pc] = f.pick_pivot();
        if (pr < 0) break;
        sync(pr);
        Integer pivot = f.row[pr].at(pc);
        std::vector<int> targets(f.col_rows[pc].begin(), f.col_rows[pc].end());
        for (int r : targets) {
            if (r == pr) continue;
            sync(r);
            Integer a = f.row[r].at(pc);
            // Union of supports; pivot column vanishes by construction.
            std::map<int, Integer> merged;
            for (const auto& [j, v] : f.row[r]) {
                if (j == pc) continue;
                merged[j] = pivot * v;
            }
            for (const auto& [j, u] : f.row[pr]) {
                if (j == pc) continue;
                merged[j] -= a * u;
            }
            // Replace row r.
            for (const auto& [j, v] : f.row[r]) f.col_rows[j].erase(r);
            f.row[r].clear();
            for (auto& [j, v] : merged) {
                if (v == 0) continue;
                Integer q = v / prev;
                assert(q * prev == v);
                f.row[r].emplace(j, std::move(q));
                f.col_rows[j].insert(r);
            }
            denom[r] = pivot;
        }
        f.retire(pr, pc);
        prev = std::move(pivot);
        ++rank;
    }
    return rank;
}

int rank_mod_p(const SparseIntMatrix& m, std::uint32_t prime) {
    using u64 = std::uint64_t;
    const u64 p = prime;
    auto convert = [&](const Integer& v) {
        Integer r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<u64>(r);
    };
    auto pow_mod = [&](u64 b, u64 e) {
        u64 acc = 1;
        b %= p;
        while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return acc;
    };
    Frame<u64> f(m, convert);
    int rank = 0;
    for (;;) {
        auto [pr, pc] = f.pick_pivot();
        if (pr < 0) break;
        u64 pivot = f.row[pr].at(pc);
        u64 inv = pow_mod(pivot, p - 2);
        std::vector<int> targets(f.col_rows[pc].begin(), f.col_rows[pc].end());
        for (int r : targets) {
            if (r == pr) continue;
            u64 factor = f.row[r].at(pc) * inv % p;
            std::map<int, u64> merged = f.row[r];
            for (const auto& [j, u] : f.row[pr]) {
                u64 sub = factor * u % p;
                auto it = merged.find(j);
                u64 cur = (it == merged.end()) ? 0 : it->second;
                merged[j] = (cur + p - sub) % p;
            }
            for (const auto& [j, v] : f.row[r]) f.col_rows[j].erase(r);
            f.row[r].clear();
            for (auto& [j, v] : merged) {
                if (j == pc || v == 0) continue;
                f.row[r].emplace(j, v);
                f.col_rows[j].insert(r);
            }
        }
        f.retire(pr, pc);
        ++rank;
    }
    return rank;
}

const std::vector<std::uint32_t>& rank_check_primes() {
    static const std::vector<std::uint32_t> primes = {
        2147483647u, 2147483629u, 2147483587u, 2147483579u,
        2147483563u, 2147483549u, 2147483543u, 2147483497u,
    };
    return primes;
}

RankResult rank_checked(const SparseIntMatrix& m) {
    RankResult res;
    res.exact = rank_exact(m);
    const auto& primes = rank_check_primes();
    for (size_t i = 0; i < primes.size() && i < 4; ++i) {
        res.prime = primes[i];
        res.mod_p = rank_mod_p(m, primes[i]);
        if (res.mod_p > res.exact)
            throw std::logic_error("mod-p rank exceeds exact rank");
        if (res.mod_p == res.exact) {
            res.agreed = true;
            return res;
        }
        res.retries = static_cast<int>(i) + 1;
    }
    return res;
}

bool in_column_space(const SparseIntMatrix& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("in_column_space: dimension mismatch");
    Integer lcm = 1;
    for (const Rational& x : b) {
        Integer d = denominator(x);
        lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Triplet> raw = m.entries;
    for (int r = 0; r < m.rows; ++r) {
        Integer v = numerator(b[r]) * (lcm / denominator(b[r]));
        if (v != 0) raw.push_back({r, m.cols, std::move(v)});
    }
    SparseIntMatrix aug = SparseIntMatrix::from_triplets(m.rows, m.cols + 1, std::move(raw));
    return rank_exact(aug) == rank_exact(m);
}

}  // namespace ghom
