#pragma once

#include <vector>

namespace ghom {

// Permutations are vectors p with p[i] = image of i.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
    // (a o b)(i) = a(b(i))
    Perm c(b.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline Perm inverse(const Perm& p) {
    Perm inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

inline int perm_sign(const Perm& p) {
    // Cycle count; n is small throughout this project.
    int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    int transpositions = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return (transpositions % 2 == 0) ? 1 : -1;
}

inline Perm transposition(int n, int i, int j) {
    Perm p = identity_perm(n);
    p[i] = j;
    p[j] = i;
    return p;
}

// Closure of a generating set under composition (breadth-first products).
std::vector<Perm> group_closure(std::vector<Perm> generators, int n);

}  // namespace ghom
