#pragma once

#include "ghom/numbers.hpp"

#include <string>
#include <vector>

namespace ghom {

// Coefficients a_1..a_N of p(t) = t^3 (3 - t^2) / ((1 - t^2)(1 - t^2 - t^3)),
// by the linear recurrence of the denominator.  Index 0 holds a_0 = 0.
std::vector<Integer> p_coefficients(int n);

// Independent expansion: numerator times the term-by-term inverse of the
// denominator.
std::vector<Integer> p_coefficients_series_oracle(int n);

// Graded dimensions of the free Lie algebra on one generator in each odd
// degree >= 3, by Moebius inversion A_n = (1/n) sum_{d|n} mu(n/d) a_d.
// Throws std::logic_error if any value fails to be a nonnegative integer.
std::vector<Integer> lie_dimensions(int n);

// Oracle: solve sum_d A_d sum_k t^{dk}/k = log(1/(1-f)) triangularly, with
// f = t^3 + t^5 + t^7 + ...
std::vector<Integer> lie_dimensions_log_oracle(int n);

std::vector<int> moebius_table(int n);

struct GrowthRoots {
    double alpha = 0;   // smallest-magnitude root of (1-t^2)(1-t^2-t^3)
    double beta0 = 0;   // real root of t^3 - t - 1, equals 1/alpha
};

// Bisection on exact rational sign evaluations, then asserts beta0 == 1/alpha
// to 1e-10.
GrowthRoots growth_roots();

struct GrowthRow {
    int n = 0;
    Integer a;
    Integer lie_dim;
    double product = 0;  // a_n * alpha^n
};

struct GrowthReport {
    std::vector<GrowthRow> rows;  // n = 1..N
    GrowthRoots roots;
    double residue_at_alpha = 0;       // numerical estimate of Res_alpha p
    double tail_threshold = 1e-6;      // bound checked on the tail
    int tail_start = 200;              // first n of the checked tail
    bool tail_within_threshold = false;
    int first_stable_n = -1;  // least n from which |a_n alpha^n - 1| stays below threshold
};

GrowthReport growth_report(int n);

// CSV rows "n,a_n,A_n,product" with 15 significant digits on the product.
std::string growth_csv(const GrowthReport& report);

}  // namespace ghom
