#pragma once

#include "ghom/numbers.hpp"

#include <vector>

namespace ghom {

// Truncated power series with exact rational coefficients c[0..order].
struct PowerSeries {
    int order = 0;
    std::vector<Rational> c;

    explicit PowerSeries(int order_) : order(order_), c(order_ + 1, Rational(0)) {}
    static PowerSeries monomial(int order, int k, const Rational& coeff);

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    PowerSeries& operator*=(const Rational& s);
};

// Multiplicative inverse to the truncation order; requires c[0] != 0.
PowerSeries inverse_series(const PowerSeries& a);

}  // namespace ghom
