#include "ghom/power_series.hpp"

#include <stdexcept>

namespace ghom {

PowerSeries PowerSeries::monomial(int order, int k, const Rational& coeff) {
    PowerSeries s(order);
    if (k <= order) s.c[k] = coeff;
    return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    if (o.order != order) throw std::invalid_argument("series order mismatch");
    for (int i = 0; i <= order; ++i) c[i] += o.c[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    if (o.order != order) throw std::invalid_argument("series order mismatch");
    for (int i = 0; i <= order; ++i) c[i] -= o.c[i];
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    if (a.order != b.order) throw std::invalid_argument("series order mismatch");
    PowerSeries out(a.order);
    for (int i = 0; i <= a.order; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; i + j <= a.order; ++j) {
            if (b.c[j] == 0) continue;
            out.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return out;
}

PowerSeries& PowerSeries::operator*=(const Rational& s) {
    for (auto& x : c) x *= s;
    return *this;
}

PowerSeries inverse_series(const PowerSeries& a) {
    if (a.c[0] == 0) throw std::invalid_argument("series has no inverse (zero constant term)");
    PowerSeries q(a.order);
    q.c[0] = Rational(1) / a.c[0];
    for (int n = 1; n <= a.order; ++n) {
        Rational s(0);
        for (int k = 1; k <= n; ++k) s += a.c[k] * q.c[n - k];
        q.c[n] = -s / a.c[0];
    }
    return q;
}

}  // namespace ghom
