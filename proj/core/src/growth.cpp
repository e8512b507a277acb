#include "ghom/growth.hpp"

#include "ghom/power_series.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ghom {

namespace {

// Denominator (1 - t^2)(1 - t^2 - t^3) = 1 - 2t^2 - t^3 + t^4 + t^5 and
// numerator t^3 (3 - t^2).
const int kDenom[] = {1, 0, -2, -1, 1, 1};
const int kNumer[] = {0, 0, 0, 3, 0, -1};

Integer numer_at(int n) { return (n >= 0 && n <= 5) ? Integer(kNumer[n]) : Integer(0); }

}  // namespace

std::vector<Integer> p_coefficients(int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<Integer> a(n + 1, Integer(0));
    for (int m = 1; m <= n; ++m) {
        Integer v = numer_at(m);
        for (int k = 1; k <= 5 && k <= m; ++k) v -= kDenom[k] * a[m - k];
        a[m] = std::move(v);
    }
    return a;
}

std::vector<Integer> p_coefficients_series_oracle(int n) {
    PowerSeries denom(n), numer(n);
    for (int k = 0; k <= 5 && k <= n; ++k) {
        denom.c[k] = Rational(kDenom[k]);
        numer.c[k] = Rational(kNumer[k]);
    }
    PowerSeries p = numer * inverse_series(denom);
    std::vector<Integer> out(n + 1, Integer(0));
    for (int m = 0; m <= n; ++m) {
        if (denominator(p.c[m]) != 1) throw std::logic_error("series oracle produced a non-integer");
        out[m] = numerator(p.c[m]);
    }
    return out;
}

std::vector<int> moebius_table(int n) {
    std::vector<int> mu(n + 1, 1), primes;
    std::vector<char> sieved(n + 1, 0);
    for (int i = 2; i <= n; ++i) {
        if (!sieved[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (int p : primes) {
            long long ip = 1LL * i * p;
            if (ip > n) break;
            sieved[ip] = 1;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    return mu;
}

std::vector<Integer> lie_dimensions(int n) {
    std::vector<Integer> a = p_coefficients(n);
    std::vector<int> mu = moebius_table(n);
    std::vector<Integer> lie(n + 1, Integer(0));
    for (int m = 1; m <= n; ++m) {
        Integer s(0);
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) s += mu[m / d] * a[d];
        if (s % m != 0) throw std::logic_error("Moebius inversion gave a non-integer at n=" + std::to_string(m));
        lie[m] = s / m;
        if (lie[m] < 0) throw std::logic_error("negative Lie dimension at n=" + std::to_string(m));
    }
    return lie;
}

std::vector<Integer> lie_dimensions_log_oracle(int n) {
    // f = t^3 + t^5 + t^7 + ...; L = log(1/(1-f)) = sum f^k / k.
    PowerSeries f(n);
    for (int k = 3; k <= n; k += 2) f.c[k] = Rational(1);
    PowerSeries log_series(n), power(n);
    power.c[0] = Rational(1);
    for (int k = 1; 3 * k <= n; ++k) {
        power = power * f;
        PowerSeries term = power;
        term *= Rational(1, k);
        log_series += term;
    }
    // n L_n = sum_{d|n} d A_d, solved triangularly.
    std::vector<Integer> lie(n + 1, Integer(0));
    for (int m = 1; m <= n; ++m) {
        Rational rhs = log_series.c[m] * m;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) rhs -= Rational(d) * Rational(lie[d]);
        Rational v = rhs / m;
        if (denominator(v) != 1) throw std::logic_error("log-expansion oracle non-integral at n=" + std::to_string(m));
        lie[m] = numerator(v);
    }
    return lie;
}

namespace {

// Sign-exact bisection for a polynomial with integer coefficients,
// low-degree first.
double bisect_root(const std::vector<long long>& poly, Rational lo, Rational hi, int iterations) {
    auto eval = [&](const Rational& t) {
        Rational v(0);
        for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) v = v * t + poly[i];
        return v;
    };
    Rational flo = eval(lo);
    if (flo == 0) return lo.convert_to<double>();
    bool lo_neg = flo < 0;
    for (int it = 0; it < iterations; ++it) {
        Rational mid = (lo + hi) / 2;
        Rational fm = eval(mid);
        if (fm == 0) return mid.convert_to<double>();
        if ((fm < 0) == lo_neg)
            lo = mid;
        else
            hi = mid;
    }
    return ((lo + hi) / 2).convert_to<double>();
}

double eval_p(double t) {
    return t * t * t * (3 - t * t) / ((1 - t * t) * (1 - t * t - t * t * t));
}

}  // namespace

GrowthRoots growth_roots() {
    GrowthRoots r;
    // The factor 1 - t^2 - t^3 carries the smallest-magnitude root.
    r.alpha = bisect_root({1, 0, -1, -1}, Rational(0), Rational(1), 64);
    r.beta0 = bisect_root({-1, -1, 0, 1}, Rational(1), Rational(2), 64);
    if (std::abs(r.beta0 - 1.0 / r.alpha) > 1e-10)
        throw std::logic_error("beta0 is not the reciprocal of alpha");
    return r;
}

GrowthReport growth_report(int n) {
    if (n < 10) throw std::invalid_argument("growth report needs order >= 10");
    GrowthReport rep;
    rep.roots = growth_roots();
    std::vector<Integer> a = p_coefficients(n);
    std::vector<Integer> lie = lie_dimensions(n);
    rep.rows.reserve(n);
    for (int m = 1; m <= n; ++m) {
        GrowthRow row;
        row.n = m;
        row.a = a[m];
        row.lie_dim = lie[m];
        row.product = a[m].convert_to<double>() * std::pow(rep.roots.alpha, m);
        rep.rows.push_back(std::move(row));
    }
    // Residue estimate: symmetric evaluation of (t - alpha) p(t) around alpha.
    const double delta = 1e-5;
    double left = -delta * eval_p(rep.roots.alpha - delta);
    double right = delta * eval_p(rep.roots.alpha + delta);
    rep.residue_at_alpha = (left + right) / 2;

    rep.tail_within_threshold = n >= rep.tail_start;
    for (int m = rep.tail_start; m <= n; ++m)
        if (std::abs(rep.rows[m - 1].product - 1.0) >= rep.tail_threshold) rep.tail_within_threshold = false;
    rep.first_stable_n = -1;
    for (int m = n; m >= 1; --m) {
        if (std::abs(rep.rows[m - 1].product - 1.0) < rep.tail_threshold)
            rep.first_stable_n = m;
        else
            break;
    }
    return rep;
}

std::string growth_csv(const GrowthReport& report) {
    std::ostringstream os;
    os << "n,a_n,A_n,product\n";
    for (const GrowthRow& row : report.rows) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.15g", row.product);
        os << row.n << "," << row.a << "," << row.lie_dim << "," << buf << "\n";
    }
    return os.str();
}

}  // namespace ghom
