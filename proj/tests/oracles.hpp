// Test-only oracles, independent of the library paths they check.
#pragma once

#include "paircorr/empirical.hpp"
#include "paircorr/epsearch.hpp"
#include "paircorr/numerics.hpp"

#include <cmath>
#include <vector>

namespace oracles {

inline constexpr double kPi = 3.14159265358979323846;

// h(x) = int_{-1/2}^{1/2} p(t) cos(2 pi t x) dt for an even polynomial p,
// by the sin/cos antiderivative recurrences (series fallback near w = 0)
inline double krein_h(const paircorr::epsearch::KreinProfile& p, double x) {
    const double w = 2.0 * kPi * x;
    const int d = (int)p.coeffs.size() - 1;
    if (std::fabs(w) < 1e-3) {
        // int t^j cos(wt) = sum_m (-w^2)^m/(2m)! * t^(j+2m+1)/(j+2m+1)
        double total = 0.0;
        for (int j = 0; j <= d; j += 2) {
            if (p.coeffs[j] == 0.0) continue;
            double term = 0.0, fac = 1.0;
            for (int m = 0; m < 8; ++m) {
                if (m > 0) fac *= -w * w / ((2.0 * m) * (2.0 * m - 1.0));
                term += fac * std::pow(0.5, j + 2 * m + 1) / (j + 2 * m + 1);
            }
            total += 2.0 * p.coeffs[j] * term;
        }
        return total;
    }
    // C_j = int_0^{1/2} t^j cos(wt) dt, S_j = int_0^{1/2} t^j sin(wt) dt
    std::vector<double> C(d + 1), S(d + 1);
    const double half = 0.5;
    C[0] = std::sin(w * half) / w;
    S[0] = (1.0 - std::cos(w * half)) / w;
    for (int j = 1; j <= d; ++j) {
        C[j] = std::pow(half, j) * std::sin(w * half) / w - (j / w) * S[j - 1];
        S[j] = -std::pow(half, j) * std::cos(w * half) / w + (j / w) * C[j - 1];
    }
    double total = 0.0;
    for (int j = 0; j <= d; j += 2) total += 2.0 * p.coeffs[j] * C[j];
    return total;
}

// brute-force O(N^2) double sum over all ordered pairs, no truncation
inline double form_factor_brute(const paircorr::empirical::ZeroDataset& ds, double alpha) {
    const double logT = std::log(ds.T);
    paircorr::num::KahanSum sum;
    for (double g1 : ds.ordinates)
        for (double g2 : ds.ordinates) {
            const double u = g1 - g2;
            sum.add(std::cos(alpha * logT * u) * 4.0 / (4.0 + u * u));
        }
    return 2.0 * kPi / (ds.T * logT) * sum.value();
}

// int over [-R, R] of f in unit chunks (adaptive per chunk), for slowly
// decaying oscillatory integrands
template <class F>
double chunked_integral(F f, double R, double tol = 1e-12) {
    paircorr::num::KahanSum total;
    const long n = std::lround(R);
    for (long j = -n; j < n; ++j)
        total.add(paircorr::num::integrate(f, (double)j, (double)j + 1.0, {tol, tol, 200}));
    return total.value();
}

}  // namespace oracles
