#include "paircorr/kernels.hpp"
#include "paircorr/numerics.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <optional>

namespace paircorr::kernels {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

double sinc2(double x) {
    if (std::fabs(x) < 1e-4) {
        const double x2 = x * x;
        // (sin x / x)^2 = 1 - x^2/3 + 2x^4/45 - x^6/315
        return 1.0 + x2 * (-1.0 / 3.0 + x2 * (2.0 / 45.0 - x2 / 315.0));
    }
    const double s = std::sin(x) / x;
    return s * s;
}

double fejer_eval(double delta, double x) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("fejer_eval: delta must be in (0, 1]");
    return delta * sinc2(kPi * delta * x);
}

double fejer_ft(double delta, double xi) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("fejer_ft: delta must be in (0, 1]");
    const double t = 1.0 - std::fabs(xi) / delta;
    return t > 0.0 ? t : 0.0;
}

double rho_fejer(double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("rho_fejer: delta must be in (0, 1]");
    return 1.0 + delta * delta / 3.0;
}

double dirichlet_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("dirichlet_eval: n must be >= 0");
    if (n == 0) return 1.0;
    const double r = std::remainder(x, kTwoPi);
    if (std::fabs(r) < 1e-4) {
        // Taylor at the removable point: (2n+1) - S2 r^2 + S4 r^4/12 - S6 r^6/360
        const double nn = n;
        const double s2 = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 6.0;
        const double s4 = nn * (nn + 1.0) * (2.0 * nn + 1.0) * (3.0 * nn * nn + 3.0 * nn - 1.0) / 30.0;
        const double s6 = nn * (nn + 1.0) * (2.0 * nn + 1.0) *
                          (3.0 * nn * nn * nn * nn + 6.0 * nn * nn * nn - 3.0 * nn + 1.0) / 42.0;
        const double r2 = r * r;
        return (2.0 * nn + 1.0) + r2 * (-s2 + r2 * (s4 / 12.0 - r2 * s6 / 360.0));
    }
    return std::sin((n + 0.5) * r) / std::sin(0.5 * r);
}

namespace {

double dirichlet_min_compute(int n) {
    if (n == 0) return 1.0;
    if (n == 1) return -1.0;  // 1 + 2 cos(pi)
    // min over [0, pi] by evenness and periodicity; 16 grid points per lobe
    auto f = [n](double x) { return dirichlet_eval(n, x); };
    const int grid = std::max(64, 4 * (2 * n + 1));
    return num::minimize_1d(f, 0.0, kPi, {1e-14, 0.0, 400}, grid).value;
}

struct C0Cache {
    double c0 = 0.0, x1 = 0.0;
};

const C0Cache& c0_cache() {
    static C0Cache cache;
    static std::once_flag flag;
    std::call_once(flag, [] {
        auto r = num::minimize_1d([](double x) { return std::sin(x) / x; }, kPi, kTwoPi,
                                  {1e-14, 0.0, 400}, 256);
        cache.x1 = r.x;
        cache.c0 = r.value;
    });
    return cache;
}

}  // namespace

double dirichlet_min(int n) {
    if (n < 0) throw std::invalid_argument("dirichlet_min: n must be >= 0");
    static std::array<std::optional<double>, 65> memo;
    static std::mutex mu;
    if (n <= 64) {
        std::lock_guard<std::mutex> lock(mu);
        if (!memo[n]) memo[n] = dirichlet_min_compute(n);
        return *memo[n];
    }
    return dirichlet_min_compute(n);
}

double c0() { return c0_cache().c0; }
double x1() { return c0_cache().x1; }

Envelope appendix_a_envelope(int n) {
    if (n < 1) throw std::invalid_argument("appendix_a_envelope: n must be >= 1");
    Envelope env;
    env.lower = 2.0 * c0() - (kTwoPi - 1.0) / n;
    env.upper = 2.0 * c0() + 5.4935 / n;
    const double ratio = dirichlet_min(n) / n;
    bool ok = env.lower - 1e-12 <= ratio && ratio <= env.upper + 1e-12;
    // pointwise sandwich 1/n + 2 sin(nx)/(nx) -+ x around D_n(x)/n
    const int samples = 512;
    for (int i = 1; ok && i <= samples; ++i) {
        const double x = kPi * i / samples;
        const double mid = 1.0 / n + 2.0 * std::sin(n * x) / (n * x);
        const double v = dirichlet_eval(n, x) / n;
        ok = (mid - x - 1e-9 <= v) && (v <= mid + x + 1e-9);
    }
    env.sandwich_ok = ok;
    return env;
}

double poisson_eval(double b, double x) {
    if (!(b > 0.0)) throw std::invalid_argument("poisson_eval: b must be > 0");
    return b / (b * b + x * x);
}

double poisson_ft(double b, double alpha) {
    if (!(b > 0.0)) throw std::invalid_argument("poisson_ft: b must be > 0");
    return kPi * std::exp(-kTwoPi * b * std::fabs(alpha));
}

double poisson_majorant_eval(double b, double x) {
    if (!(b > 0.0)) throw std::invalid_argument("poisson_majorant_eval: b must be > 0");
    // h_b(x) * (cosh(2 pi b) - cos(2 pi x)) / (2 sinh^2(pi b)); the bracket
    // equals 1 + (1 - cos(2 pi x)) / (2 sinh^2(pi b)), which shows m_b >= h_b
    const double s = std::sinh(kPi * b);
    return poisson_eval(b, x) * (1.0 + (1.0 - std::cos(kTwoPi * x)) / (2.0 * s * s));
}

double poisson_majorant_ft(double b, double alpha) {
    if (!(b > 0.0)) throw std::invalid_argument("poisson_majorant_ft: b must be > 0");
    const double u = std::fabs(alpha);
    if (u >= 1.0) return 0.0;
    // (pi/2) sinh(2 pi b (1-u)) / sinh^2(pi b)
    //   = pi e^{-cu} (1 - e^{-2c(1-u)}) / (1 - e^{-c})^2,  c = 2 pi b
    // which neither overflows for large b nor cancels near u = 1
    const double c = kTwoPi * b;
    const double em = std::expm1(-c);
    return kPi * std::exp(-c * u) * (-std::expm1(-2.0 * c * (1.0 - u))) / (em * em);
}

}  // namespace paircorr::kernels
