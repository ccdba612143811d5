#include "paircorr/fbounds.hpp"
#include "paircorr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace paircorr::fbounds {

namespace {

constexpr double kPi = 3.14159265358979323846;

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

struct PartView {
    double radius;   // support radius of the transform
    double rho;      // rho of the unscaled profile
    double g0;       // profile value at the origin
};

PartView view_of(const ConfigPart& part) {
    return std::visit(
        [](const auto& p) -> PartView {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, kernels::FejerKernel>) {
                return {p.delta, kernels::rho_fejer(p.delta), p.delta};
            } else {
                auto rv = epsearch::rho_of(p);
                return {1.0, rv.rho, rv.g0};
            }
        },
        part.profile);
}

double part_ft(const ConfigPart& part, double alpha) {
    const double rel = alpha - part.shift;
    return part.height * std::visit(
        [rel](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, kernels::FejerKernel>)
                return kernels::fejer_ft(p.delta, rel);
            else
                return epsearch::autocorrelate(p, rel);
        },
        part.profile);
}

}  // namespace

bool verify_configuration(const Configuration& cfg, Side side, int grid_per_unit) {
    if (cfg.parts.empty())
        throw std::invalid_argument("verify_configuration: empty configuration");
    if (grid_per_unit < 1000)
        throw std::invalid_argument("verify_configuration: grid must be >= 1000 per unit");
    if (!(cfg.lo < cfg.hi))
        throw std::invalid_argument("verify_configuration: target interval is degenerate");

    double lo = cfg.lo, hi = cfg.hi;
    std::set<double> knots{cfg.lo, cfg.hi, cfg.lo - 1e-9, cfg.hi + 1e-9};
    for (const auto& part : cfg.parts) {
        const double r = view_of(part).radius;
        lo = std::min(lo, part.shift - r);
        hi = std::max(hi, part.shift + r);
        for (double k : {part.shift - r, part.shift, part.shift + r}) {
            knots.insert(k);
            knots.insert(k - 1e-9);
            knots.insert(k + 1e-9);
        }
    }

    auto total = [&cfg](double a) {
        double s = 0.0;
        for (const auto& part : cfg.parts) s += part_ft(part, a);
        return s;
    };
    auto chi = [&cfg](double a) { return (a >= cfg.lo && a <= cfg.hi) ? 1.0 : 0.0; };
    auto holds = [&](double a) {
        const double s = total(a), c = chi(a);
        return side == Side::majorize ? s >= c - 1e-9 : s <= c + 1e-9;
    };

    const long n = std::lround(std::ceil((hi - lo) * grid_per_unit));
    for (long i = 0; i <= n; ++i) {
        if (!holds(lo + (hi - lo) * (double)i / (double)n)) return false;
    }
    for (double k : knots)
        if (!holds(k)) return false;
    return true;
}

double configuration_value(const Configuration& cfg, Side side, int grid_per_unit) {
    if (!verify_configuration(cfg, side, grid_per_unit))
        throw std::invalid_argument("configuration_value: configuration fails verification");
    double total = 0.0;
    for (const auto& part : cfg.parts) {
        const auto v = view_of(part);
        total += part.height *
                 (side == Side::majorize ? v.rho : 2.0 * v.g0 - v.rho);
    }
    return total;
}

double c_plus_triangle(double ell) {
    if (!(ell > 0.0)) throw std::invalid_argument("c_plus_triangle: ell must be > 0");
    auto stacked = [](double l, double frac) {
        return 4.0 / 3.0 * (l + 1.0) + frac * frac * frac / 12.0 - frac / 3.0 -
               0.25 * positive_part(1.0 - frac - frac * frac);
    };
    if (ell >= 1.0) {
        return stacked(ell, ell - std::floor(ell));
    }
    const double c = std::max(std::pow(ell * ell / 6.0, 1.0 / 3.0), ell / (2.0 - ell));
    const double single = (1.0 + c) * (1.0 + ell * ell * (1.0 + c) * (1.0 + c) / (12.0 * c * c));
    return std::min(stacked(ell, ell), single);
}

double c_minus_triangle(double ell) {
    if (!(ell > 0.0)) throw std::invalid_argument("c_minus_triangle: ell must be > 0");
    if (ell <= 2.0) return positive_part(ell - 1.0 - ell * ell / 12.0);
    const double frac = ell - std::floor(ell);
    const double half = 0.5 * (1.0 + frac);
    return 2.0 / 3.0 * (ell - 1.0) - 2.0 * frac / 3.0 +
           half * positive_part(frac - (1.0 + frac) * (1.0 + frac) / 12.0);
}

double g_n(int n, double beta) {
    if (n < 1) throw std::invalid_argument("g_n: n must be >= 1");
    if (!(beta > 1.0)) throw std::invalid_argument("g_n: beta must be > 1");
    if (n == 1)
        return std::min(positive_part(beta + 2.0 / (3.0 * beta) - 2.0), 1.0 / 3.0);
    const double d = std::min(1.0, beta / n);
    return (n - 0.5) * d + kernels::dirichlet_min(n - 1) * (d * d / 6.0 - d / 2.0 + 0.5) - 1.0;
}

int symmetric_argmax_n(double beta) {
    if (!(beta > 1.0)) throw std::invalid_argument("symmetric_argmax_n: beta must be > 1");
    const int n_max = (int)std::ceil(13.0 * beta);
    int best_n = 1;
    double best = g_n(1, beta);
    for (int n = 2; n <= n_max; ++n) {
        const double v = g_n(n, beta);
        if (v > best) { best = v; best_n = n; }
    }
    return best_n;
}

double c_minus_symmetric(double beta) {
    if (!(beta > 1.0)) throw std::invalid_argument("c_minus_symmetric: beta must be > 1");
    return g_n(symmetric_argmax_n(beta), beta);
}

double c_plus_symmetric(double beta) {
    if (!(beta > 1.0)) throw std::invalid_argument("c_plus_symmetric: beta must be > 1");
    return 0.5 * c_plus_triangle(2.0 * beta) - 1.0;
}

std::pair<double, double> c_bounds_interval(double b, double beta) {
    if (!(beta > b && b > 1.0))
        throw std::invalid_argument("c_bounds_interval: need beta > b > 1");
    const double ell = beta - b;
    const double lower =
        std::max(c_minus_triangle(ell), c_minus_symmetric(beta) - c_plus_symmetric(b));
    const double upper =
        std::min(c_plus_triangle(ell), c_plus_symmetric(beta) - c_minus_symmetric(b));
    return {lower, upper};
}

double conjectured_integral(double beta) {
    if (!(beta > 1.0)) throw std::invalid_argument("conjectured_integral: beta must be > 1");
    return beta - 1.0;
}

double pair_correlation_density_integral(double beta) {
    if (beta < 0.0)
        throw std::invalid_argument("pair_correlation_density_integral: beta must be >= 0");
    if (beta == 0.0) return 0.0;
    return num::integrate([](double u) { return 1.0 - kernels::sinc2(kPi * u); }, 0.0, beta,
                          {1e-12, 1e-12, 200});
}

double mollifier_lower_bound(double theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("mollifier_lower_bound: theta must be > 0");
    return 1.0 / (0.5 + c_plus_symmetric(1.0 + theta));
}

double montgomery_taylor_constant() {
    const double r = std::sqrt(0.5);
    return 0.5 + r * std::cos(r) / std::sin(r);
}

double montgomery_taylor_g(double x) {
    const double cot = std::cos(std::sqrt(0.5)) / std::sin(std::sqrt(0.5));
    auto numer = [cot](double t) {
        return std::cos(kPi * t) - std::sqrt(2.0) * kPi * t * cot * std::sin(kPi * t);
    };
    const double den = 1.0 - 2.0 * kPi * kPi * x * x;
    double r;
    if (std::fabs(den) < 1e-7) {
        // removable point: numerator and denominator share a simple zero
        const double dnum = -kPi * std::sin(kPi * x) -
                            std::sqrt(2.0) * kPi * cot *
                                (std::sin(kPi * x) + kPi * x * std::cos(kPi * x));
        r = dnum / (-4.0 * kPi * kPi * x);
    } else {
        r = numer(x) / den;
    }
    return r * r;
}

BoundCurve sample_curve(const std::string& name, const std::string& kind,
                        const std::function<double(double)>& fn, double lo, double hi,
                        int steps, const std::string& provenance) {
    if (steps < 1) throw std::invalid_argument("sample_curve: steps must be >= 1");
    BoundCurve curve{name, kind, {}, provenance};
    std::vector<double> xs;
    xs.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) xs.push_back(lo + (hi - lo) * i / steps);
    std::vector<double> ys;
    ys.reserve(xs.size());
    for (double x : xs) ys.push_back(fn(x));
    // densify until the curve is visually continuous
    for (int pass = 0; pass < 12; ++pass) {
        bool refined = false;
        std::vector<double> nx, ny;
        for (size_t i = 0; i + 1 < xs.size(); ++i) {
            nx.push_back(xs[i]);
            ny.push_back(ys[i]);
            if (std::fabs(ys[i + 1] - ys[i]) >= 0.05 && xs[i + 1] - xs[i] > 1e-9) {
                const double xm = 0.5 * (xs[i] + xs[i + 1]);
                nx.push_back(xm);
                ny.push_back(fn(xm));
                refined = true;
            }
        }
        nx.push_back(xs.back());
        ny.push_back(ys.back());
        xs.swap(nx);
        ys.swap(ny);
        if (!refined) break;
    }
    for (size_t i = 0; i < xs.size(); ++i) curve.samples.emplace_back(xs[i], ys[i]);
    return curve;
}

}  // namespace paircorr::fbounds
