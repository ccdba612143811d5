#include "paircorr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace paircorr::num {

double find_root(const std::function<double(double)>& f, Bracket br, Tolerance tol) {
    tol.validate();
    if (!(br.lo < br.hi))
        throw std::invalid_argument("find_root: bracket needs lo < hi");

    double a = br.lo, b = br.hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw BracketError("find_root: no sign change on bracket");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double eps = std::numeric_limits<double>::epsilon();
        const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * (tol.abs + tol.rel * std::fabs(b));
        const double m = 0.5 * (c - b);
        if (std::fabs(m) <= tol1 || fb == 0.0) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // secant / inverse quadratic interpolation
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d; d = p / q;
            } else {
                d = m; e = m;
            }
        } else {
            d = m; e = m;
        }
        a = b; fa = fb;
        b += (std::fabs(d) > tol1) ? d : (m > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw ConvergenceError("find_root: max_iter exceeded", b);
}

namespace {

struct QuadCtx {
    const std::function<double(double)>& f;
    long evals = 0;
    long eval_cap = 4'000'000;
    double err_accum = 0.0;

    double eval(double x) {
        ++evals;
        return f(x);
    }
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(QuadCtx& ctx, double a, double b, double fa, double fm, double fb,
             double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = ctx.eval(lm), frm = ctx.eval(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double diff = (left + right) - whole;
    if (std::fabs(diff) <= 15.0 * eps || depth <= 0 || ctx.evals >= ctx.eval_cap) {
        if (std::fabs(diff) > 15.0 * eps) ctx.err_accum += std::fabs(diff) / 15.0;
        return left + right + diff / 15.0;
    }
    return adapt(ctx, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adapt(ctx, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double integrate_segment(QuadCtx& ctx, double a, double b, double eps) {
    const double fa = ctx.eval(a), fb = ctx.eval(b);
    const double m = 0.5 * (a + b);
    const double fm = ctx.eval(m);
    if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
        throw QuadratureError("integrate: non-finite integrand value", 0.0,
                              std::numeric_limits<double>::infinity());
    return adapt(ctx, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), eps, 48);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 Tolerance tol, const std::vector<double>& breakpoints) {
    tol.validate();
    if (std::isinf(b)) {
        // map [a, inf) onto [0, 1) by x = a + t/(1-t)
        auto g = [&f, a](double t) {
            if (t >= 1.0) return 0.0;
            const double u = 1.0 - t;
            return f(a + t / u) / (u * u);
        };
        std::vector<double> mapped;
        mapped.reserve(breakpoints.size());
        for (double x : breakpoints)
            if (x > a && std::isfinite(x)) mapped.push_back((x - a) / (1.0 + x - a));
        return integrate(g, 0.0, 1.0, tol, mapped);
    }
    if (!(a < b)) {
        if (a == b) return 0.0;
        return -integrate(f, b, a, tol, breakpoints);
    }

    std::vector<double> knots{a};
    for (double x : breakpoints)
        if (x > a && x < b) knots.push_back(x);
    knots.push_back(b);
    std::sort(knots.begin(), knots.end());

    QuadCtx ctx{f};
    // coarse pass to scale the relative part of the tolerance
    double coarse = 0.0;
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        const double lo = knots[i], hi = knots[i + 1];
        coarse += std::fabs(simpson(lo, hi, ctx.eval(lo), ctx.eval(0.5 * (lo + hi)), ctx.eval(hi)));
    }
    const double eps_total = std::max(tol.abs, tol.rel * coarse);

    double total = 0.0;
    const double len = b - a;
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        const double lo = knots[i], hi = knots[i + 1];
        total += integrate_segment(ctx, lo, hi, eps_total * ((hi - lo) / len));
    }
    if (ctx.err_accum > std::max(eps_total, 1e-15) * 16.0)
        throw QuadratureError("integrate: requested tolerance not reached", total, ctx.err_accum);
    return total;
}

MinResult minimize_1d(const std::function<double(double)>& f, double lo, double hi,
                      Tolerance tol, int grid_points) {
    tol.validate();
    if (!(lo < hi))
        throw std::invalid_argument("minimize_1d: degenerate interval");
    constexpr double kPi = 3.14159265358979323846;
    int n = grid_points > 0 ? grid_points
                            : std::max(64, (int)std::ceil(16.0 * (hi - lo) / kPi));

    double best_x = lo, best_v = f(lo);
    const double h = (hi - lo) / n;
    for (int i = 1; i <= n; ++i) {
        const double x = (i == n) ? hi : lo + h * i;
        const double v = f(x);
        if (v < best_v) { best_v = v; best_x = x; }
    }

    double a = std::max(lo, best_x - h), b = std::min(hi, best_x + h);
    // golden-section refinement
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    const double width_target = std::max(tol.abs, tol.rel * std::max(std::fabs(lo), std::fabs(hi)));
    for (int it = 0; it < tol.max_iter && (b - a) > width_target; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    const double fm = f(xm);
    MinResult r{xm, fm};
    if (f1 < r.value) r = {x1, f1};
    if (f2 < r.value) r = {x2, f2};
    if (best_v < r.value) r = {best_x, best_v};
    return r;
}

SimplexResult minimize_simplex(const std::function<double(const std::vector<double>&)>& f,
                               const std::vector<double>& start, double scale,
                               Tolerance tol, std::uint64_t seed) {
    tol.validate();
    const size_t d = start.size();
    SimplexResult res;
    res.seed = seed;
    if (d == 0) {
        res.x = start;
        res.value = f(start);
        return res;
    }

    // splitmix64; avoids distribution implementation differences
    auto next_u01 = [state = seed]() mutable {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z = z ^ (z >> 31);
        return (z >> 11) * (1.0 / 9007199254740992.0);
    };

    std::vector<std::vector<double>> v(d + 1, start);
    for (size_t i = 0; i < d; ++i)
        v[i + 1][i] += scale * (1.0 + 0.25 * next_u01());

    std::vector<double> fv(d + 1);
    auto guard = [&](double val) {
        if (!std::isfinite(val))
            throw SimplexError("minimize_simplex: non-finite objective", res);
        return val;
    };
    for (size_t i = 0; i <= d; ++i) fv[i] = guard(f(v[i]));

    std::vector<size_t> order(d + 1);
    auto sort_order = [&] {
        for (size_t i = 0; i <= d; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return fv[x] < fv[y]; });
    };

    std::vector<double> centroid(d), xr(d), xe(d), xc(d);
    for (int it = 0; it < tol.max_iter; ++it) {
        sort_order();
        const size_t best = order[0], worst = order[d], second = order[d - 1];
        res.iterations = it;
        res.trace.push_back(fv[best]);
        if (std::fabs(fv[worst] - fv[best]) <= tol.abs + tol.rel * std::fabs(fv[best]))
            break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t i = 0; i <= d; ++i) {
            if (i == worst) continue;
            for (size_t j = 0; j < d; ++j) centroid[j] += v[i][j];
        }
        for (size_t j = 0; j < d; ++j) centroid[j] /= (double)d;

        for (size_t j = 0; j < d; ++j) xr[j] = centroid[j] + (centroid[j] - v[worst][j]);
        double fr = guard(f(xr));
        if (fr < fv[best]) {
            for (size_t j = 0; j < d; ++j) xe[j] = centroid[j] + 2.0 * (centroid[j] - v[worst][j]);
            double fe = guard(f(xe));
            if (fe < fr) { v[worst] = xe; fv[worst] = fe; }
            else { v[worst] = xr; fv[worst] = fr; }
        } else if (fr < fv[second]) {
            v[worst] = xr; fv[worst] = fr;
        } else {
            const bool outside = fr < fv[worst];
            const std::vector<double>& base = outside ? xr : v[worst];
            for (size_t j = 0; j < d; ++j) xc[j] = centroid[j] + 0.5 * (base[j] - centroid[j]);
            double fc = guard(f(xc));
            if (fc < (outside ? fr : fv[worst])) {
                v[worst] = xc; fv[worst] = fc;
            } else {
                for (size_t i = 0; i <= d; ++i) {
                    if (i == best) continue;
                    for (size_t j = 0; j < d; ++j) v[i][j] = v[best][j] + 0.5 * (v[i][j] - v[best][j]);
                    fv[i] = guard(f(v[i]));
                }
            }
        }
    }
    sort_order();
    res.x = v[order[0]];
    res.value = fv[order[0]];
    return res;
}

}  // namespace paircorr::num
