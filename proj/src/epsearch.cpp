#include "paircorr/epsearch.hpp"
#include "paircorr/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace paircorr::epsearch {

namespace {

// binomial table large enough for degree-8 profiles (indices up to 18)
double binom(int n, int k) {
    static const auto table = [] {
        std::array<std::array<double, 20>, 20> t{};
        for (int i = 0; i < 20; ++i) {
            t[i][0] = 1.0;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0.0);
        }
        return t;
    }();
    return table[n][k];
}

double horner(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (size_t j = c.size(); j-- > 0;) v = v * x + c[j];
    return v;
}

}  // namespace

std::vector<double> autocorrelation_poly(const KreinProfile& profile) {
    const auto& c = profile.coeffs;
    const int d = (int)c.size() - 1;
    // q(a) = int_{a-1/2}^{1/2} p(t) p(t-a) dt for a in [0, 1]:
    //   sum_{i,j,m} c_i c_j C(j,m) (-a)^{j-m} [ (1/2)^{s} - (a-1/2)^{s} ] / s,
    // s = i+m+1, with (a-1/2)^s expanded binomially.
    std::vector<double> q(2 * d + 2, 0.0);
    for (int i = 0; i <= d; ++i) {
        if (c[i] == 0.0) continue;
        for (int j = 0; j <= d; ++j) {
            if (c[j] == 0.0) continue;
            const double cc = c[i] * c[j];
            for (int m = 0; m <= j; ++m) {
                const int s = i + m + 1;
                const double base = cc * binom(j, m) / s;
                const double sign_jm = ((j - m) % 2 == 0) ? 1.0 : -1.0;
                // (-a)^{j-m} * (1/2)^s term
                q[j - m] += base * sign_jm * std::pow(0.5, s);
                // -(-a)^{j-m} * (a - 1/2)^s expanded
                for (int r = 0; r <= s; ++r) {
                    const double sign_sr = ((s - r) % 2 == 0) ? 1.0 : -1.0;
                    q[j - m + r] -= base * sign_jm * binom(s, r) * sign_sr * std::pow(0.5, s - r);
                }
            }
        }
    }
    return q;
}

double autocorrelate(const KreinProfile& profile, double alpha) {
    const double a = std::fabs(alpha);
    if (a >= 1.0) return 0.0;
    return horner(autocorrelation_poly(profile), a);
}

RhoValue rho_of(const KreinProfile& profile) {
    bool nonzero = false;
    for (double v : profile.coeffs) nonzero = nonzero || v != 0.0;
    if (!nonzero) throw std::invalid_argument("rho_of: zero polynomial");

    const auto q = autocorrelation_poly(profile);
    RhoValue rv{};
    rv.ghat0 = q[0];
    double moment = 0.0;   // int_0^1 a q(a) da
    for (size_t j = 0; j < q.size(); ++j) moment += q[j] / (double)(j + 2);
    rv.rho = rv.ghat0 + 2.0 * moment;

    double ip = 0.0;       // int_{-1/2}^{1/2} p
    for (size_t j = 0; j < profile.coeffs.size(); j += 2)
        ip += profile.coeffs[j] * std::pow(0.5, (double)j) / (double)(j + 1);
    rv.g0 = ip * ip;
    return rv;
}

namespace {

// extremum of a smooth function over [0, 1]: dense grid plus local refine
double extreme_on_unit(const std::function<double(double)>& eval, bool maximum) {
    auto f = [&](double a) { return maximum ? -eval(a) : eval(a); };
    auto r = num::minimize_1d(f, 0.0, 1.0, {1e-14, 0.0, 200}, 1024);
    return maximum ? -r.value : r.value;
}

}  // namespace

double periodization_min(const KreinProfile& profile) {
    const auto q = autocorrelation_poly(profile);
    auto P = [&q](double a) { return horner(q, a) + horner(q, 1.0 - a); };
    return extreme_on_unit(P, false);
}

double k1_of(const KreinProfile& profile) {
    const auto q = autocorrelation_poly(profile);
    // the sum hat g(a) + hat g(a+1) lives on [-2, 1]; by evenness its values
    // are covered by q(t) + q(1-t) (both terms active, t in [0,1]) and q(t)
    // alone (the single-term windows)
    auto both = [&q](double a) { return horner(q, a) + horner(q, 1.0 - a); };
    auto lone = [&q](double a) { return horner(q, a); };
    return std::max(extreme_on_unit(both, true), extreme_on_unit(lone, true));
}

double ep4_objective(const KreinProfile& profile) {
    const auto rv = rho_of(profile);
    const double pmin = periodization_min(profile);
    if (!(pmin > 1e-12 * std::max(1.0, rv.ghat0)))
        throw std::domain_error("ep4_objective: periodization minimum vanishes");
    return rv.rho / pmin;
}

double ep5_objective(const KreinProfile& profile) {
    const auto rv = rho_of(profile);
    if (!(rv.g0 > 0.0))
        throw std::domain_error("ep5_objective: g(0) = 0");
    return (rv.g0 + kernels::c0() * (rv.rho - rv.g0)) / k1_of(profile);
}

std::string to_string(Problem p) { return p == Problem::ep4 ? "ep4" : "ep5"; }

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double u01(std::uint64_t& state) {
    return (splitmix(state) >> 11) * (1.0 / 9007199254740992.0);
}

KreinProfile assemble(const std::vector<double>& even_tail) {
    std::vector<double> c{1.0};
    for (double v : even_tail) {
        c.push_back(0.0);
        c.push_back(v);
    }
    return KreinProfile(c);
}

}  // namespace

SearchResult search(Problem problem, int degree, int restarts, std::uint64_t seed) {
    if (degree < 0 || degree > 8 || degree % 2 != 0)
        throw std::invalid_argument("search: degree must be even and <= 8");
    if (restarts < 1) throw std::invalid_argument("search: restarts must be >= 1");

    const bool maximize = problem == Problem::ep5;
    const int dim = degree / 2;

    auto objective = [&](const std::vector<double>& tail) {
        KreinProfile p = assemble(tail);
        try {
            if (problem == Problem::ep4) return ep4_objective(p);
            return -ep5_objective(p);
        } catch (const std::domain_error&) {
            double overshoot = 0.0;
            for (double v : tail) overshoot += std::fabs(v);
            return 1e6 * (1.0 + overshoot);   // infeasible region, steer back
        }
    };

    SearchResult out;
    out.problem = problem;
    out.degree = degree;
    out.seed = seed;
    out.restarts = restarts;

    double best_internal = 0.0;
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> start(dim, 0.0);
        if (r > 0) {
            std::uint64_t sub = seed * 0x2545F4914F6CDD1Dull + 1000003ull * (std::uint64_t)r;
            for (int j = 0; j < dim; ++j) start[j] = -50.0 + 100.0 * u01(sub);
        }
        num::SimplexResult sr;
        if (dim == 0) {
            sr.x = start;
            sr.value = objective(start);
        } else {
            sr = num::minimize_simplex(objective, start, 5.0, {1e-11, 1e-10, 600},
                                       seed + (std::uint64_t)r);
        }
        out.total_iterations += sr.iterations;
        out.restart_values.push_back(maximize ? -sr.value : sr.value);
        if (r == 0 || sr.value < best_internal) {
            best_internal = sr.value;
            out.best = assemble(sr.x);
            out.best_restart = r;
        }
    }
    out.value = maximize ? -best_internal : best_internal;
    out.record_met = maximize ? out.value >= 0.9278 : out.value <= 1.3302;
    return out;
}

}  // namespace paircorr::epsearch
