#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace paircorr::num {

struct Tolerance {
    double abs = 1e-12;
    double rel = 1e-10;
    int max_iter = 200;

    void validate() const {
        if (!(abs >= 0.0) || !(rel >= 0.0) || abs + rel <= 0.0)
            throw std::invalid_argument("Tolerance: need abs, rel >= 0 and abs + rel > 0");
        if (max_iter < 1)
            throw std::invalid_argument("Tolerance: max_iter must be >= 1");
    }
};

struct Bracket {
    double lo;
    double hi;
};

struct BracketError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConvergenceError : std::runtime_error {
    double best;
    ConvergenceError(const std::string& msg, double best_so_far)
        : std::runtime_error(msg), best(best_so_far) {}
};

struct QuadratureError : std::runtime_error {
    double partial;        // best estimate before giving up
    double error_estimate;
    QuadratureError(const std::string& msg, double part, double err)
        : std::runtime_error(msg), partial(part), error_estimate(err) {}
};

/// Compensated accumulator for long mixed-magnitude sums.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// Bracketing root finder (bisection with inverse-quadratic/secant steps,
/// Brent's method). Requires a sign change on the bracket.
double find_root(const std::function<double(double)>& f, Bracket br, Tolerance tol = {});

/// Adaptive Simpson quadrature with Richardson correction.
/// `b` may be +infinity; the tail is mapped by x = a + t/(1-t).
/// Interior breakpoints seed the initial subdivision; pass the kinks of a
/// piecewise-smooth integrand here.
double integrate(const std::function<double(double)>& f, double a, double b,
                 Tolerance tol = {}, const std::vector<double>& breakpoints = {});

struct MinResult {
    double x;
    double value;
};

/// Grid-seeded 1-D minimization: uniform scan, then golden-section refinement
/// around the best grid cell. grid_points = 0 picks max(64, ceil(16 (hi-lo)/pi));
/// multimodal callers should pass their own density.
MinResult minimize_1d(const std::function<double(double)>& f, double lo, double hi,
                      Tolerance tol = {}, int grid_points = 0);

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    std::uint64_t seed = 0;
    std::vector<double> trace;   // best objective value after each iteration
};

struct SimplexError : std::runtime_error {
    SimplexResult partial;
    SimplexError(const std::string& msg, SimplexResult p)
        : std::runtime_error(msg), partial(std::move(p)) {}
};

/// Nelder-Mead descent from `start`. Deterministic for a fixed seed (the seed
/// jitters the initial simplex edge lengths). Never returns a value above
/// f(start). Throws SimplexError if the objective goes non-finite.
SimplexResult minimize_simplex(const std::function<double(const std::vector<double>&)>& f,
                               const std::vector<double>& start, double scale,
                               Tolerance tol = {}, std::uint64_t seed = 0);

}  // namespace paircorr::num
