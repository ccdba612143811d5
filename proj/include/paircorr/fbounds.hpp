#pragma once

#include "paircorr/epsearch.hpp"
#include "paircorr/kernels.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace paircorr::fbounds {

/// One summand of a test configuration: a profile whose transform has compact
/// support, scaled by `height` and translated to `shift` on the Fourier side.
struct ConfigPart {
    std::variant<kernels::FejerKernel, epsearch::KreinProfile> profile;
    double height = 1.0;
    double shift = 0.0;
};

/// Test configuration against the characteristic function of [lo, hi].
struct Configuration {
    std::vector<ConfigPart> parts;
    double lo = 0.0;
    double hi = 1.0;
};

enum class Side { majorize, minorize };

/// Check sum_j height_j hat g_j(a - shift_j) >= chi_[lo,hi] (majorize) resp.
/// <= (minorize) on a dense grid of the covering interval, with all transform
/// knots and the target endpoints checked exactly.
bool verify_configuration(const Configuration& cfg, Side side, int grid_per_unit = 4096);

/// Objective of a verified configuration:
/// majorize -> sum height rho(g_j); minorize -> sum height (2 g_j(0) - rho(g_j)).
/// Throws std::invalid_argument when verification fails.
double configuration_value(const Configuration& cfg, Side side, int grid_per_unit = 4096);

// --- closed-form bound families -------------------------------------------

/// Stacked-triangle upper bound for int_b^{b+l} F, any b >= 1.
double c_plus_triangle(double ell);
/// Stacked-triangle lower bound; identically 0 until ell = 6 - 2 sqrt(6).
double c_minus_triangle(double ell);

/// Dirichlet-kernel family entering the symmetric lower bound.
double g_n(int n, double beta);

/// C^-(1, beta) = max_n G_n(beta), scanning n <= ceil(13 beta).
double c_minus_symmetric(double beta);
/// C^+(1, beta) = C^+_triangle(2 beta)/2 - 1.
double c_plus_symmetric(double beta);
/// smallest n attaining the maximum in C^-(1, beta)
int symmetric_argmax_n(double beta);

/// Best generic-interval bounds for int_b^beta F, combining both families.
std::pair<double, double> c_bounds_interval(double b, double beta);

/// Reference value of int_1^beta F under the pair correlation conjecture.
double conjectured_integral(double beta);
/// int_0^beta (1 - sinc^2(pi u)) du, the conjectured pair-count density mass.
double pair_correlation_density_integral(double beta);

/// Mollifier mean-square floor (1/2 + C^+(1, 1+theta))^{-1}.
double mollifier_lower_bound(double theta);

/// C_MT = 1/2 + 2^{-1/2} cot(2^{-1/2}), the sharp rho(g)/g(0) floor on A_0.
double montgomery_taylor_constant();
/// The extremal function attaining C_MT (normalized to g(0) = 1).
double montgomery_taylor_g(double x);

// --- sampled curves for CSV export -----------------------------------------

struct BoundCurve {
    std::string name;
    std::string kind;   // "upper" or "lower"
    std::vector<std::pair<double, double>> samples;
    std::string provenance;
};

/// Sample fn over [lo, hi]; midpoints are inserted until adjacent values
/// differ by less than 0.05.
BoundCurve sample_curve(const std::string& name, const std::string& kind,
                        const std::function<double(double)>& fn, double lo, double hi,
                        int steps, const std::string& provenance);

}  // namespace paircorr::fbounds
