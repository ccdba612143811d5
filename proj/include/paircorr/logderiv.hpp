#pragma once

#include <utility>

namespace paircorr::logderiv {

/// Envelope coefficients of T log^2 T for the second moment of zeta'/zeta just
/// right of the critical line, as functions of the offset parameter a.
double u_minus(double a);
double u_plus(double a);

/// The earlier Goldston-Gonek-Montgomery envelopes, kept for comparison.
double v_minus(double a);
double v_plus(double a);

/// U^{+-} normalized by the conjectured asymptotic (1 - e^{-2a})/(4 a^2).
std::pair<double, double> g_curves(double a);

struct Extremum {
    double a;
    double value;
};

/// min_a G^-(a) (around a ~ 1) and max_a G^+(a) (around a ~ 0.6)
Extremum g_minus_minimum();
Extremum g_plus_maximum();

/// Where G^- rises back through `level` (lower) resp. G^+ falls through (upper).
double g_minus_crossing(double level = 0.999);
double g_plus_crossing(double level = 1.001);

/// Quadratic lower bound for the weighted tail integral of F.
double frak_i_lower(double xi);

/// The exponential-moment identity behind the U^- tail term: closed form
/// (1/(2a) + 3^{-1/2}) e^{-2a(1+3^{-1/2})} against the defining integral
/// 4 a^2 int_{1+3^{-1/2}}^inf (x^2/2 - x + 1/3) e^{-2ax} dx.
std::pair<double, double> frak_i_exp_identity(double a);

namespace detail {
double u_plus_closed(double a);
double u_plus_series(double a);
}  // namespace detail

}  // namespace paircorr::logderiv
