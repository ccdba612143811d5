#include "paircorr/jbounds.hpp"
#include "paircorr/epsearch.hpp"
#include "paircorr/fbounds.hpp"
#include "paircorr/kernels.hpp"
#include "paircorr/sunrise.hpp"

#include <stdexcept>

namespace paircorr::jbounds {

JBound j_bounds(double beta) {
    if (!(beta > 1.0)) throw std::invalid_argument("j_bounds: beta must be > 1");
    return {beta,
            sunrise::l_minus() * fbounds::c_minus_symmetric(beta) + 0.5,
            sunrise::l_plus() * fbounds::c_plus_symmetric(beta) + 0.5};
}

std::pair<double, double> j_interval_bounds(double b, double beta) {
    auto [lower, upper] = fbounds::c_bounds_interval(b, beta);
    return {sunrise::l_minus() * lower, sunrise::l_plus() * upper};
}

std::vector<ComparisonRow> legacy_comparison() {
    const double lm = sunrise::l_minus();
    const double lp = sunrise::l_plus();
    const double ep5 = epsearch::ep5_objective(
        epsearch::KreinProfile({5.0, 0.0, -1.0}));
    const double ep4 = epsearch::ep4_objective(
        epsearch::KreinProfile({10.0, 0.0, 2.0, 0.0, -35.0}));
    return {
        {"prior lower slope (Goldston-Gonek)", 0.153},
        {"prior upper slope (Goldston-Gonek)", 10.824},
        {"prior length-2 window lower", 0.307},
        {"prior length-2 window upper", 21.647},
        {"lower slope, Dirichlet route", lm * (1.0 + kernels::c0() / 3.0)},
        {"upper slope, triangle route", 4.0 / 3.0 * lp},
        {"lower slope, refined", lm * ep5},
        {"upper slope, refined", lp * ep4},
        {"length-2 window lower", 2.0 / 3.0 * lm},
        {"length-2 window upper", 15.0 / 4.0 * lp},
    };
}

}  // namespace paircorr::jbounds
