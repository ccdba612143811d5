#include "paircorr/logderiv.hpp"
#include "paircorr/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace paircorr::logderiv {

namespace {

const double kSqrt3 = std::sqrt(3.0);

void require_positive(double a, const char* who) {
    if (!(a > 0.0)) throw std::invalid_argument(std::string(who) + ": a must be > 0");
}

// (1 - (1+2a) e^{-2a}) / (4a^2), the shared leading term; expm1 keeps the
// small-a cancellation exact
double shared_leading(double a) {
    const double num = -std::expm1(-2.0 * a) - 2.0 * a * std::exp(-2.0 * a);
    return num / (4.0 * a * a);
}

}  // namespace

namespace detail {

double u_plus_closed(double a) {
    const double coth = 1.0 / std::tanh(a);
    const double csch = 1.0 / std::sinh(a);
    return coth / (4.0 * a * a) - csch * csch / (4.0 * a) + coth / 2.0 - 0.5;
}

double u_plus_series(double a) {
    // Laurent expansion about a = 0; the closed form loses ~9 digits to
    // cancellation by a = 1e-3
    const double a2 = a * a;
    return 2.0 / (3.0 * a) - 0.5 +
           a * (13.0 / 90.0 + a2 * (-1.0 / 126.0 + a2 * (1.0 / 1575.0 - a2 * 7.0 / 133650.0)));
}

}  // namespace detail

double u_minus(double a) {
    require_positive(a, "u_minus");
    return shared_leading(a) +
           (0.5 / a + 1.0 / kSqrt3) * std::exp(-2.0 * a * (1.0 + 1.0 / kSqrt3));
}

double u_plus(double a) {
    require_positive(a, "u_plus");
    return a < 1e-2 ? detail::u_plus_series(a) : detail::u_plus_closed(a);
}

double v_minus(double a) {
    require_positive(a, "v_minus");
    return shared_leading(a) + 2.0 / (3.0 * (std::exp(6.0 * a) - std::exp(2.0 * a)));
}

double v_plus(double a) {
    require_positive(a, "v_plus");
    return shared_leading(a) + 29.0 / (12.0 * std::expm1(2.0 * a));
}

std::pair<double, double> g_curves(double a) {
    require_positive(a, "g_curves");
    const double den = -std::expm1(-2.0 * a) / (4.0 * a * a);
    return {u_minus(a) / den, u_plus(a) / den};
}

Extremum g_minus_minimum() {
    auto r = num::minimize_1d([](double a) { return g_curves(a).first; }, 0.05, 6.0,
                              {1e-12, 0.0, 400}, 256);
    return {r.x, r.value};
}

Extremum g_plus_maximum() {
    auto r = num::minimize_1d([](double a) { return -g_curves(a).second; }, 0.05, 6.0,
                              {1e-12, 0.0, 400}, 256);
    return {r.x, -r.value};
}

double g_minus_crossing(double level) {
    return num::find_root([level](double a) { return g_curves(a).first - level; },
                          {2.0, 6.5}, {1e-12, 1e-12, 200});
}

double g_plus_crossing(double level) {
    return num::find_root([level](double a) { return g_curves(a).second - level; },
                          {2.0, 8.0}, {1e-12, 1e-12, 200});
}

double frak_i_lower(double xi) {
    if (!(xi >= 1.0)) throw std::invalid_argument("frak_i_lower: xi must be >= 1");
    return xi * xi / 2.0 - xi + 1.0 / 3.0;
}

std::pair<double, double> frak_i_exp_identity(double a) {
    require_positive(a, "frak_i_exp_identity");
    const double c = 1.0 + 1.0 / kSqrt3;
    const double closed = (0.5 / a + 1.0 / kSqrt3) * std::exp(-2.0 * a * c);
    const double quad =
        4.0 * a * a *
        num::integrate(
            [a](double x) { return (x * x / 2.0 - x + 1.0 / 3.0) * std::exp(-2.0 * a * x); },
            c, std::numeric_limits<double>::infinity(), {1e-14, 1e-13, 200});
    return {closed, quad};
}

}  // namespace paircorr::logderiv
