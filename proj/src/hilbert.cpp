#include "paircorr/hilbert.hpp"
#include "paircorr/kernels.hpp"
#include "paircorr/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace paircorr::hilbert {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sinc(double y) {
    if (std::fabs(y) < 1e-8) return 1.0 - (kPi * y) * (kPi * y) / 6.0;
    return std::sin(kPi * y) / (kPi * y);
}

double multiplier_denominator(long k, double lambda) {
    const double odd = 2.0 * k - 1.0;
    return odd * lambda - 1.0 / odd;
}

// psi'(z) for large z; all uses have z >= 50
double trigamma(double z) {
    const double z2 = z * z;
    return 1.0 / z + 1.0 / (2.0 * z2) + 1.0 / (6.0 * z2 * z) - 1.0 / (30.0 * z2 * z2 * z) +
           1.0 / (42.0 * z2 * z2 * z2 * z);
}

// zeta(4, z) = sum_{i>=0} (z+i)^{-4} for large z
double hurwitz4(double z) {
    const double z3 = z * z * z;
    return 1.0 / (3.0 * z3) + 1.0 / (2.0 * z3 * z) + 1.0 / (3.0 * z3 * z * z);
}

// zeta(6, z) for large z
double hurwitz6(double z) {
    const double z5 = z * z * z * z * z;
    return 1.0 / (5.0 * z5) + 1.0 / (2.0 * z5 * z);
}

double closed_form_coefficient_sum(double lambda) {
    const double u = kPi / (2.0 * std::sqrt(lambda));
    const double sec = 1.0 / std::cos(u);
    return (kPi * kPi * sec * sec + 2.0 * kPi * std::sqrt(lambda) * std::tan(u)) /
           (16.0 * lambda * lambda);
}

std::vector<double> coefficients(double lambda, long count, double coeff_sum) {
    // a_k = a_1 (lambda-1)/D_k with sum a_k^2 = 1/2
    const double a1_scale = 1.0 / std::sqrt(2.0 * coeff_sum);
    std::vector<double> a(count);
    for (long k = 1; k <= count; ++k)
        a[k - 1] = a1_scale / multiplier_denominator(k, lambda);
    return a;
}

}  // namespace

LevelSolution solve_level(int n_level) {
    if (n_level < 1) throw std::invalid_argument("solve_level: N must be >= 1");
    auto constraint = [n_level](double lambda) {
        double s = 0.0;
        for (long n = n_level; n >= 1; --n) {
            const double odd = 2.0 * n - 1.0;
            s += 1.0 / (odd * odd * lambda - 1.0);
        }
        return s - 0.5;
    };
    const double lambda =
        num::find_root(constraint, {1.0 + 1e-9, 4.0}, {1e-15, 1e-15, 300});
    double coeff_sum = 0.0;
    for (long k = 1; k <= n_level; ++k) {
        const double d = multiplier_denominator(k, lambda);
        coeff_sum += 1.0 / (d * d);
    }
    return {n_level, lambda, lambda / 2.0, coefficients(lambda, n_level, coeff_sum)};
}

LevelSolution solve_level_infinity() {
    auto constraint = [](double lambda) {
        const double r = std::sqrt(lambda);
        return kPi / (4.0 * r) * std::tan(kPi / (2.0 * r)) - 0.5;
    };
    const double lambda =
        num::find_root(constraint, {1.0 + 1e-9, 4.0}, {1e-15, 1e-15, 300});
    return {0, lambda, lambda / 2.0,
            coefficients(lambda, 64, closed_form_coefficient_sum(lambda))};
}

std::pair<double, double> series_identity_check(double lambda, long terms) {
    if (!(lambda > 1.0))
        throw std::invalid_argument("series_identity_check: lambda must be > 1");
    if (terms < 100) throw std::invalid_argument("series_identity_check: too few terms");
    num::KahanSum sum;
    for (long k = terms; k >= 1; --k) {
        const double d = multiplier_denominator(k, lambda);
        sum.add(1.0 / (d * d));
    }
    // tail of 1/D_k^2 = 1/((2k-1)^2 lambda^2) (1 + 2x + 3x^2 + ...),
    // x = ((2k-1)^2 lambda)^{-1}
    const double z = terms + 0.5;
    const double s2 = 0.25 * trigamma(z);
    const double s4 = hurwitz4(z) / 16.0;
    const double tail = s2 / (lambda * lambda) + 2.0 * s4 / (lambda * lambda * lambda);
    return {sum.value() + tail, closed_form_coefficient_sum(lambda)};
}

EmbeddingConstants embedding_constants() {
    EmbeddingConstants ec{};
    ec.lambda_inf = solve_level_infinity().lambda;
    ec.theta = 0.5 / std::sqrt(ec.lambda_inf);
    // variational route: u tan(u) = 1 determines eta = 1/(2u^2) on its own
    const double u = num::find_root([](double t) { return t * std::tan(t) - 1.0; },
                                    {0.1, 1.5}, {1e-15, 1e-15, 300});
    ec.eta = 1.0 / (2.0 * u * u);
    ec.d_squared = 1.0 - 2.0 * ec.lambda_inf / (kPi * kPi);
    if (std::fabs(ec.d_squared - (1.0 - ec.eta)) > 1e-10)
        throw std::logic_error("embedding_constants: interpolation and variational routes disagree");
    if (std::fabs(kPi * ec.theta * std::tan(kPi * ec.theta) - 1.0) > 1e-12)
        throw std::logic_error("embedding_constants: theta equation violated");
    return ec;
}

double extremal_f(double z) {
    static const double theta = 0.5 / std::sqrt(solve_level_infinity().lambda);
    return sinc(z + theta) + sinc(z - theta);
}

double ep9_functional(const std::vector<double>& a) {
    num::KahanSum lin, quad;
    for (size_t k = a.size(); k-- > 0;) {
        const double odd = 2.0 * (double)(k + 1) - 1.0;
        lin.add(a[k] / odd);
        quad.add(a[k] * a[k] / (odd * odd));
    }
    return 2.0 * lin.value() * lin.value() + quad.value();
}

ExtremalityReport verify_extremality(long cutoff) {
    if (cutoff < 1000) throw std::invalid_argument("verify_extremality: cutoff too small");
    const auto ec = embedding_constants();
    const double theta = ec.theta;
    const double cos2 = std::cos(kPi * theta) * std::cos(kPi * theta);

    // ||f||_2^2 in closed form: two unit sinc bumps plus the overlap
    const double norm2 = 2.0 + 2.0 * sinc(2.0 * theta);

    num::KahanSum pw, weighted;
    for (long n = cutoff; n >= 1; --n) {
        const double x = n - 0.5;
        const double v = extremal_f(x);
        pw.add(v * v);
        weighted.add(v * v / (x * x));
    }
    // |f(x)|^2 = (4 cos^2(pi theta)/pi^2) (1/x^2 + 2 theta^2/x^4 + 3 theta^4/x^6 + ...);
    // the tails cover both signs of n, hence the factor 2
    const double z = cutoff + 0.5;
    const double c_tail = 4.0 * cos2 / (kPi * kPi);
    const double tail_pw =
        2.0 * c_tail * (trigamma(z) + 2.0 * theta * theta * hurwitz4(z));
    const double tail_weighted =
        2.0 * c_tail * (hurwitz4(z) + 2.0 * theta * theta * hurwitz6(z));

    ExtremalityReport rep{};
    rep.norm_pw = (2.0 * pw.value() + tail_pw) / norm2;

    const double f0 = extremal_f(0.0);
    rep.ratio_sampling = 1.0 - (f0 * f0 / 2.0 +
                                (2.0 * weighted.value() + tail_weighted) / (2.0 * kPi * kPi)) /
                                   norm2;

    // direct quadrature over [-R, R] in unit chunks plus the analytic tail
    const long R = 1000;
    num::KahanSum quad;
    auto integrand = [](double x) {
        const double v = extremal_f(x);
        return v * v * (1.0 - kernels::sinc2(kPi * x));
    };
    for (long j = -R; j < R; ++j)
        quad.add(num::integrate(integrand, (double)j, (double)j + 1.0, {1e-13, 1e-12, 200}));
    const double tail_quad = c_tail / (double)R;
    rep.ratio_quadrature = (quad.value() + tail_quad) / norm2;
    return rep;
}

}  // namespace paircorr::hilbert
