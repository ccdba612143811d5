#include "paircorr/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace paircorr;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("find_root: sqrt(2)") {
    auto r = num::find_root([](double x) { return x * x - 2.0; }, {1.0, 2.0});
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("find_root: pi theta tan(pi theta) = 1") {
    auto r = num::find_root([](double t) { return kPi * t * std::tan(kPi * t) - 1.0; },
                            {0.01, 0.49});
    CHECK(r == doctest::Approx(0.27385).epsilon(1e-5));
}

TEST_CASE("find_root: 1/(lambda-1) = 1/2") {
    auto r = num::find_root([](double l) { return 1.0 / (l - 1.0) - 0.5; }, {1.5, 4.0});
    CHECK(r == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("find_root: errors") {
    CHECK_THROWS_AS(num::find_root([](double x) { return x * x + 1.0; }, {-1.0, 1.0}),
                    num::BracketError);
    CHECK_THROWS_AS(num::find_root([](double x) { return x; }, {-1.0, 1.0}, {1e-15, 0.0, 2}),
                    num::ConvergenceError);
}

TEST_CASE("find_root: residual stays small for smooth functions") {
    for (double shift : {0.1, 0.7, 2.5, 9.0}) {
        auto f = [shift](double x) { return std::exp(x) - shift - 1.0; };
        const double r = num::find_root(f, {-5.0, 5.0});
        CHECK(std::fabs(f(r)) < 1e-9);
    }
}

TEST_CASE("integrate: polynomials up to degree 6 are exact") {
    for (int deg = 0; deg <= 6; ++deg) {
        auto f = [deg](double x) { return std::pow(x, deg); };
        const double got = num::integrate(f, -1.0, 2.0);
        const double want = (std::pow(2.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("integrate: (2/pi) int_0^pi sinc^2 = 0.9028...") {
    auto f = [](double x) { return x == 0.0 ? 1.0 : std::pow(std::sin(x) / x, 2); };
    CHECK(2.0 / kPi * num::integrate(f, 0.0, kPi) == doctest::Approx(0.9028).epsilon(5e-4));
}

TEST_CASE("integrate: breakpoints handle |alpha|") {
    auto f = [](double a) { return std::fabs(a) * (1.0 - std::fabs(a)); };
    const double got = num::integrate(f, -1.0, 1.0, {}, {0.0});
    CHECK(got == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("integrate: semi-infinite sinc^2 reaches pi/2") {
    auto f = [](double x) { return x == 0.0 ? 1.0 : std::pow(std::sin(x) / x, 2); };
    const double got = num::integrate(f, 0.0, kInf, {1e-9, 1e-9, 200});
    CHECK(got == doctest::Approx(kPi / 2.0).epsilon(2e-5));
}

TEST_CASE("integrate: semi-infinite exponential decay is accurate") {
    const double got = num::integrate([](double x) { return std::exp(-2.0 * x); }, 0.0, kInf);
    CHECK(got == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("minimize_1d: quadratic") {
    auto r = num::minimize_1d([](double x) { return (x - 1.0) * (x - 1.0); }, 0.0, 3.0);
    CHECK(r.x == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("minimize_1d: sin x / x on [pi, 2 pi]") {
    auto r = num::minimize_1d([](double x) { return std::sin(x) / x; }, kPi, 2.0 * kPi);
    CHECK(r.x == doctest::Approx(4.49340).epsilon(1e-5));
    CHECK(r.value == doctest::Approx(-0.21723).epsilon(1e-5));
}

TEST_CASE("minimize_1d: errors and unimodal bracketing") {
    CHECK_THROWS_AS(num::minimize_1d([](double x) { return x; }, 1.0, 1.0),
                    std::invalid_argument);
    for (double c : {0.3, 1.8, 2.9}) {
        auto r = num::minimize_1d([c](double x) { return std::cosh(x - c); }, 0.0, 3.0);
        CHECK(r.x == doctest::Approx(c).epsilon(1e-6));
    }
}

TEST_CASE("minimize_simplex: quadratic bowl") {
    auto f = [](const std::vector<double>& v) {
        return v[0] * v[0] + v[1] * v[1];
    };
    auto r = num::minimize_simplex(f, {1.0, 1.0}, 0.5, {1e-14, 1e-13, 500});
    CHECK(r.value <= 1e-8);
    CHECK(r.value <= f({1.0, 1.0}));
}

TEST_CASE("minimize_simplex: fixed seed reproduces the trace bitwise") {
    auto f = [](const std::vector<double>& v) {
        return std::pow(v[0] - 0.3, 2) + std::pow(v[1] + 0.8, 4) + std::sin(v[0] * v[1]) + 1.5;
    };
    auto a = num::minimize_simplex(f, {2.0, -2.0}, 1.0, {1e-12, 1e-12, 300}, 42);
    auto b = num::minimize_simplex(f, {2.0, -2.0}, 1.0, {1e-12, 1e-12, 300}, 42);
    CHECK(a.trace == b.trace);
    CHECK(a.x == b.x);
    CHECK(a.value == b.value);
}

TEST_CASE("minimize_simplex: non-finite objective aborts with trace") {
    auto f = [](const std::vector<double>& v) {
        return v[0] < -1.0 ? std::numeric_limits<double>::quiet_NaN() : (v[0] - 5.0) * v[0];
    };
    CHECK_THROWS_AS(num::minimize_simplex(f, {0.0}, 10.0, {1e-12, 1e-12, 300}),
                    num::SimplexError);
}

TEST_CASE("tolerance validation") {
    CHECK_THROWS_AS(num::Tolerance{0.0, 0.0, 10}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(num::Tolerance{1e-9, 0.0, 0}.validate(), std::invalid_argument);
}
