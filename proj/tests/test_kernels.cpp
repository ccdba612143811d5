#include "paircorr/kernels.hpp"
#include "paircorr/numerics.hpp"

#include <doctest.h>

#include <cmath>

using namespace paircorr;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("fejer kernel values") {
    CHECK(kernels::fejer_eval(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(kernels::fejer_ft(1.0, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(kernels::fejer_eval(1.0, 0.5) == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-14));
    CHECK(kernels::fejer_eval(0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(kernels::fejer_eval(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(kernels::fejer_ft(1.5, 0.0), std::invalid_argument);
}

TEST_CASE("rho of the fejer kernel") {
    CHECK(kernels::rho_fejer(1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(kernels::rho_fejer(0.5) == doctest::Approx(13.0 / 12.0).epsilon(1e-15));
    CHECK(kernels::rho_fejer(1e-8) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("triangle partition of unity") {
    for (int i = 0; i <= 1000; ++i) {
        const double a = -3.0 + 6.0 * i / 1000.0;
        double s = 0.0;
        for (int k = -4; k <= 4; ++k) s += kernels::fejer_ft(1.0, a + k);
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("dirichlet kernel values") {
    CHECK(kernels::dirichlet_eval(2, 0.0) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(kernels::dirichlet_eval(1, kPi) == doctest::Approx(-1.0).epsilon(1e-12));
    for (double x : {0.3, 1.0, 2.7, 6.0})
        CHECK(kernels::dirichlet_eval(0, x) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("dirichlet closed form equals the cosine sum") {
    for (int n : {1, 3, 8, 17}) {
        for (int i = 0; i <= 200; ++i) {
            const double x = -8.0 + 16.0 * i / 200.0;
            double s = 1.0;
            for (int k = 1; k <= n; ++k) s += 2.0 * std::cos(k * x);
            CHECK(kernels::dirichlet_eval(n, x) == doctest::Approx(s).epsilon(1e-10));
        }
    }
}

TEST_CASE("dirichlet evaluation near the removable point") {
    for (int n : {2, 5, 40}) {
        for (double x : {1e-5, 5e-5, 2e-4, 1e-3}) {
            double s = 1.0;
            for (int k = 1; k <= n; ++k) s += 2.0 * std::cos(k * x);
            CHECK(kernels::dirichlet_eval(n, x) == doctest::Approx(s).epsilon(1e-12));
            CHECK(kernels::dirichlet_eval(n, 2.0 * kPi + x) == doctest::Approx(s).epsilon(1e-9));
        }
    }
}

TEST_CASE("dirichlet minima") {
    CHECK(kernels::dirichlet_min(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(kernels::dirichlet_min(1) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(kernels::dirichlet_min(2) == doctest::Approx(-1.25).epsilon(1e-10));
    CHECK(kernels::dirichlet_min(3) ==
          doctest::Approx(-(14.0 * std::sqrt(7.0) + 7.0) / 27.0).epsilon(1e-10));
    CHECK(kernels::dirichlet_min(4) == doctest::Approx(-2.03911).epsilon(1e-5));
    CHECK_THROWS_AS(kernels::dirichlet_min(-1), std::invalid_argument);
}

TEST_CASE("c0 and its argmin") {
    CHECK(kernels::c0() == doctest::Approx(-0.21723).epsilon(1e-5));
    CHECK(kernels::x1() == doctest::Approx(4.49340).epsilon(1e-5));
    CHECK(std::sin(kernels::x1()) / kernels::x1() - kernels::c0() ==
          doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("appendix envelope holds for n = 1..500") {
    for (int n = 1; n <= 500; ++n) {
        auto env = kernels::appendix_a_envelope(n);
        CHECK(env.sandwich_ok);
        const double ratio = kernels::dirichlet_min(n) / n;
        CHECK(ratio >= env.lower - 1e-12);
        CHECK(ratio <= env.upper + 1e-12);
    }
}

TEST_CASE("envelope edge cases") {
    auto env1 = kernels::appendix_a_envelope(1);
    CHECK(env1.lower <= -1.0);
    CHECK(env1.upper >= -1.0);
    auto env100 = kernels::appendix_a_envelope(100);
    CHECK(env100.upper - env100.lower ==
          doctest::Approx((2.0 * kPi - 1.0 + 5.4935) / 100.0).epsilon(1e-12));
    CHECK_THROWS_AS(kernels::appendix_a_envelope(0), std::invalid_argument);
}

TEST_CASE("upper bound is witnessed at x1/n") {
    for (int n : {1, 2, 5, 20, 100}) {
        const double witness = kernels::dirichlet_eval(n, kernels::x1() / n);
        CHECK(witness <= n * (2.0 * kernels::c0() + 5.4935 / n) + 1e-9);
    }
}

TEST_CASE("ratio m(n)/n approaches 2 c0") {
    for (int n : {10, 50, 200, 500}) {
        CHECK(std::fabs(kernels::dirichlet_min(n) / n - 2.0 * kernels::c0()) <=
              5.4935 / n + 1e-12);
    }
}

TEST_CASE("poisson kernel and transform") {
    CHECK(kernels::poisson_eval(2.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(kernels::poisson_ft(1.0, 0.0) == doctest::Approx(kPi).epsilon(1e-14));
    // transform pair: quadrature of h_b against cos recovers pi e^{-2 pi b alpha}
    const double b = 0.7, alpha = 0.3;
    auto f = [b, alpha](double x) {
        return kernels::poisson_eval(b, x) * std::cos(2.0 * kPi * alpha * x);
    };
    double got = num::integrate(f, 0.0, std::numeric_limits<double>::infinity(),
                                {1e-11, 1e-11, 200});
    CHECK(2.0 * got == doctest::Approx(kernels::poisson_ft(b, alpha)).epsilon(1e-6));
}

TEST_CASE("poisson majorant dominates the kernel") {
    for (double b : {0.1, 1.0, 5.0}) {
        for (int i = 0; i <= 10000; ++i) {
            const double x = -50.0 + 100.0 * i / 10000.0;
            CHECK(kernels::poisson_majorant_eval(b, x) >= kernels::poisson_eval(b, x));
        }
    }
}

TEST_CASE("majorant transform: support edge and excess mass") {
    for (double b : {0.2, 1.0, 5.0}) {
        CHECK(kernels::poisson_majorant_ft(b, 1.0) == 0.0);
        CHECK(kernels::poisson_majorant_ft(b, -1.0) == 0.0);
        CHECK(kernels::poisson_majorant_ft(b, 1.5) == 0.0);
    }
    // excess integral m-hat(0) - pi is positive and vanishes as b grows
    double prev = kernels::poisson_majorant_ft(1.0, 0.0) - kPi;
    CHECK(prev > 0.0);
    for (double b : {2.0, 5.0, 10.0}) {
        const double excess = kernels::poisson_majorant_ft(b, 0.0) - kPi;
        CHECK(excess > 0.0);
        CHECK(excess < prev);
        prev = excess;
    }
    CHECK(kernels::poisson_majorant_ft(20.0, 0.0) - kPi == doctest::Approx(0.0).epsilon(1e-10));
    // no overflow far out
    CHECK(std::isfinite(kernels::poisson_majorant_ft(500.0, 0.5)));
}

TEST_CASE("majorant transform is non-negative and non-increasing on [0, 1]") {
    for (double b : {0.1, 1.0, 5.0}) {
        double prev = kernels::poisson_majorant_ft(b, 0.0);
        for (int i = 1; i <= 1000; ++i) {
            const double cur = kernels::poisson_majorant_ft(b, i / 1000.0);
            CHECK(cur >= 0.0);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("majorant transform matches the sinh form") {
    for (double b : {0.3, 1.0, 4.0}) {
        for (double a : {0.0, 0.25, 0.7, 0.99}) {
            const double sh = std::sinh(kPi * b);
            const double want = kPi / 2.0 * std::sinh(2.0 * kPi * b * (1.0 - a)) / (sh * sh);
            CHECK(kernels::poisson_majorant_ft(b, a) == doctest::Approx(want).epsilon(1e-12));
        }
    }
}
