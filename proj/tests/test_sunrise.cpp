#include "paircorr/kernels.hpp"
#include "paircorr/sunrise.hpp"

#include <doctest.h>

#include <cmath>

using namespace paircorr;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("decomposition anchors") {
    auto dec = sunrise::build_decomposition(5);
    CHECK(dec.maxima[0] == 0.0);
    CHECK(dec.maxima[1] == doctest::Approx(4.49340).epsilon(1e-5));
    CHECK(dec.maxima[1] == doctest::Approx(kernels::x1()).epsilon(1e-7));
    CHECK(dec.maxima[2] == doctest::Approx(7.72525).epsilon(1e-5));
    CHECK_THROWS_AS(sunrise::build_decomposition(0), std::invalid_argument);
}

TEST_CASE("maxima solve tan x = x and crossings hit the level") {
    auto dec = sunrise::build_decomposition(40);
    for (int k = 1; k <= 40; ++k) {
        const double m = dec.maxima[k];
        CHECK(std::fabs(std::tan(m) - m) / m < 1e-9);
        CHECK(kernels::sinc2(dec.crossings[k - 1]) ==
              doctest::Approx(dec.levels[k - 1]).epsilon(1e-12));
        CHECK(dec.crossings[k - 1] > dec.maxima[k - 1]);
        CHECK(dec.crossings[k - 1] < m);
    }
}

TEST_CASE("g_minus values") {
    CHECK(sunrise::g_minus(kPi / 2.0) ==
          doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-14));
    CHECK(sunrise::g_minus(4.0) == 0.0);
    CHECK(sunrise::g_minus(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(sunrise::g_minus(-1.0), std::invalid_argument);
}

TEST_CASE("pointwise sandwich g- <= sinc^2 <= g+") {
    auto dec = sunrise::build_decomposition(60);
    const double top = dec.maxima.back();
    for (int i = 0; i <= 10000; ++i) {
        const double x = top * i / 10000.0;
        const double s = kernels::sinc2(x);
        CHECK(sunrise::g_minus(x) <= s + 1e-12);
        CHECK(sunrise::g_plus(x, dec) >= s - 1e-12);
        CHECK(sunrise::g_minus(x) >= 0.0);
    }
}

TEST_CASE("both envelopes are non-increasing") {
    auto dec = sunrise::build_decomposition(60);
    const double top = dec.maxima.back();
    double pm = sunrise::g_minus(0.0), pp = sunrise::g_plus(0.0, dec);
    for (int i = 1; i <= 20000; ++i) {
        const double x = top * i / 20000.0;
        const double gm = sunrise::g_minus(x), gp = sunrise::g_plus(x, dec);
        CHECK(gm <= pm + 1e-12);
        CHECK(gp <= pp + 1e-12);
        pm = gm;
        pp = gp;
    }
}

TEST_CASE("g_plus stays under min(1, 1/x^2)") {
    auto dec = sunrise::build_decomposition(60);
    for (int i = 1; i <= 5000; ++i) {
        const double x = 0.1 + i * 0.05;
        CHECK(sunrise::g_plus(x, dec) <= std::min(1.0, 1.0 / (x * x)) + 1e-12);
    }
}

TEST_CASE("beyond-depth evaluation falls back to the envelope") {
    auto dec = sunrise::build_decomposition(3);
    bool exact = true;
    const double x = dec.maxima.back() + 2.0;
    CHECK(sunrise::g_plus(x, dec, &exact) == doctest::Approx(1.0 / (x * x)));
    CHECK_FALSE(exact);
    sunrise::g_plus(1.0, dec, &exact);
    CHECK(exact);
}

TEST_CASE("L- value") {
    CHECK(sunrise::l_minus() == doctest::Approx(0.9028).epsilon(5e-4));
}

TEST_CASE("L+ value and the monotone sandwich") {
    const double lp = sunrise::l_plus();
    CHECK(lp == doctest::Approx(1.0736).epsilon(5e-4));
    CHECK(sunrise::l_minus() <= 1.0);
    CHECK(lp >= 1.0);
}

TEST_CASE("L+ estimates shrink with depth and stabilize") {
    const double l100 = sunrise::l_plus(100);
    const double l200 = sunrise::l_plus(200);
    const double l400 = sunrise::l_plus(400);
    const double l800 = sunrise::l_plus(800);
    CHECK(l100 >= l200);
    CHECK(l200 >= l400);
    CHECK(l400 >= l800);
    CHECK(std::fabs(l200 - l400) < 1e-6);
}
