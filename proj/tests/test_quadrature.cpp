#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "casimir/quadrature.hpp"
#include "doctest.h"

using namespace casimir;

static const double kPi = 3.14159265358979323846;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
    for (int n : {2, 8, 16, 64}) {
        const auto& rule = quad::gauss_legendre(n);
        REQUIRE(rule.x.size() == static_cast<size_t>(n));
        double w_sum = 0.0, x_moment = 0.0, high = 0.0;
        for (int i = 0; i < n; ++i) {
            w_sum += rule.w[i];
            x_moment += rule.w[i] * rule.x[i];
            high += rule.w[i] * std::pow(rule.x[i], 2 * n - 2);
        }
        CHECK(w_sum == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(x_moment == doctest::Approx(0.0).epsilon(1e-14));
        // Exact moment of x^{2n-2} on [-1,1] is 2/(2n-1).
        CHECK(high == doctest::Approx(2.0 / (2.0 * n - 1.0)).epsilon(1e-13));
    }
}

TEST_CASE("panel integral of smooth functions") {
    CHECK(quad::panel([](double x) { return std::sin(x); }, 0.0, kPi, 32) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(quad::panel([](double x) { return x * x * x; }, -1.0, 2.0, 8) ==
          doctest::Approx(15.0 / 4.0).epsilon(1e-14));
}

TEST_CASE("panel_adaptive meets requested tolerance") {
    auto r = quad::panel_adaptive([](double x) { return std::exp(-x * x); }, 0.0, 5.0, 1e-12);
    CHECK(r.value == doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-12));
    CHECK(r.error < 1e-10);
}

TEST_CASE("integrate_decaying handles exponential decay") {
    auto r1 = quad::integrate_decaying([](double y) { return std::exp(-y); }, 1e-12);
    CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-11));
    auto r2 = quad::integrate_decaying([](double y) { return y * std::exp(-2.0 * y); }, 1e-12);
    CHECK(r2.value == doctest::Approx(0.25).epsilon(1e-11));
    // Bose-type kernel: Int y^3/(e^y - 1) = pi^4/15.
    auto r3 = quad::integrate_decaying(
        [](double y) { return y * y * y / std::expm1(y); }, 1e-12);
    CHECK(r3.value == doctest::Approx(std::pow(kPi, 4) / 15.0).epsilon(1e-11));
}

TEST_CASE("integrate_decaying handles integrable log singularity at zero") {
    // Int_0^inf log(1 - e^{-2y}) dy = -pi^2/12.
    auto r = quad::integrate_decaying(
        [](double y) { return std::log(-std::expm1(-2.0 * y)); }, 1e-12);
    CHECK(r.value == doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-10));
    // Power singularity: Int_0^inf y^{-1/2} e^{-y} dy = sqrt(pi).
    auto r2 = quad::integrate_decaying(
        [](double y) { return std::exp(-y) / std::sqrt(y); }, 1e-12);
    CHECK(r2.value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-9));
}

TEST_CASE("integrate_finite resolves localized features") {
    auto r = quad::integrate_finite(
        [](double x) { return 1.0 / (1e-4 + (x - 0.3) * (x - 0.3)); }, 0.0, 1.0, 1e-10);
    double exact = (std::atan(0.7 / 1e-2) + std::atan(0.3 / 1e-2)) / 1e-2;
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-9));
}
