#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "doctest.h"

using namespace casimir;

static const double kPi = 3.14159265358979323846;

TEST_CASE("closed-form energy and beta values") {
    CHECK(e_pfa_closed(0.0) == doctest::Approx(-std::pow(kPi, 3) / 720.0).epsilon(1e-15));
    CHECK(e_pfa_closed(kPi / 2.0) ==
          doctest::Approx(7.0 * std::pow(kPi, 3) / 5760.0).epsilon(1e-15));
    auto b0 = beta_coefficients(0.0, 0.0);
    CHECK(b0.beta_diff == doctest::Approx(-15.0 / (kPi * kPi)).epsilon(1e-15));
    CHECK(b0.beta_geo == doctest::Approx(1.0 / 3.0 - 5.0 / (kPi * kPi)).epsilon(1e-14));
    CHECK(b0.beta1 == doctest::Approx(1.0 / 3.0 - 20.0 / (kPi * kPi)).epsilon(1e-14));
    auto b0u = beta_coefficients(0.0, 0.25);
    CHECK(b0u.beta1 ==
          doctest::Approx(1.0 / 3.0 - 20.0 / (kPi * kPi) - 0.25).epsilon(1e-14));
    auto bb = beta_coefficients(kPi / 2.0, 0.0);
    CHECK(bb.beta1 == doctest::Approx(1.0 / 3.0 - 80.0 / (7.0 * kPi * kPi)).epsilon(1e-14));
}

TEST_CASE("delta_crit roots the PFA quartic") {
    double d = delta_crit();
    double q = std::pow(kPi, 4) - 30.0 * d * d * (kPi - d) * (kPi - d);
    CHECK(std::fabs(q) < 1e-12 * std::pow(kPi, 4));
    // Radical closed form of the same root.
    double closed = kPi / 2.0 * (1.0 - std::sqrt(1.0 - 4.0 / std::sqrt(30.0)));
    CHECK(d == doctest::Approx(closed).epsilon(1e-14));
    CHECK_THROWS_AS(beta_coefficients(d, 0.0), NearCriticalError);
}

TEST_CASE("E1 at delta_crit is u-independent") {
    double d = delta_crit();
    double e_ref = e1_closed(d, 0.0);
    for (double u : {0.1, 0.25}) {
        CHECK(std::fabs(e1_closed(d, u) - e_ref) < 1e-12);
    }
    // Away from the critical angle E1 is linear in u with slope -quartic/720pi.
    double d2 = 0.3;
    double slope = (e1_closed(d2, 0.25) - e1_closed(d2, 0.0)) / 0.25;
    double quartic = std::pow(kPi, 4) - 30.0 * d2 * d2 * (kPi - d2) * (kPi - d2);
    CHECK(slope == doctest::Approx(quartic / (720.0 * kPi)).epsilon(1e-13));
}

TEST_CASE("E1 product identity") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> Ud(0.0, kPi / 2.0);
    std::uniform_real_distribution<double> Uu(0.0, 0.25);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        double d = Ud(rng), u = Uu(rng);
        double quartic = std::pow(kPi, 4) - 30.0 * d * d * (kPi - d) * (kPi - d);
        if (std::fabs(quartic) < 1e-8 * std::pow(kPi, 4)) continue;
        auto b = beta_coefficients(d, u);
        CHECK(std::fabs(e_pfa_closed(d) * b.beta1 - e1_closed(d, u)) < 1e-12);
        ++checked;
    }
    CHECK(checked > 990);
}

TEST_CASE("Bessel round-trip sum limits") {
    // z * B(z) -> pi^4/720 as z -> 0.
    double z = 1e-6;
    BesselSumOptions direct;
    direct.force_direct = true;
    double b = bessel_roundtrip_sum(z, direct);
    CHECK(z * b == doctest::Approx(std::pow(kPi, 4) / 720.0).epsilon(1e-2));
    // After subtracting the constant term the agreement tightens.
    double remainder = b - std::pow(kPi, 4) / (720.0 * z) + kPi * kPi / 12.0;
    CHECK(remainder == doctest::Approx(2.0 * kPi * std::sqrt(z) / 3.0).epsilon(0.01));
    CHECK_THROWS_AS(bessel_roundtrip_sum(-1.0), std::domain_error);
}

TEST_CASE("Bessel sum branches agree in the overlap region") {
    BesselSumOptions direct;
    direct.force_direct = true;
    for (double z : {3e-6, 1e-5, 3e-5}) {
        double d = bessel_roundtrip_sum(z, direct);
        double a = bessel_roundtrip_sum_asymptotic(z);
        CHECK(d == doctest::Approx(a).epsilon(1e-6));
    }
}

TEST_CASE("polarization weights") {
    for (double t : {0.1, 0.5, 1.0}) {
        auto s = sigma_pair(t);
        CHECK(s.sigma_te + s.sigma_tm == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(s.sigma_te == doctest::Approx((2.0 - t * t) / 4.0).epsilon(1e-15));
    }
    CHECK_THROWS_AS(sigma_pair(0.0), std::domain_error);
    CHECK_THROWS_AS(sigma_pair(1.5), std::domain_error);
}

TEST_CASE("resummed energy ratio behaves like the three-term asymptotic") {
    double beta32 = 15.0 * (10.0 + 3.0 * kPi) / (4.0 * std::pow(kPi, 3));
    for (double x : {1e-4, 1e-3}) {
        double r = ntlo_energy_ratio(x);
        double three = 1.0 - 15.0 / (kPi * kPi) * x + beta32 * std::pow(x, 1.5);
        CHECK(r == doctest::Approx(three).epsilon(5.0 * x));  // x^2-level agreement
    }
    CHECK_THROWS_AS(ntlo_energy_ratio(0.0), std::domain_error);
}

TEST_CASE("x^{3/2} coefficient extraction") {
    std::vector<double> xs = {1e-5, 2e-5, 5e-5, 1e-4, 2e-4, 5e-4, 1e-3};
    double beta32 = ntlo_extract_beta32(xs);
    double analytic = 15.0 * (10.0 + 3.0 * kPi) / (4.0 * std::pow(kPi, 3));
    CHECK(beta32 == doctest::Approx(analytic).epsilon(1e-4));
    CHECK(beta32 / 2.65 > 0.87);
    CHECK(beta32 / 2.65 < 0.90);
    CHECK_THROWS_AS(ntlo_extract_beta32({1e-4, 2e-4}), std::invalid_argument);
}

TEST_CASE("ntlo_energy summary record") {
    Geometry g(1.0, 1.0, 5e-4);  // x = 1e-3
    auto r = ntlo_energy(g);
    CHECK(r.x == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK_FALSE(r.outside_validity);
    CHECK(r.beta32_analytic == doctest::Approx(2.3492958572212807732).epsilon(1e-14));
    CHECK(r.te_share ==
          doctest::Approx((8.0 + 3.0 * kPi) / (10.0 + 3.0 * kPi)).epsilon(1e-6));
    CHECK(r.ratio_resummed == doctest::Approx(r.asymptotic_three_term).epsilon(1e-2));
    Geometry far(1.0, 1.0, 0.4);
    CHECK(ntlo_energy(far).outside_validity);
}
