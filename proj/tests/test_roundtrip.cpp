#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <random>

#include "casimir/roundtrip.hpp"
#include "doctest.h"

using namespace casimir;

static const double kPi = 3.14159265358979323846;

namespace {

Mat2 random_mat(std::mt19937& rng, double scale) {
    std::uniform_real_distribution<double> U(-scale, scale);
    Mat2 a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a(i, j) = U(rng);
    return a;
}

}  // namespace

TEST_CASE("brute-force path enumeration equals matrix powers") {
    std::mt19937 rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        Mat2 r1 = random_mat(rng, 0.9), r2 = random_mat(rng, 0.9);
        double kl = 0.3 + 0.5 * trial / 100.0;
        double bf = brute_force_roundtrips(r1, r2, kl, 5);
        double mp = matrix_power_roundtrips(single_roundtrip(r1, r2, kl), 5);
        worst = std::max(worst, std::fabs(bf - mp));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("round-trip series converges to the log-det form") {
    Mat2 r1 = plane_reflection_pemc(0.1), r2 = plane_reflection_pemc(0.8);
    double kl = 1.0;
    auto srt = single_roundtrip(r1, r2, kl);
    double series = matrix_power_roundtrips(srt, 30);
    CHECK(series == doctest::Approx(p_function(srt)).epsilon(1e-12));
}

TEST_CASE("PEMC p_function matches its closed form") {
    for (double d : {0.0, 0.3, kPi / 4.0, 1.2, kPi / 2.0}) {
        Mat2 r1 = plane_reflection_pemc(0.0), r2 = plane_reflection_pemc(d);
        for (double kl : {0.2, 1.0, 4.0}) {
            auto srt = single_roundtrip(r1, r2, kl);
            double w = std::exp(-2.0 * kl);
            double closed = -std::log(1.0 - 2.0 * w * std::cos(2.0 * d) + w * w);
            CHECK(p_function(srt) == doctest::Approx(closed).epsilon(1e-14));
        }
    }
}

TEST_CASE("p_function rejects spectral radius >= 1") {
    Mat2 r1 = 1.2 * Mat2::identity();
    Mat2 r2 = Mat2::identity();
    auto srt = single_roundtrip(r1, r2, 0.01);
    CHECK_THROWS_AS(p_function(srt), std::domain_error);
}

TEST_CASE("diffractive trace equals the derivative of the log-det") {
    // -d/de log det(I - A0 - e*A1) at e = 0 equals tr[(I-A0)^{-1} A1].
    auto m1 = SphereMaterial::pemc(0.2);
    auto m2 = SphereMaterial::pemc(0.9);
    auto kin = ScatteringKinematics::from_t(0.6);
    auto srt = single_roundtrip_corrected(m1, 1.0, m2, 2.0, kin, 0.8);
    double tr = diffractive_trace(srt);
    double eps = 1e-6;
    auto logdet = [&](double e) {
        Mat2 a = srt.a0 + e * srt.a1;
        return std::log((1.0 - a(0, 0)) * (1.0 - a(1, 1)) - a(0, 1) * a(1, 0));
    };
    double fd = -(logdet(eps) - logdet(-eps)) / (2.0 * eps);
    CHECK(tr == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("alpha coefficients reproduce the diffractive trace") {
    auto m1 = SphereMaterial::dielectric(2.5);
    auto m2 = SphereMaterial::pemc(0.4);
    auto kin = ScatteringKinematics::from_t(0.3);
    auto srt = single_roundtrip_corrected(m1, 1.0, m2, 3.0, kin, 1.1);
    auto a = alpha_coefficients(srt);
    double denom = 1.0 - srt.a0.trace() + srt.a0.det();
    CHECK(diffractive_trace(srt) ==
          doctest::Approx((a.alpha0 + a.alpha1) / denom).epsilon(1e-14));
    auto plain = single_roundtrip(Mat2::identity(), Mat2::identity(), 2.0);
    CHECK_THROWS_AS(alpha_coefficients(plain), std::logic_error);
}

TEST_CASE("corrected round trip scales inversely with the radii") {
    auto m1 = SphereMaterial::pemc(0.1);
    auto m2 = SphereMaterial::pemc(0.7);
    auto kin = ScatteringKinematics::from_t(0.5);
    auto s_ab = single_roundtrip_corrected(m1, 2.0, m2, 4.0, kin, 1.0);
    auto s_a = single_roundtrip_corrected(m1, 2.0, m2,
                                          std::numeric_limits<double>::infinity(), kin, 1.0);
    auto s_b = single_roundtrip_corrected(m1, std::numeric_limits<double>::infinity(), m2,
                                          4.0, kin, 1.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(s_ab.a1(i, j) ==
                  doctest::Approx(s_a.a1(i, j) + s_b.a1(i, j)).epsilon(1e-13));
}

TEST_CASE("brute force argument validation") {
    Mat2 id = Mat2::identity();
    CHECK_THROWS_AS(brute_force_roundtrips(id, id, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_roundtrips(id, id, 1.0, 9), std::invalid_argument);
    CHECK_THROWS_AS(matrix_power_roundtrips(single_roundtrip(id, id, 1.0), 31),
                    std::invalid_argument);
}
