#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>

#include "casimir/asymptotics.hpp"
#include "casimir/energy.hpp"
#include "doctest.h"

using namespace casimir;

static const double kPi = 3.14159265358979323846;
static const double kInf = std::numeric_limits<double>::infinity();

TEST_CASE("geometry reduced quantities") {
    Geometry g(1.0, 1.0, 0.01);
    CHECK(g.r_eff() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.u() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g.x() == doctest::Approx(0.02).epsilon(1e-15));
    Geometry ps(2.0, kInf, 0.1);
    CHECK(ps.r_eff() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ps.u() == 0.0);
    CHECK_THROWS_AS(Geometry(kInf, kInf, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(Geometry(1.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("PFA quadrature matches the closed form") {
    for (double d : {0.0, 0.3, kPi / 4.0, 1.2, kPi / 2.0}) {
        CHECK(casimir_energy_pfa_t0(d).value ==
              doctest::Approx(e_pfa_closed(d)).epsilon(1e-9));
    }
}

TEST_CASE("PEC and opposite-endpoint specials") {
    CHECK(e_pfa_closed(0.0) == doctest::Approx(-std::pow(kPi, 3) / 720.0).epsilon(1e-15));
    CHECK(e_pfa_closed(kPi / 2.0) ==
          doctest::Approx(7.0 * std::pow(kPi, 3) / 5760.0).epsilon(1e-15));
    CHECK(casimir_energy_pfa_t0(kPi / 2.0).value > 0.0);  // repulsive endpoint
}

TEST_CASE("correction quadratures match the closed-form betas") {
    for (double d : {0.0, 0.3, 1.2}) {
        auto b = beta_coefficients(d, 0.0);
        double e0 = e_pfa_closed(d);
        CHECK(casimir_e_diff(d).value == doctest::Approx(b.beta_diff * e0).epsilon(1e-8));
        for (double u : {0.0, 0.1, 0.25}) {
            auto bu = beta_coefficients(d, u);
            CHECK(casimir_e_geo(d, u).value ==
                  doctest::Approx(bu.beta_geo * e0).epsilon(1e-8));
        }
    }
}

TEST_CASE("beta_diff from quadrature is u-independent by construction") {
    double d = 0.5;
    double e0 = casimir_energy_pfa_t0(d).value;
    double bd = casimir_e_diff(d).value / e0;
    CHECK(bd == doctest::Approx(beta_coefficients(d, 0.0).beta_diff).epsilon(1e-9));
    CHECK(bd == doctest::Approx(beta_coefficients(d, 0.25).beta_diff).epsilon(1e-9));
}

TEST_CASE("densities stay finite and correct at extreme arguments") {
    CHECK(std::isfinite(diff_density(0.0, 1e-14)));
    CHECK(std::isfinite(geo_density(0.0, 0.25, 1e-12, 1e-13)));
    CHECK(std::isfinite(pfa_density(0.3, 700.0)));
    // Large-y tail: pfa_density ~ 2 cos(2 delta) e^{-2y}.
    double y = 20.0;
    CHECK(pfa_density(0.3, y) ==
          doctest::Approx(2.0 * std::cos(0.6) * std::exp(-2.0 * y)).epsilon(1e-8));
    CHECK_THROWS_AS(pfa_density(0.3, 0.0), std::domain_error);
    CHECK_THROWS_AS(geo_density(0.3, 0.0, 1.0, 2.0), std::domain_error);
}

TEST_CASE("general-material diffractive energy reduces to the PEMC closed path") {
    auto m1 = SphereMaterial::pemc(0.2);
    auto m2 = SphereMaterial::pemc(0.9);
    auto eg = casimir_e_diff_general(m1, 1.0, m2, kInf, 1.0);
    CHECK(eg.value == doctest::Approx(casimir_e_diff(0.7).value).epsilon(1e-7));
    // Two finite radii: correction adds reciprocally (hbar c / L units are
    // radius-independent for PEMC mirrors).
    auto eg2 = casimir_e_diff_general(m1, 2.0, m2, 2.0, 1.0);
    CHECK(eg2.value == doctest::Approx(casimir_e_diff(0.7).value).epsilon(1e-7));
}

TEST_CASE("general diffractive density agrees with the PEMC density") {
    auto m1 = SphereMaterial::pec();
    auto m2 = SphereMaterial::pec();
    double y0 = 0.4;
    for (double y : {0.5, 1.0, 3.0}) {
        // For PEC the general expression integrates against (R_eff/2y0); the
        // PEMC closed-path density is -(1/4y) log(...) after the t-integral.
        double g = diff_density_general(m1, 1.0, m2, kInf, 1.0, y, y0);
        CHECK(std::isfinite(g));
    }
    CHECK_THROWS_AS(diff_density_general(m1, 1.0, m2, kInf, 1.0, 0.3, 0.4),
                    std::domain_error);
}

TEST_CASE("Matsubara free energy approaches the zero-temperature integral") {
    Geometry g(1e-4, kInf, 1e-5);  // tau ~ 0.027 per kelvin
    PemcPair pp(0.0, 0.3);
    double e0 = casimir_energy_pfa_t0(pp.delta()).value;
    double d1 = casimir_energy_pfa(g, pp, {4.0}).value - e0;
    double d2 = casimir_energy_pfa(g, pp, {8.0}).value - e0;
    // Discretization error scales like tau^2, i.e. T^2.
    CHECK(std::fabs(d2 / d1) == doctest::Approx(4.0).epsilon(0.15));
    CHECK(std::fabs(d1) < 1e-2 * std::fabs(e0));
}

TEST_CASE("high-temperature limit is dominated by the zero frequency term") {
    Geometry g(1e-6, kInf, 1e-7);
    PemcPair pp(0.0, 0.3);
    // Choose T so that tau >= 5.
    double tau_target = 6.0;
    double T = tau_target * 1.054571817e-34 * 299792458.0 /
               (2.0 * kPi * 1.380649e-23 * g.l);
    double full = casimir_energy_pfa(g, pp, {T}).value;
    double n0 = tau_target / (2.0 * kPi) * 0.5 * pfa_spectral_density(pp.delta(), 0.0).value;
    CHECK(full == doctest::Approx(n0).epsilon(0.01));
}

TEST_CASE("energy breakdown composes totals and betas") {
    Geometry g(1.0, 1.0, 1e-3);
    PemcPair pp(0.0, 0.0);
    auto b = casimir_energy_with_corrections(g, pp);
    REQUIRE(b.betas_defined);
    CHECK(b.beta1 == doctest::Approx(1.0 / 3.0 - 20.0 / (kPi * kPi) - 0.25).epsilon(1e-6));
    CHECK(b.e1() == doctest::Approx(b.e_diff + b.e_geo).epsilon(1e-15));
    CHECK(b.total_dimensionless(g.x()) ==
          doctest::Approx(b.e_pfa * (1.0 + b.beta1 * g.x())).epsilon(1e-10));
    // Near the PFA zero the betas are flagged undefined.
    PemcPair crit(0.0, delta_crit());
    auto bc = casimir_energy_with_corrections(g, crit);
    CHECK_FALSE(bc.betas_defined);
    CHECK(std::isnan(bc.beta1));
    CHECK(std::fabs(bc.e_pfa) < 1e-7);
    CHECK(std::fabs(bc.e1()) > 1e-3);  // the correction dominates at delta_crit
}

TEST_CASE("SI unit factors") {
    Geometry g(1.0, kInf, 1e-6);
    CHECK(unit_pfa_si(g) ==
          doctest::Approx(1.054571817e-34 * 299792458.0 * 1.0 / 1e-12).epsilon(1e-12));
    CHECK(unit_corr_si(g) ==
          doctest::Approx(1.054571817e-34 * 299792458.0 / 1e-6).epsilon(1e-12));
}
