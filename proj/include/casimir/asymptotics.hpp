#pragma once

#include <stdexcept>
#include <vector>

#include "casimir/energy.hpp"

namespace casimir {

// Thrown by beta_coefficients at the PFA zero where the betas diverge.
struct NearCriticalError : std::domain_error {
    using std::domain_error::domain_error;
};

// E_PFA(delta) in units hbar*c*R_eff/L^2: -[pi^4 - 30 delta^2 (pi-delta)^2]/(720 pi).
double e_pfa_closed(double delta);

struct BetaCoefficients {
    double beta_diff;
    double beta_geo;
    double beta1;
};
// Closed-form betas; throws NearCriticalError within ~1e-8 rad of delta_crit.
BetaCoefficients beta_coefficients(double delta, double u);

// Root of pi^4 = 30 delta^2 (pi-delta)^2 on (0, pi/2), by Newton iteration;
// the radical closed form is used as a cross-check in the tests.
double delta_crit();

// E_1(delta, u) in units hbar*c/L:
// [20(pi^2 - 6 delta(pi-delta)) - (1/3 - u)(pi^4 - 30 delta^2(pi-delta)^2)]/(720 pi).
double e1_closed(double delta, double u);

// Round-trip Bessel sum B(z) = sum_{r>=1} K2(4 r sqrt(z)) / r^2.
struct BesselSumOptions {
    double branch_threshold = 1e-5;  // below: three-term small-z asymptotic
    bool force_direct = false;
    double term_tol = 1e-16;
    long max_terms = 20000000;
};
double bessel_roundtrip_sum(double z, const BesselSumOptions& opt = {});

// Small-z asymptotic pi^4/(720 z) - pi^2/12 + 2 pi sqrt(z)/3.
double bessel_roundtrip_sum_asymptotic(double z);

struct SigmaPair {
    double sigma_te;  // (2 - t^2)/4
    double sigma_tm;  // t^2/4
    double t;
};
SigmaPair sigma_pair(double t);

struct NtloResult {
    double x;
    double ratio_resummed;         // E_LO-SPA / E_PFA from quadrature
    double asymptotic_three_term;  // 1 - (15/pi^2) x + beta32 x^{3/2}
    double beta32_analytic;        // 15(10+3pi)/(4 pi^3)
    double te_share;               // TE fraction of the x^{3/2} term
    bool outside_validity;         // x > 0.1
};
NtloResult ntlo_energy(const Geometry& geom);

// Resummed-over-PFA energy ratio 360*x*D(x)/pi^4 at aspect ratio x, where
// D(x) = sum_p Int_0^1 dt sigma_p B(sigma_p x).  branch_threshold controls the
// Bessel-sum branch switch (small values avoid asymptotic bias in fits).
double ntlo_energy_ratio(double x, double branch_threshold = 1e-5);

// Extracts the x^{3/2} coefficient of the resummed energy ratio from a grid of
// aspect ratios by a relative-weighted least-squares fit with x^2 log x and
// x^2 nuisance terms.
double ntlo_extract_beta32(const std::vector<double>& xs);

}  // namespace casimir
