#include "casimir/energy.hpp"

#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/roundtrip.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

using constants::pi;

namespace {

// Eigenvalue-pair sums for lambda = w e^{+-2 i delta} in real arithmetic.
struct PairSums {
    double li2;       // Li2(l1) + Li2(l2)
    double li3;       // Li3(l1) + Li3(l2)
    double log_term;  // log(1-l1) + log(1-l2)
    double geo_frac;  // l1/(1-l1) + l2/(1-l2)
};

PairSums pair_sums(double delta, double y) {
    double w = std::exp(-2.0 * y);
    double phase = 2.0 * delta;
    PairSums p;
    p.li2 = 2.0 * specfun::polylog_cos(2, w, phase);
    p.li3 = 2.0 * specfun::polylog_cos(3, w, phase);
    // 1 - 2 w cos + w^2 = (1-w)^2 + 2 w (1-cos), computed without cancellation.
    double one_minus_w = -std::expm1(-2.0 * y);
    double one_minus_c = 2.0 * std::pow(std::sin(0.5 * phase), 2);
    double denom = one_minus_w * one_minus_w + 2.0 * w * one_minus_c;
    p.log_term = std::log(denom);
    p.geo_frac = 2.0 * w * (one_minus_w - one_minus_c) / denom;
    return p;
}

}  // namespace

double pfa_density(double delta, double y) {
    if (!(y > 0.0)) throw std::domain_error("pfa_density: need y > 0");
    return 2.0 * specfun::polylog_cos(2, std::exp(-2.0 * y), 2.0 * delta);
}

double diff_density(double delta, double y) {
    if (!(y > 0.0)) throw std::domain_error("diff_density: need y > 0");
    return -0.25 * pair_sums(delta, y).log_term / y;
}

double geo_density(double delta, double u, double y, double y0) {
    if (!(y > 0.0) || !(y0 >= 0.0) || y0 > y)
        throw std::domain_error("geo_density: need y >= y0 >= 0, y > 0");
    PairSums p = pair_sums(delta, y);
    double t2 = (y0 / y) * (y0 / y);
    double w31 = 3.0 * u - 1.0;
    double bracket1 = p.geo_frac + w31 * p.li2;
    double bracket2 = -p.log_term + w31 * p.li3;
    return (1.0 / 12.0) * (y * (1.0 + t2) * bracket1 + t2 * bracket2) / y;
}

namespace {

// R_eff times the bracketed eigenvalue expression of the general diffractive
// correction, at kinematics t = xi/(c*kappa) and y = kappa*L.  Dimensionless.
double diff_expr_scaled(const SphereMaterial& m1, double radius1, const SphereMaterial& m2,
                        double radius2, double t, double y) {
    auto kin = ScatteringKinematics::from_t(t);
    SingleRoundTrip srt = single_roundtrip_corrected(m1, radius1, m2, radius2, kin, y);
    AlphaCoefficients a = alpha_coefficients(srt);
    EigenPair e = eigenvalues_2x2(srt.a0);
    double expr;
    double radius = e.conjugate ? e.w : std::max(std::fabs(e.l1), std::fabs(e.l2));
    if (radius < 0.5) {
        // Divided difference of f(l) = (a0 + a1/l) log(1-l) over the pair:
        // expr = -sum_{k>=1} (a0/k + a1/(k+1)) h_{k-1}(l1, l2), with the
        // complete homogeneous h_k = tr*h_{k-1} - det*h_{k-2}.
        double tr = srt.a0.trace(), det = srt.a0.det();
        double h_prev = 0.0, h = 1.0, sum = 0.0;
        for (int k = 1; k <= 200; ++k) {
            double term = (a.alpha0 / k + a.alpha1 / (k + 1.0)) * h;
            sum += term;
            if (std::fabs(term) < 1e-17 * std::fabs(sum) && k > 3) break;
            double h_next = tr * h - det * h_prev;
            h_prev = h;
            h = h_next;
        }
        expr = -sum;
    } else if (e.conjugate && std::sin(e.phi) > 1e-6) {
        // lambda1 = w e^{i phi}: expr = Im[(a0 + a1/lambda1) log(1-lambda1)]/(w sin phi)
        double cw = e.w * std::cos(e.phi), sw = e.w * std::sin(e.phi);
        double re_a = a.alpha0 + a.alpha1 * std::cos(e.phi) / e.w;
        double im_a = -a.alpha1 * std::sin(e.phi) / e.w;
        double re_l = 0.5 * std::log1p(-2.0 * cw + e.w * e.w);
        double im_l = std::atan2(-sw, 1.0 - cw);
        expr = (re_a * im_l + im_a * re_l) / sw;
    } else {
        double l1 = e.conjugate ? e.w * std::cos(e.phi) : e.l1;
        double l2 = e.conjugate ? l1 : e.l2;
        if (std::fabs(l1 - l2) > 1e-6 * std::max(std::fabs(l1), 1e-300)) {
            expr = ((a.alpha0 + a.alpha1 / l1) * std::log1p(-l1) -
                    (a.alpha0 + a.alpha1 / l2) * std::log1p(-l2)) /
                   (l1 - l2);
        } else {
            // Degenerate limit d/dl [(a0 + a1/l) log(1-l)].
            expr = -a.alpha1 / (l1 * l1) * std::log1p(-l1) -
                   (a.alpha0 + a.alpha1 / l1) / (1.0 - l1);
        }
    }
    double r_eff = 1.0 / (1.0 / radius1 + 1.0 / radius2);
    return r_eff * expr;
}

}  // namespace

double diff_density_general(const SphereMaterial& m1, double radius1,
                            const SphereMaterial& m2, double radius2, double gap,
                            double y, double y0) {
    if (!(y > y0 && y0 > 0.0))
        throw std::domain_error("diff_density_general: need y > y0 > 0");
    (void)gap;
    // F_diff(xi) = (R_eff / 2 y0) Integral_{y0}^inf dy expr(t = y0/y, y).
    return diff_expr_scaled(m1, radius1, m2, radius2, y0 / y, y) / (2.0 * y0);
}

quad::Result pfa_spectral_density(double delta, double y0, double rel_tol) {
    if (!(y0 >= 0.0)) throw std::domain_error("pfa_spectral_density: need y0 >= 0");
    auto r = quad::integrate_decaying(
        [&](double v) { return pfa_density(delta, y0 + v); }, rel_tol);
    return {-0.5 * r.value, 0.5 * r.error};
}

quad::Result diff_spectral_density(double delta, double y0, double rel_tol) {
    if (!(y0 > 0.0)) throw std::domain_error("diff_spectral_density: need y0 > 0");
    return quad::integrate_decaying(
        [&](double v) { return diff_density(delta, y0 + v); }, rel_tol);
}

EnergyResult casimir_energy_pfa_t0(double delta, double rel_tol) {
    auto r = quad::integrate_decaying(
        [&](double y) { return y * pfa_density(delta, y); }, rel_tol);
    return {-r.value / (4.0 * pi), r.error / (4.0 * pi)};
}

EnergyResult casimir_energy_pfa(const Geometry& geom, const PemcPair& pemc, Temperature t,
                                double rel_tol) {
    (void)geom;
    double delta = pemc.delta();
    if (!(t.kelvin >= 0.0)) throw std::invalid_argument("casimir_energy_pfa: need T >= 0");
    if (t.kelvin == 0.0) return casimir_energy_pfa_t0(delta, rel_tol);
    // Matsubara: F = (tau/2pi) [ (1/2) Fhat(0) + sum_{n>=1} Fhat(n tau) ],
    // tau = 2 pi k_B T L / (hbar c); Fhat(y0) = F_PFA(xi) L / R_eff.
    double tau = 2.0 * pi * constants::k_boltzmann * t.kelvin * geom.l /
                 (constants::hbar * constants::c);
    double sum = 0.5 * pfa_spectral_density(delta, 0.0, rel_tol).value;
    double err = 0.0;
    for (int n = 1; n <= 2000000; ++n) {
        auto term = pfa_spectral_density(delta, n * tau, rel_tol);
        sum += term.value;
        err += term.error;
        if (std::fabs(term.value) < 1e-12 * std::max(std::fabs(sum), 1e-300) && n > 2)
            return {tau / (2.0 * pi) * sum, tau / (2.0 * pi) * err};
    }
    throw std::runtime_error("casimir_energy_pfa: Matsubara sum failed to truncate");
}

EnergyResult casimir_e_diff(double delta, double rel_tol) {
    auto r = quad::integrate_decaying(
        [&](double y) { return pair_sums(delta, y).log_term; }, rel_tol);
    return {-r.value / (8.0 * pi), r.error / (8.0 * pi)};
}

EnergyResult casimir_e_geo(double delta, double u, double rel_tol) {
    // E_geo = (hbar c / 24 pi L) [ (4/3) Int y S1 dy + (1/3) Int S2 dy ]
    double w31 = 3.0 * u - 1.0;
    auto r1 = quad::integrate_decaying(
        [&](double y) {
            PairSums p = pair_sums(delta, y);
            return y * (p.geo_frac + w31 * p.li2);
        },
        rel_tol);
    auto r2 = quad::integrate_decaying(
        [&](double y) {
            PairSums p = pair_sums(delta, y);
            return -p.log_term + w31 * p.li3;
        },
        rel_tol);
    double f = 1.0 / (24.0 * pi);
    return {f * (4.0 / 3.0 * r1.value + 1.0 / 3.0 * r2.value),
            f * (4.0 / 3.0 * r1.error + 1.0 / 3.0 * r2.error)};
}

EnergyResult casimir_e_diff_general(const SphereMaterial& m1, double radius1,
                                    const SphereMaterial& m2, double radius2, double gap,
                                    double rel_tol) {
    (void)gap;
    // E = (hbar c R_eff / 4 pi L) Int_0^1 (dt/t) Int_0^inf dy expr(t, y); the
    // scaled expression R_eff*expr vanishes linearly in t, so (.)/t is regular.
    auto outer = [&](double t) {
        if (t <= 0.0) t = 1e-14;
        auto inner = quad::integrate_decaying(
            [&](double y) {
                if (y <= 0.0) return 0.0;
                return diff_expr_scaled(m1, radius1, m2, radius2, t, y) / t;
            },
            rel_tol * 0.1);
        return inner.value;
    };
    // Outer integrand is smooth on [0, 1]; fixed-order doubling suffices.
    double coarse = quad::panel(outer, 0.0, 1.0, 24);
    auto r = quad::panel_adaptive(outer, 0.0, 1.0,
                                  rel_tol * std::max(std::fabs(coarse), 1e-300), 32, 512);
    return {r.value / (4.0 * pi), (r.error + std::fabs(coarse) * rel_tol) / (4.0 * pi)};
}

EnergyBreakdown casimir_energy_with_corrections(const Geometry& geom, const PemcPair& pemc,
                                                double rel_tol) {
    double delta = pemc.delta();
    EnergyBreakdown b{};
    auto pfa = casimir_energy_pfa_t0(delta, rel_tol);
    auto df = casimir_e_diff(delta, rel_tol);
    auto ge = casimir_e_geo(delta, geom.u(), rel_tol);
    b.e_pfa = pfa.value;
    b.e_diff = df.value;
    b.e_geo = ge.value;
    b.e_pfa_err = pfa.error;
    b.e_diff_err = df.error;
    b.e_geo_err = ge.error;
    double scale = std::fabs(casimir_energy_pfa_t0(0.0, 1e-8).value);
    b.betas_defined = std::fabs(b.e_pfa) > 1e-6 * scale;
    if (b.betas_defined) {
        b.beta_diff = b.e_diff / b.e_pfa;
        b.beta_geo = b.e_geo / b.e_pfa;
        b.beta1 = b.beta_diff + b.beta_geo;
    } else {
        b.beta_diff = b.beta_geo = b.beta1 = std::numeric_limits<double>::quiet_NaN();
    }
    return b;
}

double unit_pfa_si(const Geometry& geom) {
    return constants::hbar * constants::c * geom.r_eff() / (geom.l * geom.l);
}

double unit_corr_si(const Geometry& geom) {
    return constants::hbar * constants::c / geom.l;
}

}  // namespace casimir
