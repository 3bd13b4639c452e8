#pragma once

#include <cmath>
#include <stdexcept>

#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/spherescatter.hpp"

namespace casimir {

// Two-sphere geometry; r2 (or r1) may be infinite for the plane-sphere limit.
struct Geometry {
    double r1;  // m
    double r2;  // m, may be +inf
    double l;   // surface-to-surface gap, m

    Geometry(double radius1, double radius2, double gap) : r1(radius1), r2(radius2), l(gap) {
        if (!(r1 > 0.0) || !(r2 > 0.0) || !(l > 0.0))
            throw std::invalid_argument("Geometry: radii and gap must be positive");
        if (std::isinf(r1) && std::isinf(r2))
            throw std::invalid_argument("Geometry: at most one radius may be infinite");
    }
    double r_eff() const {
        if (std::isinf(r1)) return r2;
        if (std::isinf(r2)) return r1;
        return r1 * r2 / (r1 + r2);
    }
    double u() const {
        if (std::isinf(r1) || std::isinf(r2)) return 0.0;
        return r1 * r2 / ((r1 + r2) * (r1 + r2));
    }
    double x() const { return l / r_eff(); }
};

struct Temperature {
    double kelvin;
};

// ---- Spectral densities (dimensionless radial integrands in y = kappa*L) ----

// PFA density: Li2(lambda1) + Li2(lambda2) at y = kappa*L for a PEMC pair
// with angle difference delta; the per-frequency spectral function is
// F_PFA(xi) * L / R_eff = -(1/2) * Integral_{y0}^inf pfa_density dy.
double pfa_density(double delta, double y);

// Diffractive density (PEMC): F_diff(xi) = Integral_{y0}^inf diff_density dy
// with diff_density = -(1/4y) [log(1-lambda1) + log(1-lambda2)].
double diff_density(double delta, double y);

// Geometric density (PEMC): F_geo(xi) = Integral_{y0}^inf geo_density dy,
// where y0 = xi*L/c enters through t = y0/y.
double geo_density(double delta, double u, double y, double y0);

// General-material diffractive density from the alpha expansion; reduces to
// diff_density for PEMC inputs.  F_diff(xi) = Integral_{y0}^inf (...) dy.
double diff_density_general(const SphereMaterial& m1, double radius1,
                            const SphereMaterial& m2, double radius2, double gap,
                            double y, double y0);

// Per-frequency spectral functions (dimensionless, argument y0 = xi*L/c).
quad::Result pfa_spectral_density(double delta, double y0, double rel_tol = 1e-10);
quad::Result diff_spectral_density(double delta, double y0, double rel_tol = 1e-10);

// ---- Integrated energies ----

struct EnergyResult {
    double value;  // in the unit stated by the producing function
    double error;  // propagated quadrature error estimate (same unit)
};

// T = 0 PFA energy by quadrature, in units hbar*c*R_eff/L^2.
EnergyResult casimir_energy_pfa_t0(double delta, double rel_tol = 1e-10);

// PFA free energy; T = 0 falls back to the frequency integral, T > 0 uses the
// Matsubara sum with the n = 0 term at half weight.  Units hbar*c*R_eff/L^2.
EnergyResult casimir_energy_pfa(const Geometry& geom, const PemcPair& pemc, Temperature t,
                                double rel_tol = 1e-10);

// Leading corrections at T = 0, in units hbar*c/L.
EnergyResult casimir_e_diff(double delta, double rel_tol = 1e-10);
EnergyResult casimir_e_geo(double delta, double u, double rel_tol = 1e-10);

// General-material diffractive correction via the alpha expansion, units hbar*c/L.
EnergyResult casimir_e_diff_general(const SphereMaterial& m1, double radius1,
                                    const SphereMaterial& m2, double radius2, double gap,
                                    double rel_tol = 1e-9);

struct EnergyBreakdown {
    double e_pfa;      // hbar*c*R_eff/L^2
    double e_diff;     // hbar*c/L
    double e_geo;      // hbar*c/L
    double e_pfa_err;
    double e_diff_err;
    double e_geo_err;
    double beta_diff;  // dimensionless; NaN when |e_pfa| is too small (near delta_crit)
    double beta_geo;
    double beta1;
    bool betas_defined;

    double e1() const { return e_diff + e_geo; }              // hbar*c/L
    double total_dimensionless(double x) const {              // hbar*c*R_eff/L^2
        return e_pfa + e1() * x;
    }
};

EnergyBreakdown casimir_energy_with_corrections(const Geometry& geom, const PemcPair& pemc,
                                                double rel_tol = 1e-9);

// SI conversion helpers (energy unit factors in joules).
double unit_pfa_si(const Geometry& geom);   // hbar*c*R_eff/L^2
double unit_corr_si(const Geometry& geom);  // hbar*c/L

}  // namespace casimir
