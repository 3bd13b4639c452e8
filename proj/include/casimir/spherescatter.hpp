#pragma once

#include "casimir/logscaled.hpp"
#include "casimir/materials.hpp"

namespace casimir {

struct SizeParameter {
    double xi_tilde;  // = xi * R / c
};

// Saddle-point scattering kinematics at imaginary frequency: cos(Theta) <= -1,
// so the half-angle sine s >= 1 is real and the half-angle cosine squared is
// a real number <= 0.
struct ScatteringKinematics {
    double s;     // sin(Theta/2) >= 1
    double c_sq;  // cos^2(Theta/2) = 1 - s^2 <= 0
    double mu;    // cos(Theta) = 1 - 2 s^2 <= -1

    static ScatteringKinematics from_s(double s);
    static ScatteringKinematics from_t(double t);  // t = xi/(c*kappa) in (0,1]
    static ScatteringKinematics from_mu(double mu);
};

// Sphere material for the asymptotic amplitudes.
struct SphereMaterial {
    enum class Kind { pemc, dielectric } kind;
    double theta = 0.0;  // PEMC duality angle
    double n = 0.0;      // refractive index

    static SphereMaterial pec() { return {Kind::pemc, 0.0, 0.0}; }
    static SphereMaterial pemc(double theta) { return {Kind::pemc, theta, 0.0}; }
    static SphereMaterial dielectric(double n) { return {Kind::dielectric, 0.0, n}; }
};

// Leading (geometrical-optics) reflection matrix r_{p'p} at incidence
// (pi - Theta)/2, in the (TM, TE) basis.
Mat2 leading_reflection(const SphereMaterial& mat, const ScatteringKinematics& kin);

// Additive diffractive correction matrix d_{p'p} defined through
// r~_{p'p} = r_{p'p} + d_{p'p}/xi_tilde.  For polarization-conserving
// materials d_{pp} = r_{pp} * s_{pp}.
Mat2 diffractive_matrix(const SphereMaterial& mat, const ScatteringKinematics& kin);

// Scalar diffractive correction s_{p'p} (ratio form) for the
// polarization-conserving channels of PEC/dielectric materials.
double diffractive_correction(Pol p_out, Pol p_in, const SphereMaterial& mat,
                              const ScatteringKinematics& kin);

enum class WkbOrder { leading_only, with_first_correction };

struct WkbAmplitude {
    LogScaled amplitude;  // S_{p'p} = (xi_tilde/2) e^{2 xi_tilde s} r~_{p'p}
    double r_factor;      // r~_{p'p}
};
WkbAmplitude wkb_amplitude(Pol p_out, Pol p_in, SizeParameter sz,
                           const ScatteringKinematics& kin, const SphereMaterial& mat,
                           WkbOrder order);

// Zero-frequency model parameters X_{p'p}(l) for a PEMC sphere; continuous l.
double zero_freq_X(Pol p_out, Pol p_in, double theta, double l);

// Direct summation of S_{p'p} = xi_tilde sum_l X_{p'p}(l) z^l/(2l)! with
// z = -2 xi_tilde^2 mu; requires mu < 0.
LogScaled zero_freq_amplitude_series(Pol p_out, Pol p_in, double theta, double xi_tilde,
                                     double mu, long l_cap = 2000000);

// Direct Mie sum for a PEC sphere (polarization-conserving channels only),
// used as an independent oracle for wkb_amplitude.
LogScaled mie_oracle_pec(Pol pol, double xi_tilde, double mu);

}  // namespace casimir
