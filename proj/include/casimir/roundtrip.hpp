#pragma once

#include "casimir/materials.hpp"
#include "casimir/spherescatter.hpp"

namespace casimir {

// Saddle-point single round-trip: A0 = R1 R2 e^{-2 kappa L} plus, when
// available, the diffractive-correction matrix A1 (dimension 1/length) that
// enters as A = A0 + (c/xi) A1.
struct SingleRoundTrip {
    Mat2 a0;
    Mat2 a1;
    double weight = 0.0;  // e^{-2 kappa L}
    bool has_correction = false;
};

SingleRoundTrip single_roundtrip(const Mat2& r1, const Mat2& r2, double kappa_l);

// With diffractive corrections: a1 = (D1 R2 / R1 + R1 D2 / R2) e^{-2 kappa L}
// where D_i are the additive correction matrices of the two spheres.
SingleRoundTrip single_roundtrip_corrected(const SphereMaterial& m1, double radius1,
                                           const SphereMaterial& m2, double radius2,
                                           const ScatteringKinematics& kin, double kappa_l);

// P = -log det(I - A0), evaluated via eigenvalues in real arithmetic.
double p_function(const SingleRoundTrip& srt);

struct AlphaCoefficients {
    double alpha0;  // tr A1
    double alpha1;  // tr(A0 A1) - tr A0 tr A1
};
AlphaCoefficients alpha_coefficients(const SingleRoundTrip& srt);

// tr[(I - A0)^{-1} A1] = (alpha0 + alpha1) / [(1-lambda1)(1-lambda2)].
double diffractive_trace(const SingleRoundTrip& srt);

// Sum_{r<=r_max} (1/r) sum over all 4^r polarization sequences of
// prod_j r1_{p_{2j+1} p_{2j}} r2_{p_{2j} p_{2j-1}} e^{-2 r kappa L}
// (independent oracle by explicit path enumeration; r_max <= 8).
double brute_force_roundtrips(const Mat2& r1, const Mat2& r2, double kappa_l, int r_max);

// Same truncated sum via matrix powers (r_max <= 30).
double matrix_power_roundtrips(const SingleRoundTrip& srt, int r_max);

}  // namespace casimir
