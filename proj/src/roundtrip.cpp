#include "casimir/roundtrip.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace casimir {

SingleRoundTrip single_roundtrip(const Mat2& r1, const Mat2& r2, double kappa_l) {
    if (!(kappa_l > 0.0)) throw std::domain_error("single_roundtrip: need kappa*L > 0");
    SingleRoundTrip s;
    s.weight = std::exp(-2.0 * kappa_l);
    s.a0 = s.weight * (r1 * r2);
    return s;
}

SingleRoundTrip single_roundtrip_corrected(const SphereMaterial& m1, double radius1,
                                           const SphereMaterial& m2, double radius2,
                                           const ScatteringKinematics& kin, double kappa_l) {
    Mat2 r1 = leading_reflection(m1, kin);
    Mat2 r2 = leading_reflection(m2, kin);
    SingleRoundTrip s = single_roundtrip(r1, r2, kappa_l);
    Mat2 d1 = diffractive_matrix(m1, kin);
    Mat2 d2 = diffractive_matrix(m2, kin);
    s.a1 = s.weight * ((1.0 / radius1) * (d1 * r2) + (1.0 / radius2) * (r1 * d2));
    s.has_correction = true;
    return s;
}

double p_function(const SingleRoundTrip& srt) {
    EigenPair e = eigenvalues_2x2(srt.a0);
    if (e.conjugate) {
        // (1 - w e^{i phi})(1 - w e^{-i phi}) = 1 - 2 w cos(phi) + w^2
        if (e.w >= 1.0) throw std::domain_error("p_function: spectral radius >= 1");
        return -std::log1p(-2.0 * e.w * std::cos(e.phi) + e.w * e.w);
    }
    if (std::max(std::fabs(e.l1), std::fabs(e.l2)) >= 1.0)
        throw std::domain_error("p_function: spectral radius >= 1");
    return -(std::log1p(-e.l1) + std::log1p(-e.l2));
}

AlphaCoefficients alpha_coefficients(const SingleRoundTrip& srt) {
    if (!srt.has_correction)
        throw std::logic_error("alpha_coefficients: round trip built without corrections");
    double alpha0 = srt.a1.trace();
    double alpha1 = (srt.a0 * srt.a1).trace() - srt.a0.trace() * srt.a1.trace();
    return {alpha0, alpha1};
}

double diffractive_trace(const SingleRoundTrip& srt) {
    AlphaCoefficients a = alpha_coefficients(srt);
    // (1-lambda1)(1-lambda2) = 1 - tr A0 + det A0
    double denom = 1.0 - srt.a0.trace() + srt.a0.det();
    if (!(denom > 0.0)) throw std::domain_error("diffractive_trace: spectral radius >= 1");
    return (a.alpha0 + a.alpha1) / denom;
}

double brute_force_roundtrips(const Mat2& r1, const Mat2& r2, double kappa_l, int r_max) {
    if (r_max < 1 || r_max > 8)
        throw std::invalid_argument("brute_force_roundtrips: r_max must be in 1..8");
    double w = std::exp(-2.0 * kappa_l);
    double total = 0.0;
    for (int r = 1; r <= r_max; ++r) {
        const int n = 2 * r;
        double sum = 0.0;
        // Sequence p_1..p_{2r} of polarization indices; cyclic index 2r+1 == 1.
        for (long code = 0; code < (1L << n); ++code) {
            int p[17];
            for (int i = 1; i <= n; ++i) p[i] = static_cast<int>((code >> (i - 1)) & 1);
            double prod = 1.0;
            for (int j = 1; j <= r; ++j) {
                int p_next = (2 * j + 1 <= n) ? p[2 * j + 1] : p[1];
                prod *= r1(p_next, p[2 * j]) * r2(p[2 * j], p[2 * j - 1]);
            }
            sum += prod;
        }
        total += sum * std::pow(w, r) / r;
    }
    return total;
}

double matrix_power_roundtrips(const SingleRoundTrip& srt, int r_max) {
    if (r_max < 1 || r_max > 30)
        throw std::invalid_argument("matrix_power_roundtrips: r_max must be in 1..30");
    Mat2 pw = srt.a0;
    double total = pw.trace();
    for (int r = 2; r <= r_max; ++r) {
        pw = pw * srt.a0;
        total += pw.trace() / r;
    }
    return total;
}

}  // namespace casimir
