#include "casimir/materials.hpp"

#include "casimir/constants.hpp"

namespace casimir {

double SpectralPoint::kappa() const {
    double a = xi / constants::c;
    return std::sqrt(a * a + k * k);
}

Mat2 plane_reflection_pemc(double theta) {
    double c2 = std::cos(2.0 * theta), s2 = std::sin(2.0 * theta);
    // (TM, TE) basis; orthogonal with determinant -1.
    return {{{c2, -s2}, {-s2, -c2}}};
}

Mat2 plane_reflection_dielectric(double n, double t) {
    if (!(n >= 1.0)) throw std::invalid_argument("plane_reflection_dielectric: need n >= 1");
    if (!(t > 0.0 && t <= 1.0))
        throw std::domain_error("plane_reflection_dielectric: need 0 < t <= 1");
    double s = 1.0 / t;             // sin(Theta/2) >= 1
    double csq = 1.0 - s * s;       // cos^2(Theta/2) <= 0
    double root = std::sqrt(n * n - csq);
    double r_tm = (n * n * s - root) / (n * n * s + root);
    double r_te = (s - root) / (s + root);
    return Mat2::diag(r_tm, r_te);
}

EigenPair eigenvalues_2x2(const Mat2& a) {
    double tr = a.trace(), de = a.det();
    double disc = 0.25 * tr * tr - de;
    EigenPair e;
    if (disc < 0.0) {
        e.conjugate = true;
        e.w = std::sqrt(de);
        e.phi = std::atan2(std::sqrt(-disc), 0.5 * tr);
    } else {
        e.conjugate = false;
        double r = std::sqrt(disc);
        // Stable splitting: larger root by sign of tr, smaller via product.
        double big = 0.5 * tr + (tr >= 0.0 ? r : -r);
        e.l1 = big;
        e.l2 = (big != 0.0) ? de / big : 0.5 * tr - (tr >= 0.0 ? r : -r);
    }
    return e;
}

RoundTrip roundtrip_matrix(const Mat2& r1, const Mat2& r2, double two_kappa_l) {
    if (!(two_kappa_l >= 0.0))
        throw std::domain_error("roundtrip_matrix: need 2*kappa*L >= 0");
    RoundTrip rt;
    rt.a0 = std::exp(-two_kappa_l) * (r1 * r2);
    rt.eig = eigenvalues_2x2(rt.a0);
    return rt;
}

}  // namespace casimir
