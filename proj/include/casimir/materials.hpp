#pragma once

#include <cmath>
#include <stdexcept>

namespace casimir {

// Polarization index convention: 0 = TM, 1 = TE everywhere.
enum class Pol { TM = 0, TE = 1 };

struct Mat2 {
    double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

    static Mat2 identity() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
    static Mat2 diag(double a, double b) { return {{{a, 0.0}, {0.0, b}}}; }

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    double trace() const { return m[0][0] + m[1][1]; }
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
        return r;
    }
    friend Mat2 operator*(double s, const Mat2& a) {
        Mat2 r = a;
        for (auto& row : r.m)
            for (auto& v : row) v *= s;
        return r;
    }
    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
        return r;
    }
};

// Duality angles of the two PEMC bodies; theta = 0 is PEC, theta = pi/2 is PMC.
struct PemcPair {
    double theta1;
    double theta2;

    PemcPair(double t1, double t2) : theta1(t1), theta2(t2) {
        if (!(t1 >= 0.0 && t1 <= constants_half_pi() && t2 >= 0.0 && t2 <= constants_half_pi()))
            throw std::invalid_argument("PemcPair: angles must lie in [0, pi/2]");
        if (t2 < t1) throw std::invalid_argument("PemcPair: require theta2 >= theta1");
    }
    double delta() const { return theta2 - theta1; }

   private:
    static double constants_half_pi() { return 1.5707963267948966; }
};

// Imaginary-frequency spectral point: xi is the imaginary frequency (rad/s),
// k the transverse wavenumber (1/m); kappa^2 = xi^2/c^2 + k^2.
struct SpectralPoint {
    double xi;
    double k;
    double kappa() const;
    double t() const { return xi / (299792458.0 * kappa()); }  // = xi/(c*kappa) in (0,1]
};

// Specular plane reflection matrix of a PEMC with duality angle theta,
// in the (TM, TE) basis; independent of kinematics.
Mat2 plane_reflection_pemc(double theta);

// Fresnel reflection matrix of a non-dispersive dielectric with refractive
// index n, evaluated at t = xi/(c*kappa); diagonal in (TM, TE).
Mat2 plane_reflection_dielectric(double n, double t);

// Eigenvalues of a real 2x2 matrix, kept in real arithmetic.  For a complex
// conjugate pair the pair is stored as magnitude w and phase phi
// (lambda = w e^{+-i phi}); otherwise the two real eigenvalues.
struct EigenPair {
    bool conjugate;
    double w = 0.0;    // modulus (conjugate case)
    double phi = 0.0;  // phase in [0, pi] (conjugate case)
    double l1 = 0.0;   // real eigenvalues otherwise
    double l2 = 0.0;
};
EigenPair eigenvalues_2x2(const Mat2& a);

// One-bounce round-trip operator at the saddle point for translation factor
// e^{-kappa*L} per pass: A0 = R1 * R2 * e^{-2 kappa L}, with its spectrum.
struct RoundTrip {
    Mat2 a0;
    EigenPair eig;
};
RoundTrip roundtrip_matrix(const Mat2& r1, const Mat2& r2, double two_kappa_l);

}  // namespace casimir
