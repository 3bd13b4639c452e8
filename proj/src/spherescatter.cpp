#include "casimir/spherescatter.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

using constants::pi;

ScatteringKinematics ScatteringKinematics::from_s(double s) {
    if (!(s >= 1.0)) throw std::domain_error("ScatteringKinematics: need s >= 1");
    return {s, 1.0 - s * s, 1.0 - 2.0 * s * s};
}

ScatteringKinematics ScatteringKinematics::from_t(double t) {
    if (!(t > 0.0 && t <= 1.0)) throw std::domain_error("ScatteringKinematics: need 0 < t <= 1");
    return from_s(1.0 / t);
}

ScatteringKinematics ScatteringKinematics::from_mu(double mu) {
    if (!(mu <= -1.0)) throw std::domain_error("ScatteringKinematics: need mu <= -1");
    return from_s(std::sqrt(0.5 * (1.0 - mu)));
}

Mat2 leading_reflection(const SphereMaterial& mat, const ScatteringKinematics& kin) {
    if (mat.kind == SphereMaterial::Kind::pemc) return plane_reflection_pemc(mat.theta);
    return plane_reflection_dielectric(mat.n, 1.0 / kin.s);
}

double diffractive_correction(Pol p_out, Pol p_in, const SphereMaterial& mat,
                              const ScatteringKinematics& kin) {
    if (p_out != p_in)
        throw std::invalid_argument(
            "diffractive_correction: cross channel has no ratio form (leading term vanishes); "
            "use diffractive_matrix");
    const double s = kin.s, csq = kin.c_sq;
    const double s3 = s * s * s;
    const double first_te = (1.0 - 2.0 * s * s) / (2.0 * s3);
    const double first_tm = -1.0 / (2.0 * s3);
    if (mat.kind == SphereMaterial::Kind::pemc) {
        // Polarization-conserving s_{pp} only defined where the leading
        // coefficient is nonzero (theta != pi/4); given as d_{pp}/r_{pp}.
        double c2 = std::cos(2.0 * mat.theta);
        if (std::fabs(c2) < 1e-12)
            throw std::domain_error("diffractive_correction: PEMC theta=pi/4 has vanishing "
                                    "diagonal leading term");
        double g = first_te;  // (1-2s^2)/(2s^3)
        double h = csq / s3;
        if (p_in == Pol::TM) return (g * c2 - h * std::pow(std::cos(mat.theta), 2)) / c2;
        return (-g * c2 - h * std::pow(std::sin(mat.theta), 2)) / (-c2);
    }
    const double n = mat.n;
    if (!(n > 1.0)) throw std::invalid_argument("diffractive_correction: need n > 1");
    const double n2 = n * n;
    const double root = std::sqrt(n2 - csq);
    if (p_in == Pol::TE) {
        return first_te + (1.0 / s) / (csq + s * root) -
               (2.0 * n2 - csq) / (2.0 * std::pow(n2 - csq, 1.5));
    }
    const double d1 = (n2 * s * s - csq);
    return first_tm + (1.0 / s) / (csq - s * root) -
           (csq / s3) *
               (2.0 * n2 * n2 * s * s - n2 * csq * (1.0 + s * s - std::pow(s, 4)) +
                std::pow(csq, 3)) /
               ((n2 - csq) * d1 * d1) +
           (n2 / (2.0 * std::pow(n2 - csq, 1.5))) *
               (2.0 * n2 * n2 - n2 * csq * (1.0 + csq) - csq * csq) / (d1 * d1);
}

Mat2 diffractive_matrix(const SphereMaterial& mat, const ScatteringKinematics& kin) {
    const double s = kin.s, csq = kin.c_sq;
    const double s3 = s * s * s;
    if (mat.kind == SphereMaterial::Kind::pemc) {
        const double th = mat.theta;
        const double c2 = std::cos(2.0 * th), s2 = std::sin(2.0 * th);
        const double g = (1.0 - 2.0 * s * s) / (2.0 * s3);
        const double h = csq / s3;
        const double q = 1.0 / (2.0 * s);
        Mat2 d;
        d(0, 0) = g * c2 - h * std::pow(std::cos(th), 2);   // TM,TM
        d(1, 1) = -g * c2 - h * std::pow(std::sin(th), 2);  // TE,TE
        d(0, 1) = d(1, 0) = q * s2;
        return d;
    }
    Mat2 r = leading_reflection(mat, kin);
    Mat2 d;
    d(0, 0) = r(0, 0) * diffractive_correction(Pol::TM, Pol::TM, mat, kin);
    d(1, 1) = r(1, 1) * diffractive_correction(Pol::TE, Pol::TE, mat, kin);
    return d;
}

WkbAmplitude wkb_amplitude(Pol p_out, Pol p_in, SizeParameter sz,
                           const ScatteringKinematics& kin, const SphereMaterial& mat,
                           WkbOrder order) {
    if (!(sz.xi_tilde > 0.0)) throw std::domain_error("wkb_amplitude: need xi_tilde > 0");
    const int io = static_cast<int>(p_out), ii = static_cast<int>(p_in);
    double r = leading_reflection(mat, kin)(io, ii);
    if (order == WkbOrder::with_first_correction)
        r += diffractive_matrix(mat, kin)(io, ii) / sz.xi_tilde;
    WkbAmplitude out;
    out.r_factor = r;
    out.amplitude = LogScaled::from_value(r) *
                    LogScaled::from_log(std::log(sz.xi_tilde / 2.0) + 2.0 * sz.xi_tilde * kin.s, 1);
    return out;
}

double zero_freq_X(Pol p_out, Pol p_in, double theta, double l) {
    if (!(l > 0.0)) throw std::domain_error("zero_freq_X: need l > 0");
    const double a = 1.0;                // TM-mode model parameter (PEC)
    const double b = -l / (l + 1.0);     // TE-mode model parameter (PEC)
    const double st2 = std::pow(std::sin(theta), 2), ct2 = std::pow(std::cos(theta), 2);
    if (p_out == p_in)
        return p_in == Pol::TE ? st2 * a + ct2 * b : ct2 * a + st2 * b;
    return -0.5 * std::sin(2.0 * theta) * (a - b);
}

LogScaled zero_freq_amplitude_series(Pol p_out, Pol p_in, double theta, double xi_tilde,
                                     double mu, long l_cap) {
    if (!(mu < 0.0)) throw std::domain_error("zero_freq_amplitude_series: need mu < 0");
    if (!(xi_tilde > 0.0)) throw std::domain_error("zero_freq_amplitude_series: need xi_tilde > 0");
    const double z = -2.0 * xi_tilde * xi_tilde * mu;
    // term_l = X(l) * z^l/(2l)!, accumulated in log-scaled form.
    LogScaled sum = LogScaled::zero();
    double log_fac = 0.0;  // log of z^l/(2l)!
    for (long l = 1; l <= l_cap; ++l) {
        log_fac += std::log(z) - std::log(2.0 * l - 1.0) - std::log(2.0 * l);
        double x = zero_freq_X(p_out, p_in, theta, static_cast<double>(l));
        if (x != 0.0)
            sum += LogScaled::from_log(log_fac + std::log(std::fabs(x)), x > 0.0 ? 1 : -1);
        // Terms peak near l ~ sqrt(z)/2; stop once well past the peak and tiny.
        if (!sum.is_zero() && l > static_cast<long>(std::sqrt(z)) + 8 &&
            log_fac < sum.log_mag - 42.0)
            return sum * LogScaled::from_value(xi_tilde);
    }
    throw std::runtime_error("zero_freq_amplitude_series: l_cap exceeded before convergence");
}

LogScaled mie_oracle_pec(Pol pol, double xi_tilde, double mu) {
    if (!(xi_tilde >= 1.0 && xi_tilde <= 500.0))
        throw std::domain_error("mie_oracle_pec: supported range xi_tilde in [1, 500]");
    if (!(mu <= -1.0)) throw std::domain_error("mie_oracle_pec: need mu <= -1");
    const ScatteringKinematics kin = ScatteringKinematics::from_mu(mu);
    const int l_max = static_cast<int>(std::ceil(5.0 * xi_tilde * kin.s)) + 50;
    const auto bes = specfun::mod_spherical_bessel_log(l_max, xi_tilde);
    const auto ang = specfun::angular_functions(l_max, mu);
    const LogScaled x = LogScaled::from_value(xi_tilde);
    const LogScaled half_pi = LogScaled::from_value(pi / 2.0);

    LogScaled sum = LogScaled::zero();
    double peak_log = -std::numeric_limits<double>::infinity();
    for (int l = 1; l <= l_max; ++l) {
        const int sgn = (l % 2 == 0) ? 1 : -1;
        const LogScaled i_l = LogScaled::from_log(bes.log_i[l], 1);
        const LogScaled k_l = LogScaled::from_log(bes.log_k[l], 1);
        const LogScaled i_lm1 = LogScaled::from_log(bes.log_i[l - 1], 1);
        const LogScaled k_lm1 = LogScaled::from_log(bes.log_k[l - 1], 1);
        // Sign convention fixed by requiring the WKB limit r_TE,TE = -1,
        // r_TM,TM = +1 at large size parameter.
        const LogScaled r_mm = half_pi * LogScaled::from_value(sgn) * (i_l / k_l);
        const LogScaled r_ee = -(half_pi * LogScaled::from_value(sgn)) *
                               ((x * i_lm1 - LogScaled::from_value(l) * i_l) /
                                (x * k_lm1 + LogScaled::from_value(l) * k_l));
        const LogScaled pref = LogScaled::from_value(
            -(2.0 * l + 1.0) / (static_cast<double>(l) * (l + 1.0)));
        const LogScaled& tau = ang.tau_l[l];
        const LogScaled& pil = ang.pi_l[l];
        LogScaled term = (pol == Pol::TE) ? pref * (tau * r_mm + pil * r_ee)
                                          : pref * (tau * r_ee + pil * r_mm);
        sum += term;
        if (!term.is_zero()) peak_log = std::max(peak_log, term.log_mag);
        if (!term.is_zero() && !sum.is_zero() &&
            l > static_cast<int>(xi_tilde * std::sqrt(kin.s * kin.s - 1.0)) + 8 &&
            term.log_mag < peak_log - 46.0)
            return sum;
    }
    return sum;
}

}  // namespace casimir
