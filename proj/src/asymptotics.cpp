#include "casimir/asymptotics.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

using constants::pi;

namespace {

double quartic(double d) {
    double q = d * (pi - d);
    return std::pow(pi, 4) - 30.0 * q * q;
}

void check_delta(double delta) {
    if (!(delta >= 0.0 && delta <= pi / 2.0 + 1e-15))
        throw std::domain_error("delta must lie in [0, pi/2]");
}

}  // namespace

double e_pfa_closed(double delta) {
    check_delta(delta);
    return -quartic(delta) / (720.0 * pi);
}

double delta_crit() {
    // Newton on q(d) = pi^4 - 30 d^2 (pi-d)^2, seeded at 0.75.
    double d = 0.75;
    for (int it = 0; it < 60; ++it) {
        double p = d * (pi - d);
        double f = std::pow(pi, 4) - 30.0 * p * p;
        double fp = -60.0 * p * (pi - 2.0 * d);
        double step = f / fp;
        d -= step;
        if (std::fabs(step) < 1e-16) break;
    }
    return d;
}

BetaCoefficients beta_coefficients(double delta, double u) {
    check_delta(delta);
    if (!(u >= 0.0 && u <= 0.25)) throw std::domain_error("beta_coefficients: u in [0, 1/4]");
    double q = quartic(delta);
    if (std::fabs(q) < 1e-8 * std::pow(pi, 4))
        throw NearCriticalError("beta_coefficients: pole at delta_crit; use e1_closed");
    BetaCoefficients b;
    b.beta_diff = -15.0 * (pi * pi - 6.0 * delta * (pi - delta)) / q;
    b.beta_geo = 1.0 / 3.0 - u + b.beta_diff / 3.0;
    b.beta1 = b.beta_diff + b.beta_geo;
    return b;
}

double e1_closed(double delta, double u) {
    check_delta(delta);
    return (20.0 * (pi * pi - 6.0 * delta * (pi - delta)) - (1.0 / 3.0 - u) * quartic(delta)) /
           (720.0 * pi);
}

double bessel_roundtrip_sum_asymptotic(double z) {
    if (!(z > 0.0)) throw std::domain_error("bessel_roundtrip_sum_asymptotic: need z > 0");
    return std::pow(pi, 4) / (720.0 * z) - pi * pi / 12.0 + 2.0 * pi * std::sqrt(z) / 3.0;
}

double bessel_roundtrip_sum(double z, const BesselSumOptions& opt) {
    if (!(z > 0.0)) throw std::domain_error("bessel_roundtrip_sum: need z > 0");
    if (!opt.force_direct && z < opt.branch_threshold)
        return bessel_roundtrip_sum_asymptotic(z);
    const double a = 4.0 * std::sqrt(z);
    double sum = 0.0;
    for (long r = 1; r <= opt.max_terms; ++r) {
        double term = specfun::bessel_k2(a * r) / (static_cast<double>(r) * r);
        sum += term;
        if (term < opt.term_tol * sum && r > 3) return sum;
    }
    throw std::runtime_error("bessel_roundtrip_sum: term cap exceeded");
}

SigmaPair sigma_pair(double t) {
    if (!(t > 0.0 && t <= 1.0)) throw std::domain_error("sigma_pair: need 0 < t <= 1");
    return {(2.0 - t * t) / 4.0, t * t / 4.0, t};
}

namespace {

// D(x) = sum_p Int_0^1 dt sigma_p B(sigma_p x) with adaptive t-order.
double ntlo_d_of_x(double x, double branch_threshold) {
    BesselSumOptions opt;
    opt.branch_threshold = branch_threshold;
    auto f = [&](double t) {
        if (t <= 0.0 || t > 1.0) return 0.0;
        SigmaPair s = sigma_pair(t);
        return s.sigma_te * bessel_roundtrip_sum(s.sigma_te * x, opt) +
               s.sigma_tm * bessel_roundtrip_sum(s.sigma_tm * x, opt);
    };
    double prev = quad::panel(f, 0.0, 1.0, 80);
    double cur = quad::panel(f, 0.0, 1.0, 160);
    if (std::fabs(cur - prev) > 1e-10 * std::fabs(cur)) cur = quad::panel(f, 0.0, 1.0, 320);
    return cur;
}

}  // namespace

double ntlo_energy_ratio(double x, double branch_threshold) {
    if (!(x > 0.0)) throw std::domain_error("ntlo_energy_ratio: need x > 0");
    return 360.0 * x * ntlo_d_of_x(x, branch_threshold) / std::pow(pi, 4);
}

NtloResult ntlo_energy(const Geometry& geom) {
    NtloResult r;
    r.x = geom.x();
    r.outside_validity = r.x > 0.1;
    r.beta32_analytic = 15.0 * (10.0 + 3.0 * pi) / (4.0 * std::pow(pi, 3));
    r.ratio_resummed = ntlo_energy_ratio(r.x);
    r.asymptotic_three_term =
        1.0 - (15.0 / (pi * pi)) * r.x + r.beta32_analytic * std::pow(r.x, 1.5);
    // Share of the x^{3/2} term per polarization: the coefficient is
    // proportional to Int_0^1 sigma_p^{3/2} dt.
    auto i32 = [&](bool te) {
        return quad::panel(
            [&](double t) {
                SigmaPair s = sigma_pair(std::max(t, 1e-300));
                return std::pow(te ? s.sigma_te : s.sigma_tm, 1.5);
            },
            0.0, 1.0, 200);
    };
    double ite = i32(true), itm = i32(false);
    r.te_share = ite / (ite + itm);
    return r;
}

double ntlo_extract_beta32(const std::vector<double>& xs) {
    if (xs.size() < 3)
        throw std::invalid_argument("ntlo_extract_beta32: need at least 3 grid points");
    // Residual res(x) = ratio(x) - 1 + (15/pi^2) x is fit with basis
    // {x^{3/2}, x^2 log x, x^2}; rows scaled by 1/res for relative weighting.
    // Use a small branch threshold so the Bessel-sum asymptotic bias stays
    // below the fit tolerance.
    const int m = 3;
    std::vector<std::vector<double>> a(xs.size(), std::vector<double>(m));
    for (size_t i = 0; i < xs.size(); ++i) {
        double x = xs[i];
        double res = ntlo_energy_ratio(x, 1e-8) - 1.0 + 15.0 * x / (pi * pi);
        a[i][0] = std::pow(x, 1.5) / res;
        a[i][1] = x * x * std::log(x) / res;
        a[i][2] = x * x / res;
    }
    // Normal equations for A c = 1 (all right-hand sides equal one).
    double ata[m][m] = {}, atb[m] = {};
    for (size_t i = 0; i < xs.size(); ++i)
        for (int j = 0; j < m; ++j) {
            atb[j] += a[i][j];
            for (int k = 0; k < m; ++k) ata[j][k] += a[i][j] * a[i][k];
        }
    // Gaussian elimination with partial pivoting.
    int idx[m] = {0, 1, 2};
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int rr = col + 1; rr < m; ++rr)
            if (std::fabs(ata[rr][col]) > std::fabs(ata[piv][col])) piv = rr;
        std::swap(ata[col], ata[piv]);
        std::swap(atb[col], atb[piv]);
        std::swap(idx[col], idx[piv]);
        for (int rr = col + 1; rr < m; ++rr) {
            double f = ata[rr][col] / ata[col][col];
            for (int cc = col; cc < m; ++cc) ata[rr][cc] -= f * ata[col][cc];
            atb[rr] -= f * atb[col];
        }
    }
    double c[m];
    for (int rr = m - 1; rr >= 0; --rr) {
        double s = atb[rr];
        for (int cc = rr + 1; cc < m; ++cc) s -= ata[rr][cc] * c[cc];
        c[rr] = s / ata[rr][rr];
    }
    return c[0];
}

}  // namespace casimir
