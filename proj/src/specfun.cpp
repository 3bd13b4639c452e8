#include "casimir/specfun.hpp"

#include <array>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir::specfun {

using constants::pi;

double bernoulli_poly(int n, double z) {
    switch (n) {
        case 1: return z - 0.5;
        case 2: return z * z - z + 1.0 / 6.0;
        case 3: return z * (z * (z - 1.5) + 0.5);
        case 4: return z * z * (z * (z - 2.0) + 1.0) - 1.0 / 30.0;
        default: throw std::invalid_argument("bernoulli_poly: n must be in 1..4");
    }
}

namespace {

// zeta on the integers needed by the expansion around w = 1 (argument in [-70, 9]).
double zeta_int_uncached(int m) {
    if (m == 1) throw std::logic_error("zeta_int: pole at 1");
    if (m >= 2) {
        static const double low[8] = {
            1.6449340668482264365,   // zeta(2) = pi^2/6
            1.2020569031595942854,   // zeta(3)
            1.0823232337111381916,   // zeta(4) = pi^4/90
            1.0369277551433699263,   // zeta(5)
            1.0173430619844491397,   // zeta(6) = pi^6/945
            1.0083492773819228268,   // zeta(7)
            1.0040773561979443394,   // zeta(8) = pi^8/9450
            1.0020083928260822144};  // zeta(9)
        if (m <= 9) return low[m - 2];
        double s = 0.0;  // tail beyond j=40 is < 40^{-10} ~ 1e-16
        for (int j = 40; j >= 1; --j) s += std::pow(static_cast<double>(j), -m);
        return s;
    }
    // m <= 0: zeta(-j) with j = -m >= 0.
    int j = -m;
    if (j == 0) return -0.5;
    if (j % 2 == 0) return 0.0;
    // Functional equation: zeta(1-2k) = 2 (-1)^k (2k-1)! zeta(2k) / (2 pi)^{2k}.
    int two_k = j + 1;
    double lg = std::lgamma(static_cast<double>(two_k));  // log (2k-1)!
    double val = 2.0 * std::exp(lg - two_k * std::log(2.0 * pi)) * zeta_int_uncached(two_k);
    return ((two_k / 2) % 2 == 0) ? val : -val;
}

double zeta_int(int m) {
    static const auto table = [] {
        std::array<double, 80> t{};
        for (int i = 0; i < 80; ++i) {
            int arg = i - 70;  // covers [-70, 9]
            t[i] = (arg == 1) ? 0.0 : zeta_int_uncached(arg);
        }
        return t;
    }();
    if (m < -70 || m > 9) throw std::logic_error("zeta_int: out of cached range");
    return table[m + 70];
}

// Li_n(e^mu) for complex mu with |mu| < 2 pi:
//   Li_n(e^mu) = mu^{n-1}/(n-1)! (H_{n-1} - log(-mu)) + sum_{k>=0, k != n-1} zeta(n-k) mu^k/k!
std::complex<double> polylog_exp_series(int n, std::complex<double> mu) {
    static const double harmonic[5] = {0.0, 0.0, 1.0, 1.5, 11.0 / 6.0};
    if (mu == std::complex<double>(0.0, 0.0)) {
        if (n < 2) throw std::domain_error("polylog: divergent at w=1, phase=0 for n=1");
        return {zeta_int(n), 0.0};
    }
    std::complex<double> res = std::pow(mu, n - 1) * (harmonic[n] - std::log(-mu));
    double fact = 1.0;
    for (int i = 2; i < n; ++i) fact *= i;
    res /= fact;
    std::complex<double> mupow = 1.0;
    fact = 1.0;
    for (int k = 0; k <= 64; ++k) {
        if (k > 0) {
            mupow *= mu;
            fact *= k;
        }
        if (k != n - 1) {
            double z = zeta_int(n - k);
            if (z == 0.0) continue;  // zeta at negative even integers
            std::complex<double> term = z * mupow / fact;
            res += term;
            if (k > 8 && std::abs(term) < 1e-18 * (std::abs(res) + 1e-30)) break;
        }
    }
    return res;
}

// Direct series sum for |w| well below 1.
std::complex<double> polylog_direct_series(int n, double w, double phase) {
    std::complex<double> zc = std::polar(w, phase);
    std::complex<double> p = zc, sum = 0.0;
    long m_cap = static_cast<long>(-40.0 / std::log(w)) + 64;
    for (long m = 1; m <= m_cap; ++m) {
        sum += p / std::pow(static_cast<double>(m), n);
        if (m > 8 && std::abs(p) / std::pow(static_cast<double>(m), n) <
                         1e-17 * (std::abs(sum) + 1e-30))
            break;
        p *= zc;
    }
    return sum;
}

std::complex<double> polylog_complex(int n, double w, double phase) {
    if (n < 1 || n > 4) throw std::invalid_argument("polylog: n must be in 1..4");
    if (w < 0.0) {  // w e^{i phase} = |w| e^{i (phase + pi)}
        w = -w;
        phase += pi;
    }
    if (!(w <= 1.0)) throw std::domain_error("polylog: need |w| <= 1");
    if (w == 0.0) return 0.0;
    if (n == 1) {
        // Elementary: -log(1 - w e^{i phase}).
        double a = 1.0 - 2.0 * w * std::cos(phase) + w * w;
        if (a == 0.0) throw std::domain_error("polylog: divergent at w=1, phase=0 for n=1");
        return {-0.5 * std::log(a),
                std::atan2(w * std::sin(phase), 1.0 - w * std::cos(phase))};
    }
    if (w <= 0.75) return polylog_direct_series(n, w, phase);
    // Near the unit circle: expansion in mu = log(w) + i*phase reduced to (-pi, pi].
    double pr = std::remainder(phase, 2.0 * pi);  // in [-pi, pi]
    return polylog_exp_series(n, {std::log(w), pr});
}

}  // namespace

double polylog_cos(int n, double w, double phase) {
    return polylog_complex(n, w, phase).real();
}

double polylog_sin(int n, double w, double phase) {
    return polylog_complex(n, w, phase).imag();
}

double polylog(int n, double w) { return polylog_cos(n, w, 0.0); }

double bessel_k0(double z) {
    if (!(z > 0.0)) throw std::domain_error("bessel_k0: need z > 0");
    return boost::math::cyl_bessel_k(0, z);
}

double bessel_k1(double z) {
    if (!(z > 0.0)) throw std::domain_error("bessel_k1: need z > 0");
    return boost::math::cyl_bessel_k(1, z);
}

double bessel_k2(double z) {
    if (!(z > 0.0)) throw std::domain_error("bessel_k2: need z > 0");
    if (z > 740.0) return 0.0;  // below double underflow of e^{-z}
    return boost::math::cyl_bessel_k(2, z);
}

AngularFunctions angular_functions(int l_max, double mu) {
    if (l_max < 1) throw std::invalid_argument("angular_functions: l_max must be >= 1");
    AngularFunctions out;
    out.pi_l.assign(l_max + 1, LogScaled::zero());
    out.tau_l.assign(l_max + 1, LogScaled::zero());
    // Renormalized recurrence: carry mantissas p1 = pi_l / e^S, p0 = pi_{l-1} / e^S.
    double p0 = 0.0;        // pi_0
    double p1 = 1.0;        // pi_1
    double log_scale = 0.0;
    out.pi_l[1] = LogScaled::from_value(1.0);
    out.tau_l[1] = LogScaled::from_value(mu);
    for (int l = 2; l <= l_max; ++l) {
        double p2 = ((2.0 * l - 1.0) * mu * p1 - static_cast<double>(l) * p0) /
                    (static_cast<double>(l) - 1.0);
        double tau = static_cast<double>(l) * mu * p2 - (static_cast<double>(l) + 1.0) * p1;
        auto rescale = [&](double v) {
            return v == 0.0 ? LogScaled::zero()
                            : LogScaled::from_log(std::log(std::fabs(v)) + log_scale,
                                                  v > 0.0 ? 1 : -1);
        };
        out.pi_l[l] = rescale(p2);
        out.tau_l[l] = rescale(tau);
        p0 = p1;
        p1 = p2;
        double m = std::max(std::fabs(p0), std::fabs(p1));
        if (m > 1e250) {
            p0 /= m;
            p1 /= m;
            log_scale += std::log(m);
        }
    }
    return out;
}

ModSphericalBessel mod_spherical_bessel_log(int l_max, double x) {
    if (!(x > 0.0)) throw std::domain_error("mod_spherical_bessel_log: need x > 0");
    if (l_max < 0) throw std::invalid_argument("mod_spherical_bessel_log: l_max must be >= 0");
    ModSphericalBessel out;
    out.x = x;
    out.log_i.assign(l_max + 1, 0.0);
    out.log_k.assign(l_max + 1, 0.0);

    // i_l: downward Miller recurrence i_l = i_{l+2} + (2l+3)/x * i_{l+1},
    // anchored at l = 0: log i_0 = x + log((1 - e^{-2x}) / (2x)).
    const double log_i0 = x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0 * x);
    {
        int m_start = l_max + 50 + static_cast<int>(2.0 * std::sqrt(static_cast<double>(l_max)));
        std::vector<double> mant(l_max + 1, 0.0);
        double f2 = 0.0, f1 = 1e-280, log_scale = 0.0;
        for (int l = m_start; l >= 0; --l) {
            double f0 = f2 + (2.0 * l + 3.0) / x * f1;
            if (l <= l_max) mant[l] = f0;
            f2 = f1;
            f1 = f0;
            if (f1 > 1e250) {
                double inv = 1e-250;
                f1 *= inv;
                f2 *= inv;
                log_scale += std::log(1e250);
                for (int j = std::max(l, 0); j <= l_max; ++j) mant[j] *= inv;
            }
        }
        double log_anchor = log_i0 - std::log(mant[0]);
        for (int l = 0; l <= l_max; ++l)
            out.log_i[l] = std::log(mant[l]) + log_anchor;
    }

    // k_l: stable upward recurrence k_{l+1} = k_{l-1} + (2l+1)/x * k_l.
    const double log_pref = std::log(pi / 2.0) - x;
    double k0 = 1.0 / x;                 // k_0 / pref
    double k1 = 1.0 / x + 1.0 / (x * x); // k_1 / pref
    double log_scale = log_pref;
    out.log_k[0] = std::log(k0) + log_scale;
    if (l_max >= 1) out.log_k[1] = std::log(k1) + log_scale;
    for (int l = 1; l < l_max; ++l) {
        double k2 = k0 + (2.0 * l + 1.0) / x * k1;
        out.log_k[l + 1] = std::log(k2) + log_scale;
        k0 = k1;
        k1 = k2;
        if (k1 > 1e250) {
            k0 *= 1e-250;
            k1 *= 1e-250;
            log_scale += std::log(1e250);
        }
    }
    return out;
}

double mod_spherical_i(int l, double x) {
    double lv = mod_spherical_bessel_log(l, x).log_i[l];
    if (lv > 709.0) throw std::overflow_error("mod_spherical_i: result overflows double");
    return std::exp(lv);
}

double mod_spherical_k(int l, double x) {
    double lv = mod_spherical_bessel_log(l, x).log_k[l];
    if (lv > 709.0) throw std::overflow_error("mod_spherical_k: result overflows double");
    return std::exp(lv);
}

}  // namespace casimir::specfun
