#pragma once

#include <vector>

#include "casimir/logscaled.hpp"

namespace casimir::specfun {

// Bernoulli polynomial B_n(z), n in 1..4.
double bernoulli_poly(int n, double z);

// Truncated-lattice polylogarithms:
//   polylog_cos(n, w, phase) = sum_{m>=1} w^m cos(m*phase) / m^n
//   polylog_sin(n, w, phase) = sum_{m>=1} w^m sin(m*phase) / m^n
// Supported for n in 1..4, |w| <= 1 (negative w folds into the phase).
// Evaluated by direct series for
// w <= 0.75 and by the expansion of Li_n(e^mu) around mu = 0 otherwise
// (uniformly accurate up to and including w == 1, where the results agree
// with the Bernoulli-polynomial closed forms of the inversion formula).
// The only excluded point is n == 1, w == 1, phase == 0 (mod 2*pi), where
// the series diverges.
double polylog_cos(int n, double w, double phase);
double polylog_sin(int n, double w, double phase);

// Ordinary polylogarithm Li_n(w) for real -1 <= w <= 1 (phase 0 of the above).
double polylog(int n, double w);

// Modified Bessel functions of the second kind, z > 0.
double bessel_k0(double z);
double bessel_k1(double z);
double bessel_k2(double z);

// Angular functions pi_l(mu), tau_l(mu) of Mie theory, valid for any real mu
// (the imaginary-frequency saddle point has mu <= -1).  Entries are stored in
// log-scaled form because |pi_l| grows like exp(l*arccosh|mu|) for |mu| > 1.
struct AngularFunctions {
    std::vector<LogScaled> pi_l;   // index l = 0..l_max, pi_0 = 0
    std::vector<LogScaled> tau_l;  // tau_0 = 0
};
AngularFunctions angular_functions(int l_max, double mu);

// Modified spherical Bessel functions i_l(x) (first kind, downward Miller
// recurrence) and k_l(x) (second kind, upward recurrence), stored as logs of
// magnitudes; both are positive for x > 0.
struct ModSphericalBessel {
    std::vector<double> log_i;  // l = 0..l_max
    std::vector<double> log_k;
    double x;
};
ModSphericalBessel mod_spherical_bessel_log(int l_max, double x);

// Convenience unscaled accessors; throw std::overflow_error when the result
// does not fit a double.
double mod_spherical_i(int l, double x);
double mod_spherical_k(int l, double x);

}  // namespace casimir::specfun
