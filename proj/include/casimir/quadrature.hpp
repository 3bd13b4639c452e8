#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace casimir::quad {

struct Rule {
    std::vector<double> x;  // nodes on (-1, 1)
    std::vector<double> w;  // weights
};

// Gauss-Legendre rule of order n, computed once and cached.  Thread-safe.
const Rule& gauss_legendre(int n);

struct Result {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
};

// Fixed-order panel integral of f over [a, b].
double panel(const std::function<double(double)>& f, double a, double b, int n);

// Panel integral with order doubling until |change| < abs_tol (or order cap).
Result panel_adaptive(const std::function<double(double)>& f, double a, double b,
                      double abs_tol, int n_start = 8, int n_max = 1024);

// Integral of f over (0, inf) for integrands with an integrable singularity or
// power/log behavior at 0 and (super)exponential decay at infinity.  Geometric
// panels [2^k, 2^{k+1}] resolve both ends; rel_tol is relative to the integral
// of |f| so cancellation-free accuracy is preserved near zeros of the total.
Result integrate_decaying(const std::function<double(double)>& f, double rel_tol,
                          double upper_hint = 128.0);

// Integral of f over [a, b] with panel bisection until the doubling estimate
// meets abs_tol (spread over panels).
Result integrate_finite(const std::function<double(double)>& f, double a, double b,
                        double rel_tol);

}  // namespace casimir::quad
