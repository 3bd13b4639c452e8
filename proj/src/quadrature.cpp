#include "casimir/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "casimir/constants.hpp"

namespace casimir::quad {

namespace {

Rule compute_rule(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    // Newton iteration on P_n; nodes symmetric about 0.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int l = 2; l <= n; ++l) {
                double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.x[i] = -x;
        r.w[i] = w;
        r.x[n - 1 - i] = x;
        r.w[n - 1 - i] = w;
    }
    return r;
}

}  // namespace

const Rule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::mutex mtx;
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double panel(const std::function<double(double)>& f, double a, double b, int n) {
    const Rule& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

Result panel_adaptive(const std::function<double(double)>& f, double a, double b,
                      double abs_tol, int n_start, int n_max) {
    double prev = panel(f, a, b, n_start);
    for (int n = 2 * n_start; n <= n_max; n *= 2) {
        double cur = panel(f, a, b, n);
        double diff = std::fabs(cur - prev);
        if (diff <= abs_tol) return {cur, diff};
        prev = cur;
    }
    return {prev, std::fabs(prev) * 1e-6 + abs_tol * 10};
}

Result integrate_decaying(const std::function<double(double)>& f, double rel_tol,
                          double upper_hint) {
    if (!(rel_tol > 0)) throw std::invalid_argument("integrate_decaying: rel_tol must be > 0");
    // Pass 1: coarse scan to estimate the total magnitude scale sum |panel|.
    constexpr int k_lo = -45;
    int k_hi = 1 + static_cast<int>(std::ceil(std::log2(std::max(upper_hint, 2.0))));
    std::vector<double> coarse;
    double scale = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        double a = (k == k_lo) ? 0.0 : std::ldexp(1.0, k);
        double b = std::ldexp(1.0, k + 1);
        double v = panel(f, a, b, 24);
        coarse.push_back(v);
        scale += std::fabs(v);
    }
    if (scale == 0.0) return {0.0, 0.0};
    // Drop negligible trailing panels, then refine each remaining panel.
    double abs_tol = rel_tol * scale / (4.0 * coarse.size());
    Result total;
    for (int k = k_lo; k <= k_hi; ++k) {
        if (std::fabs(coarse[k - k_lo]) < abs_tol * 1e-3 && k > 3) continue;
        double a = (k == k_lo) ? 0.0 : std::ldexp(1.0, k);
        double b = std::ldexp(1.0, k + 1);
        Result pr = panel_adaptive(f, a, b, abs_tol, 16, 1024);
        total.value += pr.value;
        total.error += pr.error;
    }
    return total;
}

Result integrate_finite(const std::function<double(double)>& f, double a, double b,
                        double rel_tol) {
    if (!(rel_tol > 0)) throw std::invalid_argument("integrate_finite: rel_tol must be > 0");
    double scale = std::fabs(panel(f, a, b, 24));
    if (scale == 0.0) scale = 1e-300;
    double abs_tol = rel_tol * scale;
    // Bisect recursively with per-panel doubling.
    std::function<Result(double, double, double, int)> go =
        [&](double lo, double hi, double tol, int depth) -> Result {
        Result r = panel_adaptive(f, lo, hi, tol, 8, 64);
        if (r.error <= tol || depth >= 24) return r;
        double mid = 0.5 * (lo + hi);
        Result l = go(lo, mid, 0.5 * tol, depth + 1);
        Result rr = go(mid, hi, 0.5 * tol, depth + 1);
        return {l.value + rr.value, l.error + rr.error};
    };
    return go(a, b, abs_tol, 0);
}

}  // namespace casimir::quad
