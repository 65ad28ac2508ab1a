#ifndef SLNFIT_TESTS_ORACLES_HPP
#define SLNFIT_TESTS_ORACLES_HPP

// Test-side reference numerics, deliberately independent of the library's
// implementation paths: refining trapezoid / adaptive Simpson quadrature,
// bisection inversion, and the two-sided KS statistic.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace oracle {

// Trapezoid rule with interval doubling until successive estimates agree.
template <class F>
double trapezoid(F&& f, double a, double b, double tol = 1e-12, int max_level = 26) {
    double h = b - a;
    double t = 0.5 * h * (f(a) + f(b));
    std::size_t n = 1;
    for (int level = 0; level < max_level; ++level) {
        double mid_sum = 0.0;
        const double step = h / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            mid_sum += f(a + (static_cast<double>(i) + 0.5) * step);
        }
        const double t_next = 0.5 * (t + step * mid_sum);
        if (level > 3 && std::abs(t_next - t) < tol * (1.0 + std::abs(t_next))) return t_next;
        t = t_next;
        n *= 2;
    }
    return t;
}

namespace detail {
template <class F>
double simpson_rec(F& f, double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

// Adaptive Simpson quadrature with Richardson correction.
template <class F>
double simpson(F&& f, double a, double b, double tol = 1e-12) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Owen's T by trapezoid refinement of the defining integral.
inline double owen_t(double x, double a, double tol = 1e-13) {
    if (a == 0.0) return 0.0;
    const double sign = a < 0.0 ? -1.0 : 1.0;
    const double hi = std::abs(a);
    const double x2 = x * x;
    const double val = trapezoid(
        [x2](double t) { return std::exp(-0.5 * x2 * (1.0 + t * t)) / (1.0 + t * t); }, 0.0, hi,
        tol);
    return sign * val / (2.0 * std::numbers::pi);
}

// Inverts a monotone increasing f on [lo, hi] by plain bisection.
template <class F>
double bisect(F&& f, double target, double lo, double hi, int steps = 200) {
    for (int i = 0; i < steps; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Two-sided Kolmogorov-Smirnov statistic of sorted samples against a CDF.
inline double ks_statistic(std::span<const double> sorted,
                           const std::function<double(double)>& cdf) {
    const double n = static_cast<double>(sorted.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double F = cdf(sorted[i]);
        const double d = static_cast<double>(i);
        worst = std::max(worst, std::max((d + 1.0) / n - F, F - d / n));
    }
    return worst;
}

// 1% two-sided KS critical value (asymptotic), per-test convention 1.63/sqrt(n).
inline double ks_critical_1pct(std::size_t n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

// Sample mean and (population) variance.
struct MeanVar {
    double mean = 0.0;
    double var = 0.0;
};

inline MeanVar mean_var(std::span<const double> xs) {
    double m = 0.0;
    for (double v : xs) m += v;
    m /= static_cast<double>(xs.size());
    double s2 = 0.0;
    for (double v : xs) s2 += (v - m) * (v - m);
    s2 /= static_cast<double>(xs.size());
    return {m, s2};
}

}  // namespace oracle

#endif
