#ifndef SLNFIT_SRC_QUADRATURE_HPP
#define SLNFIT_SRC_QUADRATURE_HPP

// Internal: fixed-order Gauss-Legendre rule shared by the special-function
// and distribution translation units. Not installed.

#include <array>
#include <cmath>
#include <numbers>

namespace slnfit::detail {

// 20-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on the
// Legendre recurrence. Built once, thread-safe (magic static).
struct GaussLegendre20 {
    std::array<double, 20> node{};
    std::array<double, 20> weight{};

    GaussLegendre20() {
        constexpr int n = 20;
        for (int i = 0; i < n / 2; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 64; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
                }
                pp = n * (x * p0 - p1) / (x * x - 1.0);
                const double dx = p0 / pp;
                x -= dx;
                if (std::abs(dx) < 1e-16 * std::abs(x)) break;
            }
            node[i] = -x;
            node[n - 1 - i] = x;
            weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
        }
    }
};

inline const GaussLegendre20& gl20() {
    static const GaussLegendre20 rule;
    return rule;
}

// Integrates f over [lo, hi] with `panels` equal Gauss-Legendre panels.
template <class F>
double gl_integrate(F&& f, double lo, double hi, int panels) {
    const auto& rule = gl20();
    const double h = (hi - lo) / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double mid = lo + (k + 0.5) * h;
        const double half = 0.5 * h;
        double acc = 0.0;
        for (int i = 0; i < 20; ++i) {
            acc += rule.weight[i] * f(mid + half * rule.node[i]);
        }
        sum += acc * half;
    }
    return sum;
}

}  // namespace slnfit::detail

#endif
