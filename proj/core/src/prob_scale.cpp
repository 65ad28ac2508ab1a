#include "slnfit/prob_scale.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "parallel.hpp"
#include "slnfit/specfun.hpp"

namespace slnfit {

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.size() < 2) {
        throw std::invalid_argument("EmpiricalCdf: need at least 2 samples");
    }
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::quantile(double p) const {
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument("EmpiricalCdf::quantile: p must lie in (0, 1]");
    }
    const double n = static_cast<double>(sorted_.size());
    auto idx = static_cast<std::size_t>(std::ceil(p * n));
    if (idx > 0) --idx;
    return sorted_[std::min(idx, sorted_.size() - 1)];
}

ProbitCurve g_transform(const std::function<double(double)>& cdf, std::span<const double> xs) {
    ProbitCurve out;
    out.points.reserve(xs.size());
    for (double x : xs) {
        const double p = cdf(std::exp(x));
        if (p > kProbitClip && p < 1.0 - kProbitClip) {
            out.points.push_back({x, norm_quantile(p)});
        } else {
            ++out.dropped;
        }
    }
    return out;
}

double tail_slope_estimate(const ProbitCurve& curve, TailSide side, std::size_t window) {
    if (window < 2 || curve.points.size() < window + 1) {
        throw std::invalid_argument("tail_slope_estimate: insufficient points for window");
    }
    const std::size_t n = curve.points.size();
    const std::size_t begin = side == TailSide::left ? 0 : n - window;

    double mx = 0.0, my = 0.0;
    for (std::size_t i = begin; i < begin + window; ++i) {
        mx += curve.points[i].x;
        my += curve.points[i].y;
    }
    mx /= static_cast<double>(window);
    my /= static_cast<double>(window);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = begin; i < begin + window; ++i) {
        const double dx = curve.points[i].x - mx;
        sxx += dx * dx;
        sxy += dx * (curve.points[i].y - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("tail_slope_estimate: degenerate abscissa window");
    }
    return sxy / sxx;
}

double max_cdf_error(const EmpiricalCdf& reference, const std::function<double(double)>& cdf,
                     double lo_p, double hi_p, int threads) {
    const auto& xs = reference.sorted_samples();
    const double n = static_cast<double>(xs.size());

    // sample i carries empirical CDF (i+1)/n
    std::size_t lo_i = static_cast<std::size_t>(std::ceil(lo_p * n));
    lo_i = lo_i > 0 ? lo_i - 1 : 0;
    const auto hi_n = static_cast<std::size_t>(std::floor(hi_p * n));
    if (hi_n == 0 || lo_i >= hi_n) {
        throw std::invalid_argument("max_cdf_error: no sample points in region");
    }
    const std::size_t count = hi_n - lo_i;

    const int t = detail::resolve_threads(threads, count);
    std::vector<double> partial(static_cast<std::size_t>(t), 0.0);
    std::atomic<int> slot{0};
    detail::parallel_for(count, t, [&](std::size_t lo, std::size_t hi) {
        const int my = slot.fetch_add(1);
        double worst = 0.0;
        for (std::size_t k = lo; k < hi; ++k) {
            const std::size_t i = lo_i + k;
            const double p_emp = static_cast<double>(i + 1) / n;
            worst = std::max(worst, std::abs(p_emp - cdf(xs[i])));
        }
        partial[static_cast<std::size_t>(my)] = worst;
    });
    return *std::max_element(partial.begin(), partial.end());
}

std::vector<double> probit_values(const std::function<double(double)>& cdf,
                                  std::span<const double> xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        const double p = cdf(std::exp(x));
        out.push_back(p > kProbitClip && p < 1.0 - kProbitClip
                          ? norm_quantile(p)
                          : std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

void write_probit_csv(std::ostream& os, std::span<const double> xs,
                      std::span<const ProbitColumn> columns) {
    os << "x";
    for (const auto& c : columns) os << ',' << c.name;
    os << '\n';
    char buf[32];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", xs[i]);
        os << buf;
        for (const auto& c : columns) {
            os << ',';
            if (i < c.y.size() && !std::isnan(c.y[i])) {
                std::snprintf(buf, sizeof buf, "%.17g", c.y[i]);
                os << buf;
            }
        }
        os << '\n';
    }
}

}  // namespace slnfit
