#ifndef SLNFIT_PROB_SCALE_HPP
#define SLNFIT_PROB_SCALE_HPP

// Lognormal probability scale: the transform G: F |-> Phi^-1(F(e^x)),
// empirical CDFs, tail-slope estimation and CDF-comparison metrics.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace slnfit {

/// CDF values outside (kProbitClip, 1 - kProbitClip) are dropped before the
/// probit so curves stay finite.
inline constexpr double kProbitClip = 1e-15;

/// Sorted-sample CDF; right-continuous step function with value k/n.
class EmpiricalCdf {
public:
    /// Takes ownership, sorts ascending. Requires at least 2 samples.
    explicit EmpiricalCdf(std::vector<double> samples);

    /// Fraction of samples <= x.
    double operator()(double x) const;

    /// Smallest sample x with operator()(x) >= p, for p in (0, 1].
    double quantile(double p) const;

    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted_samples() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

struct ProbitPoint {
    double x = 0.0;  // ln of the abscissa
    double y = 0.0;  // Phi^-1 of the CDF value
};

struct ProbitCurve {
    std::vector<ProbitPoint> points;
    std::size_t dropped = 0;  // points clipped by the probit guard
};

enum class TailSide { left, right };

/// Pointwise (x, Phi^-1(F(e^x))) over the given x grid; clipped points are
/// counted in `dropped`.
ProbitCurve g_transform(const std::function<double(double)>& cdf, std::span<const double> xs);

/// Least-squares slope over the outermost `window` points of the chosen side.
/// Throws std::invalid_argument when the curve has fewer than window+1 points.
double tail_slope_estimate(const ProbitCurve& curve, TailSide side, std::size_t window);

/// max |F_emp(x_i) - F(x_i)| over sample points whose empirical CDF lies in
/// [lo_p, hi_p]. Throws std::invalid_argument when no points qualify.
double max_cdf_error(const EmpiricalCdf& reference, const std::function<double(double)>& cdf,
                     double lo_p = 0.001, double hi_p = 0.999, int threads = 1);

/// One CSV column of probit values aligned to a shared x grid (NaN = clipped,
/// written as an empty cell).
struct ProbitColumn {
    std::string name;
    std::vector<double> y;
};

/// Evaluate Phi^-1(cdf(e^x)) on a grid; clipped entries become NaN.
std::vector<double> probit_values(const std::function<double(double)>& cdf,
                                  std::span<const double> xs);

/// Header `x,<name>,...`; one row per grid point; %.17g formatting.
void write_probit_csv(std::ostream& os, std::span<const double> xs,
                      std::span<const ProbitColumn> columns);

}  // namespace slnfit

#endif
