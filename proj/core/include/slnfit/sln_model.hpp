#ifndef SLNFIT_SLN_MODEL_HPP
#define SLNFIT_SLN_MODEL_HPP

// Exact moments and probit-scale tail slopes of a sum of independent
// lognormals, computed from the component list alone.

#include <string>
#include <vector>

#include "slnfit/dists.hpp"

namespace slnfit {

/// The full sum specification: N >= 1 independent lognormal summands.
class SlnSpec {
public:
    explicit SlnSpec(std::vector<LognormalComponent> components);

    const std::vector<LognormalComponent>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }

private:
    std::vector<LognormalComponent> components_;
};

/// First two central moments of the sum. Overflow is flagged by +inf fields.
struct SlnMoments {
    double m = 0.0;   // mean
    double d2 = 0.0;  // variance
};

/// log(m) and log(d2), accumulated log-sum-exp style so they stay finite for
/// inputs whose linear moments overflow.
struct SlnLogMoments {
    double log_m = 0.0;
    double log_d2 = 0.0;
};

/// p-th moment of one lognormal about the origin: e^(mu p + sigma^2 p^2 / 2).
/// Returns +inf on overflow. Throws std::domain_error for p < 1.
double component_moment(const LognormalComponent& c, int p);

SlnMoments sln_moments(const SlnSpec& s);
SlnLogMoments sln_log_moments(const SlnSpec& s);

/// Right-tail slope of the sum's CDF on lognormal probability scale: 1/max sigma_i.
double sln_right_slope(const SlnSpec& s);

/// Left-tail limiting slope: sqrt(sum sigma_i^-2).
double sln_left_slope(const SlnSpec& s);

/// Parse {"components":[{"mu_db":..,"sigma_db":..},..]} or the natural-log
/// form {"mu":..,"sigma":..}. Exactly one unit system per document.
/// Throws std::runtime_error on malformed input.
SlnSpec sln_spec_from_json(const std::string& text);

}  // namespace slnfit

#endif
