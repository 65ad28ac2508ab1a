#ifndef SLNFIT_LSKN_FIT_HPP
#define SLNFIT_LSKN_FIT_HPP

// Log-skew-normal parameter estimation for a sum of lognormals: linear-domain
// moment matching under the lower-tail-slope constraint, plus the
// Fenton-Wilkinson and log-domain moment-matching baselines.

#include <span>
#include <stdexcept>
#include <string>

#include "slnfit/dists.hpp"
#include "slnfit/sln_model.hpp"

namespace slnfit {

/// Mean and variance of the log skew normal L = e^X, X ~ SN(p).
/// Overflow is flagged by +inf fields.
struct LsknMoments {
    double xi = 0.0;      // mean
    double varpi2 = 0.0;  // variance
};

enum class FitMethod { lskn_slope_match, fenton_wilkinson, log_domain_mom };

struct FitResult {
    SkewNormalParams params;
    double lambda0 = 0.0;   // initial guess from the upper-tail slope match
    double residual = 0.0;  // final mismatch of the cv^2 equation
    int iterations = 0;
    FitMethod method = FitMethod::lskn_slope_match;
};

/// Thrown when the cv^2 equation has no sign change on [0, lambda_max];
/// carries the residual at both bracket ends in the message.
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

LsknMoments lskn_moments(const SkewNormalParams& p);

/// RHS(lambda) - LHS of the cv^2 matching equation, where with
/// S = sum sigma_i^-2, u = lambda/sqrt(S), omega^2 = (1+lambda^2)/S:
///   RHS = e^(omega^2) Phi(2u) / (2 Phi(u)^2) - 1,   LHS = D^2/m^2.
double cv2_residual(double lambda, const SlnSpec& s);

/// The slope-match fit: solves cv2_residual = 0 for lambda >= 0 (bracketed
/// bisection/secant seeded at lambda0), then
///   omega = sqrt((1+lambda^2)/S),
///   epsilon = ln m - omega^2/2 - ln(2 Phi(beta omega)),
/// so the fitted mean matches m exactly and the lower-tail slope
/// sqrt(1+lambda^2)/omega equals sqrt(S) by construction. N = 1 returns the
/// exact lognormal without solving. Throws FitError when no bracket exists.
FitResult fit_lskn(const SlnSpec& s);

/// Classic lognormal baseline: sigma^2 = ln(1 + D^2/m^2), mu = ln m - sigma^2/2.
LognormalComponent fit_fenton_wilkinson(const SlnSpec& s);

/// Log-domain moment matching on samples of the sum: inverts the skew-normal
/// mean/variance/skewness relations for ln(samples). Sample skewness is
/// clamped to +-0.9952, strictly inside the SN-attainable range. Throws
/// std::domain_error on non-positive samples.
SkewNormalParams fit_log_domain_mom(std::span<const double> samples);

std::string fit_method_name(FitMethod m);
std::string fit_result_to_json(const FitResult& r);

}  // namespace slnfit

#endif
