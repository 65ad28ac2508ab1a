#ifndef SLNFIT_DISTS_HPP
#define SLNFIT_DISTS_HPP

// The three distribution families: lognormal, skew normal, log skew normal.
// All parameters are held in natural-log units; dB values cross the boundary
// only through LognormalComponent::from_db.

namespace slnfit {

/// ln(10)/10, the factor mapping dB-domain normal parameters to natural log.
inline constexpr double kDbScale = 0.23025850929940456840;

/// One lognormal summand: ln L ~ N(mu, sigma^2), both in natural-log units.
struct LognormalComponent {
    double mu = 0.0;
    double sigma = 1.0;

    LognormalComponent() = default;
    LognormalComponent(double mu_, double sigma_);

    /// Construct from dB-domain mean and standard deviation.
    static LognormalComponent from_db(double mu_db, double sigma_db);
};

/// Skew normal location-scale family SN(lambda, epsilon, omega). The same
/// record parameterizes the log skew normal (its exp transform).
struct SkewNormalParams {
    double lambda = 0.0;   // shape / slant
    double epsilon = 0.0;  // location
    double omega = 1.0;    // scale, > 0

    SkewNormalParams() = default;
    SkewNormalParams(double lambda_, double epsilon_, double omega_);

    /// lambda / sqrt(1 + lambda^2); always in (-1, 1).
    double beta() const;
};

double lognormal_pdf(double l, const LognormalComponent& c);
double lognormal_cdf(double l, const LognormalComponent& c);

/// (2/omega) phi(z) Phi(lambda z) with z = (x - epsilon)/omega.
double sn_pdf(double x, const SkewNormalParams& p);

/// Phi(z) - 2 T(z, lambda).
double sn_cdf(double x, const SkewNormalParams& p);

/// log of sn_cdf, cancellation-free arbitrarily deep into the left tail.
double sn_logcdf(double x, const SkewNormalParams& p);

/// log of 1 - sn_cdf, cancellation-free in the right tail.
double sn_logsf(double x, const SkewNormalParams& p);

/// Phi^-1(sn_cdf(x)), evaluated through the log-tail forms so it stays
/// accurate where the cdf itself would underflow.
double sn_probit(double x, const SkewNormalParams& p);

/// Exact draw from SN(p) given two independent standard normal variates:
/// epsilon + omega (beta |u0| + sqrt(1 - beta^2) u1).
double sn_sample(const SkewNormalParams& p, double u0, double u1);

/// Moment generating function E[e^(tX)] = 2 exp(eps t + om^2 t^2/2) Phi(beta om t).
double sn_mgf(double t, const SkewNormalParams& p);

double lskn_pdf(double l, const SkewNormalParams& p);
double lskn_cdf(double l, const SkewNormalParams& p);

}  // namespace slnfit

#endif
