#ifndef SLNFIT_SPECFUN_HPP
#define SLNFIT_SPECFUN_HPP

// Scalar special functions used throughout: standard normal pdf/cdf/quantile
// and Owen's T function. All functions are pure and thread-safe.

namespace slnfit {

/// Standard normal density e^(-x^2/2)/sqrt(2 pi).
double norm_pdf(double x);

/// Standard normal CDF, accurate to ~1e-15 absolute including far tails.
double norm_cdf(double x);

/// log of the standard normal CDF, stable for x << 0 (no underflow until
/// the log itself would).
double norm_logcdf(double x);

/// Inverse of norm_cdf on (0, 1). Throws std::domain_error outside (0, 1).
double norm_quantile(double p);

/// norm_quantile(exp(log_p)) evaluated without forming exp(log_p); valid for
/// any log_p < 0, including values far below log(DBL_MIN).
double norm_quantile_logp(double log_p);

/// Scaled complementary error function e^(x^2) erfc(x) for x >= 0.
double erfcx(double x);

/// Owen's T function  T(x, a) = (1/2pi) * integral_0^a exp(-x^2(1+t^2)/2)/(1+t^2) dt.
/// Even in x, odd in a.
double owens_t(double x, double a);

/// e^(x^2/2) * T(x, a); the tail-stable form (all mass of the x^2/2 factor
/// removed before quadrature).
double owens_t_scaled(double x, double a);

}  // namespace slnfit

#endif
