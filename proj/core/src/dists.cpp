#include "slnfit/dists.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quadrature.hpp"
#include "slnfit/specfun.hpp"

namespace slnfit {

namespace {

constexpr double kLnSqrt2Pi = 0.91893853320467274178;

// log F_SN(-h) for slant lam >= 0 and h > 0, through the cancellation-free
// lower-tail integral
//   F(-h) = (2 pi)^(-1/2) * int_h^inf erfcx(lam w/sqrt 2) e^(-(1+lam^2) w^2/2) dw,
// which reduces to log Phi(-h) at lam = 0. The leading e^(-(1+lam^2) h^2/2)
// scale is carried in the log, so nothing underflows before the log would.
double lower_tail_logcdf(double lam, double h) {
    const double c = 1.0 + lam * lam;
    // window bound: (1+lam^2)(v^2/2 + h v) = 45 caps the dropped mass at ~e-20
    const double v_max = -h + std::sqrt(h * h + 90.0 / c);
    const double integral = detail::gl_integrate(
        [lam, c, h](double v) {
            return erfcx(lam * (h + v) / std::numbers::sqrt2) *
                   std::exp(-c * (0.5 * v * v + h * v));
        },
        0.0, v_max, 8);
    return -0.5 * c * h * h - kLnSqrt2Pi + std::log(integral);
}

// log F for standardized argument z and slant lam, choosing a representation
// that is accurate on every branch.
double logcdf_std(double z, double lam) {
    if (lam == 0.0) return norm_logcdf(z);
    if (lam < 0.0) {
        if (z <= 0.0) {
            // heavy left side: Phi(z) + 2T(z,|lam|), both positive, scaled by e^(-z^2/2)
            const double scaled =
                0.5 * erfcx(-z / std::numbers::sqrt2) + 2.0 * owens_t_scaled(z, -lam);
            return -0.5 * z * z + std::log(scaled);
        }
        // light right side: F = 1 - F_{-lam}(-z) with the mirrored tail small
        const double log_sf = logcdf_std(-z, -lam);
        return std::log1p(-std::exp(log_sf));
    }
    // lam > 0: left tail cancels catastrophically in Phi - 2T; switch to the
    // stable integral once the cancellation bites
    if (z <= -0.5 || lam * z <= -2.0) return lower_tail_logcdf(lam, -z);
    const double f = norm_cdf(z) - 2.0 * owens_t(z, lam);
    return std::log(f);
}

}  // namespace

LognormalComponent::LognormalComponent(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    if (!(std::isfinite(mu) && std::isfinite(sigma) && sigma > 0.0)) {
        throw std::domain_error("LognormalComponent: sigma must be finite and > 0");
    }
}

LognormalComponent LognormalComponent::from_db(double mu_db, double sigma_db) {
    return LognormalComponent(kDbScale * mu_db, kDbScale * sigma_db);
}

SkewNormalParams::SkewNormalParams(double lambda_, double epsilon_, double omega_)
    : lambda(lambda_), epsilon(epsilon_), omega(omega_) {
    if (!(std::isfinite(lambda) && std::isfinite(epsilon) && std::isfinite(omega) &&
          omega > 0.0)) {
        throw std::domain_error("SkewNormalParams: omega must be finite and > 0");
    }
}

double SkewNormalParams::beta() const { return lambda / std::sqrt(1.0 + lambda * lambda); }

double lognormal_pdf(double l, const LognormalComponent& c) {
    if (l <= 0.0) return 0.0;
    const double z = (std::log(l) - c.mu) / c.sigma;
    return norm_pdf(z) / (c.sigma * l);
}

double lognormal_cdf(double l, const LognormalComponent& c) {
    if (l <= 0.0) return 0.0;
    return norm_cdf((std::log(l) - c.mu) / c.sigma);
}

double sn_pdf(double x, const SkewNormalParams& p) {
    const double z = (x - p.epsilon) / p.omega;
    return 2.0 / p.omega * norm_pdf(z) * norm_cdf(p.lambda * z);
}

double sn_cdf(double x, const SkewNormalParams& p) {
    const double z = (x - p.epsilon) / p.omega;
    const double f = norm_cdf(z) - 2.0 * owens_t(z, p.lambda);
    return f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f);
}

double sn_logcdf(double x, const SkewNormalParams& p) {
    return logcdf_std((x - p.epsilon) / p.omega, p.lambda);
}

double sn_logsf(double x, const SkewNormalParams& p) {
    return logcdf_std(-(x - p.epsilon) / p.omega, -p.lambda);
}

double sn_probit(double x, const SkewNormalParams& p) {
    const double z = (x - p.epsilon) / p.omega;
    const double log_f = logcdf_std(z, p.lambda);
    const double log_sf = logcdf_std(-z, -p.lambda);
    if (log_f <= log_sf) return norm_quantile_logp(log_f);
    return -norm_quantile_logp(log_sf);
}

double sn_sample(const SkewNormalParams& p, double u0, double u1) {
    const double b = p.beta();
    return p.epsilon + p.omega * (b * std::abs(u0) + std::sqrt(1.0 - b * b) * u1);
}

double sn_mgf(double t, const SkewNormalParams& p) {
    const double wt = p.omega * t;
    return 2.0 * std::exp(p.epsilon * t + 0.5 * wt * wt) * norm_cdf(p.beta() * wt);
}

double lskn_pdf(double l, const SkewNormalParams& p) {
    if (l <= 0.0) return 0.0;
    return sn_pdf(std::log(l), p) / l;
}

double lskn_cdf(double l, const SkewNormalParams& p) {
    if (l <= 0.0) return 0.0;
    return sn_cdf(std::log(l), p);
}

}  // namespace slnfit
