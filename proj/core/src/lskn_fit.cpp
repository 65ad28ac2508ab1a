#include "slnfit/lskn_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "slnfit/specfun.hpp"

namespace slnfit {

namespace {

constexpr double kLambdaMax = 1e3;
constexpr int kMaxIterations = 200;

// Largest sample skewness fed to the SN inversion. The attainable supremum is
// (4-pi)/2 (2/pi)^(3/2) / (1-2/pi)^(3/2) = 0.9952717...; clamping any closer
// would push delta^2 past 1.
constexpr double kMaxSnSkew = 0.9952;

double inv_var_sum(const SlnSpec& s) {
    double acc = 0.0;
    for (const auto& c : s.components()) acc += 1.0 / (c.sigma * c.sigma);
    return acc;
}

double max_sigma(const SlnSpec& s) {
    double hi = 0.0;
    for (const auto& c : s.components()) hi = std::max(hi, c.sigma);
    return hi;
}

// RHS of the cv^2 equation as a function of lambda, with the slope constraint
// omega^2 = (1+lambda^2)/S substituted (equals varpi^2/xi^2; epsilon cancels).
double cv2_rhs(double lambda, double S) {
    const double u = lambda / std::sqrt(S);
    const double om2 = (1.0 + lambda * lambda) / S;
    const double cu = norm_cdf(u);
    return std::exp(om2) * norm_cdf(2.0 * u) / (2.0 * cu * cu) - 1.0;
}

}  // namespace

LsknMoments lskn_moments(const SkewNormalParams& p) {
    const double bw = p.beta() * p.omega;
    const double om2 = p.omega * p.omega;
    const double xi = 2.0 * std::exp(p.epsilon + 0.5 * om2) * norm_cdf(bw);
    const double cu = norm_cdf(bw);
    const double varpi2 = 2.0 * std::exp(2.0 * p.epsilon + om2) *
                          (std::exp(om2) * norm_cdf(2.0 * bw) - 2.0 * cu * cu);
    return {xi, varpi2};
}

double cv2_residual(double lambda, const SlnSpec& s) {
    const SlnLogMoments lg = sln_log_moments(s);
    const double lhs = std::exp(lg.log_d2 - 2.0 * lg.log_m);
    return cv2_rhs(lambda, inv_var_sum(s)) - lhs;
}

FitResult fit_lskn(const SlnSpec& s) {
    FitResult out;
    out.method = FitMethod::lskn_slope_match;

    if (s.size() == 1) {
        const auto& c = s.components().front();
        out.params = SkewNormalParams(0.0, c.mu, c.sigma);
        out.lambda0 = 0.0;
        out.residual = 0.0;
        out.iterations = 0;
        return out;
    }

    const double S = inv_var_sum(s);
    const SlnLogMoments lg = sln_log_moments(s);
    const double lhs = std::exp(lg.log_d2 - 2.0 * lg.log_m);
    const double tol = 1e-12 * std::max(1.0, lhs);

    const double smax = max_sigma(s);
    out.lambda0 = std::sqrt(std::max(smax * smax * S - 1.0, 0.0));

    auto f = [&](double lam) { return cv2_rhs(lam, S) - lhs; };

    // bracket [a, b] with f(a) <= 0 <= f(b), expanding by doubling from lambda0
    double a = 0.0, fa = f(a);
    int iters = 0;
    if (fa > 0.0) {
        // cv^2 of the slope-matched lognormal already exceeds the target;
        // can only happen within rounding of a degenerate fit
        out.params = SkewNormalParams(
            0.0, lg.log_m - 0.5 / S, std::sqrt(1.0 / S));
        out.residual = fa;
        out.iterations = 0;
        return out;
    }
    double b = std::max(2.0 * out.lambda0, 1.0);
    double fb = f(b);
    ++iters;
    while (fb < 0.0 && b < kLambdaMax) {
        a = b;
        fa = fb;
        b = std::min(2.0 * b, kLambdaMax);
        fb = f(b);
        ++iters;
    }
    if (fb < 0.0) {
        std::ostringstream msg;
        msg << "fit_lskn: no sign change on [0, " << kLambdaMax << "]; residual(0) = " << f(0.0)
            << ", residual(" << kLambdaMax << ") = " << fb;
        throw FitError(msg.str());
    }

    // bisection with secant acceleration
    double lam = a, fl = fa;
    while (iters < kMaxIterations) {
        double cand = b - fb * (b - a) / (fb - fa);  // secant through the bracket
        const double mid = 0.5 * (a + b);
        if (!(cand > a && cand < b)) cand = mid;
        const double fc = f(cand);
        ++iters;
        if (std::abs(fc) < std::abs(fl)) {
            lam = cand;
            fl = fc;
        }
        if (fc == 0.0) break;
        if (fc < 0.0) {
            a = cand;
            fa = fc;
        } else {
            b = cand;
            fb = fc;
        }
        if (std::abs(fl) <= tol) break;
        if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, a)) break;
    }

    const double om = std::sqrt((1.0 + lam * lam) / S);
    const double u = lam / std::sqrt(S);
    const double eps = lg.log_m - 0.5 * om * om - std::log(2.0 * norm_cdf(u));
    out.params = SkewNormalParams(lam, eps, om);
    out.residual = fl;
    out.iterations = iters;
    return out;
}

LognormalComponent fit_fenton_wilkinson(const SlnSpec& s) {
    const SlnLogMoments lg = sln_log_moments(s);
    const double cv2 = std::exp(lg.log_d2 - 2.0 * lg.log_m);
    const double s2 = std::log1p(cv2);
    return LognormalComponent(lg.log_m - 0.5 * s2, std::sqrt(s2));
}

SkewNormalParams fit_log_domain_mom(std::span<const double> samples) {
    if (samples.size() < 3) {
        throw std::domain_error("fit_log_domain_mom: need at least 3 samples");
    }
    const double n = static_cast<double>(samples.size());

    double mean = 0.0;
    for (double v : samples) {
        if (!(v > 0.0)) {
            throw std::domain_error("fit_log_domain_mom: samples must be positive");
        }
        mean += std::log(v);
    }
    mean /= n;

    double m2 = 0.0, m3 = 0.0;
    for (double v : samples) {
        const double d = std::log(v) - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;

    double skew = m3 / std::pow(m2, 1.5);
    skew = std::clamp(skew, -kMaxSnSkew, kMaxSnSkew);

    // invert gamma1 = (4-pi)/2 k^3/(1-k^2)^(3/2) with k = delta sqrt(2/pi)
    const double t = std::pow(2.0 * std::abs(skew) / (4.0 - std::numbers::pi), 2.0 / 3.0);
    const double k2 = t / (1.0 + t);
    const double delta = std::copysign(std::sqrt(k2 * std::numbers::pi / 2.0), skew);
    const double lambda = delta / std::sqrt(1.0 - delta * delta);
    const double omega = std::sqrt(m2 / (1.0 - 2.0 * delta * delta / std::numbers::pi));
    const double epsilon = mean - omega * delta * std::sqrt(2.0 / std::numbers::pi);
    return SkewNormalParams(lambda, epsilon, omega);
}

std::string fit_method_name(FitMethod m) {
    switch (m) {
        case FitMethod::lskn_slope_match: return "lskn_slope_match";
        case FitMethod::fenton_wilkinson: return "fenton_wilkinson";
        case FitMethod::log_domain_mom: return "log_domain_mom";
    }
    return "unknown";
}

std::string fit_result_to_json(const FitResult& r) {
    nlohmann::ordered_json j;
    j["lambda"] = r.params.lambda;
    j["epsilon"] = r.params.epsilon;
    j["omega"] = r.params.omega;
    j["beta"] = r.params.beta();
    j["lambda0"] = r.lambda0;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["method"] = fit_method_name(r.method);
    return j.dump(2);
}

}  // namespace slnfit
