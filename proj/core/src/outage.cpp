#include "slnfit/outage.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "parallel.hpp"

namespace slnfit {

namespace {

constexpr double kTenOverLn10 = 4.34294481903251827651;  // 10/ln(10) = 1/kDbScale

}  // namespace

double NetworkConfig::rc() const { return cell_range_km * std::numbers::sqrt3 / 2.0; }

void NetworkConfig::validate() const {
    if (!(cell_range_km > 0.0)) throw std::domain_error("NetworkConfig: cell_range_km must be > 0");
    if (rings < 1) throw std::domain_error("NetworkConfig: rings must be >= 1");
    if (!(eta > 2.0)) throw std::domain_error("NetworkConfig: eta must be > 2");
    if (!(sigma_db >= 0.0)) throw std::domain_error("NetworkConfig: sigma_db must be >= 0");
    if (!(mobile_distance_km > 0.0)) {
        throw std::domain_error("NetworkConfig: mobile_distance_km must be > 0");
    }
}

std::vector<double> interferer_geometry(const NetworkConfig& cfg) {
    return interferer_geometry_bearing(cfg, 0.0);
}

std::vector<double> interferer_geometry_bearing(const NetworkConfig& cfg, double bearing) {
    cfg.validate();
    const double spacing = 2.0 * cfg.rc();  // adjacent-BS distance, sqrt(3) R
    const double mx = cfg.mobile_distance_km * std::cos(bearing);
    const double my = cfg.mobile_distance_km * std::sin(bearing);
    const int n = cfg.rings;

    std::vector<double> dist;
    dist.reserve(static_cast<std::size_t>(3 * n * (n + 1)));
    for (int i = -n; i <= n; ++i) {
        const int j_lo = std::max(-n, -i - n);
        const int j_hi = std::min(n, -i + n);
        for (int j = j_lo; j <= j_hi; ++j) {
            if (i == 0 && j == 0) continue;  // serving BS
            const double bx = spacing * (i + 0.5 * j);
            const double by = spacing * (std::numbers::sqrt3 / 2.0 * j);
            dist.push_back(std::hypot(bx - mx, by - my));
        }
    }
    return dist;
}

SlnSpec interference_spec(const NetworkConfig& cfg) {
    cfg.validate();
    if (!(cfg.sigma_db > 0.0)) {
        throw std::domain_error(
            "interference_spec: sigma_db must be > 0 for the analytic path");
    }
    const double sigma = kDbScale * cfg.sigma_db;
    std::vector<LognormalComponent> comps;
    for (double r : interferer_geometry(cfg)) {
        comps.emplace_back(-cfg.eta * std::log(r), sigma);
    }
    return SlnSpec(std::move(comps));
}

SnDiffParams sn_difference(double signal_mu, double signal_sigma,
                           const SkewNormalParams& interference) {
    if (!(signal_sigma >= 0.0)) {
        throw std::domain_error("sn_difference: signal_sigma must be >= 0");
    }
    const double lam = interference.lambda;
    const double om = interference.omega;
    const double ratio = signal_sigma * signal_sigma / (om * om);
    SnDiffParams out;
    out.lambda1 = -lam / std::sqrt(1.0 + ratio * (1.0 + lam * lam));
    out.epsilon1 = signal_mu - interference.epsilon;
    out.omega1 = std::sqrt(signal_sigma * signal_sigma + om * om);
    return out;
}

OutageModel OutageModel::build(const NetworkConfig& cfg) {
    OutageModel model;
    model.interference_ = fit_lskn(interference_spec(cfg)).params;
    const double signal_mu = -cfg.eta * std::log(cfg.mobile_distance_km);
    const double signal_sigma = kDbScale * cfg.sigma_db;
    model.diff_ = sn_difference(signal_mu, signal_sigma, model.interference_);
    return model;
}

double OutageModel::probability(double threshold_db) const {
    return sn_cdf(kDbScale * threshold_db, diff_.as_sn());
}

double outage_probability(const NetworkConfig& cfg, double threshold_db) {
    return OutageModel::build(cfg).probability(threshold_db);
}

std::vector<double> outage_mc_sir_db(const NetworkConfig& cfg, const RngSpec& rng,
                                     std::size_t count, int threads) {
    cfg.validate();
    if (count < 1) throw std::domain_error("outage_mc_sir_db: count must be >= 1");

    const std::vector<double> dist = interferer_geometry(cfg);
    std::vector<double> weight(dist.size());
    for (std::size_t k = 0; k < dist.size(); ++k) weight[k] = std::pow(dist[k], -cfg.eta);
    const double s = kDbScale * cfg.sigma_db;
    const double log_signal_mean = -cfg.eta * std::log(cfg.mobile_distance_km);
    const std::uint64_t draws = weight.size() + 1;  // signal + every interferer

    std::vector<double> sir(count);
    detail::parallel_for(count, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            const std::uint64_t base = j * draws;
            const double log_signal = log_signal_mean + s * mc_normal(rng, base);
            double interf = 0.0;
            for (std::size_t k = 0; k < weight.size(); ++k) {
                interf += weight[k] * std::exp(s * mc_normal(rng, base + 1 + k));
            }
            sir[j] = kTenOverLn10 * (log_signal - std::log(interf));
        }
    });
    return sir;
}

double outage_mc(const NetworkConfig& cfg, double threshold_db, const RngSpec& rng,
                 std::size_t count, int threads) {
    const std::vector<double> sir = outage_mc_sir_db(cfg, rng, count, threads);
    std::size_t below = 0;
    for (double v : sir) {
        if (v < threshold_db) ++below;
    }
    return static_cast<double>(below) / static_cast<double>(count);
}

NetworkConfig network_config_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("NetworkConfig JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("NetworkConfig JSON: expected an object");

    NetworkConfig cfg;
    try {
        if (doc.contains("cell_range_km")) cfg.cell_range_km = doc["cell_range_km"].get<double>();
        if (doc.contains("rings")) cfg.rings = doc["rings"].get<int>();
        if (doc.contains("eta")) cfg.eta = doc["eta"].get<double>();
        if (doc.contains("sigma_db")) cfg.sigma_db = doc["sigma_db"].get<double>();
        if (doc.contains("mobile_distance_km")) {
            cfg.mobile_distance_km = doc["mobile_distance_km"].get<double>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("NetworkConfig JSON: bad field: ") + e.what());
    }
    try {
        cfg.validate();
    } catch (const std::domain_error& e) {
        throw std::runtime_error(std::string("NetworkConfig JSON: ") + e.what());
    }
    return cfg;
}

}  // namespace slnfit
