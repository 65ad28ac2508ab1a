#include "slnfit/sln_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace slnfit {

namespace {

// log(sum exp(a_i)) with the usual max shift
double log_sum_exp(const std::vector<double>& a) {
    const double hi = *std::max_element(a.begin(), a.end());
    double acc = 0.0;
    for (double v : a) acc += std::exp(v - hi);
    return hi + std::log(acc);
}

// log of e^(2 mu + sigma^2) (e^(sigma^2) - 1), the variance of one summand
double log_var_term(const LognormalComponent& c) {
    const double s2 = c.sigma * c.sigma;
    if (s2 > 700.0) return 2.0 * c.mu + 2.0 * s2;  // e^(s2) - 1 ~ e^(s2)
    return 2.0 * c.mu + s2 + std::log(std::expm1(s2));
}

}  // namespace

SlnSpec::SlnSpec(std::vector<LognormalComponent> components)
    : components_(std::move(components)) {
    if (components_.empty()) {
        throw std::domain_error("SlnSpec: at least one component required");
    }
}

double component_moment(const LognormalComponent& c, int p) {
    if (p < 1) throw std::domain_error("component_moment: p must be >= 1");
    const double pd = static_cast<double>(p);
    return std::exp(c.mu * pd + 0.5 * c.sigma * c.sigma * pd * pd);
}

SlnMoments sln_moments(const SlnSpec& s) {
    const SlnLogMoments lg = sln_log_moments(s);
    return {std::exp(lg.log_m), std::exp(lg.log_d2)};
}

SlnLogMoments sln_log_moments(const SlnSpec& s) {
    std::vector<double> mean_terms, var_terms;
    mean_terms.reserve(s.size());
    var_terms.reserve(s.size());
    for (const auto& c : s.components()) {
        mean_terms.push_back(c.mu + 0.5 * c.sigma * c.sigma);
        var_terms.push_back(log_var_term(c));
    }
    return {log_sum_exp(mean_terms), log_sum_exp(var_terms)};
}

double sln_right_slope(const SlnSpec& s) {
    double hi = 0.0;
    for (const auto& c : s.components()) hi = std::max(hi, c.sigma);
    return 1.0 / hi;
}

double sln_left_slope(const SlnSpec& s) {
    double acc = 0.0;
    for (const auto& c : s.components()) acc += 1.0 / (c.sigma * c.sigma);
    return std::sqrt(acc);
}

SlnSpec sln_spec_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("SlnSpec JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("components") || !doc["components"].is_array() ||
        doc["components"].empty()) {
        throw std::runtime_error("SlnSpec JSON: expected non-empty \"components\" array");
    }

    bool any_db = false, any_nat = false;
    std::vector<LognormalComponent> comps;
    comps.reserve(doc["components"].size());
    for (const auto& item : doc["components"]) {
        const bool has_db = item.contains("mu_db") && item.contains("sigma_db");
        const bool has_nat = item.contains("mu") && item.contains("sigma");
        if (has_db == has_nat) {
            throw std::runtime_error(
                "SlnSpec JSON: each component needs either {mu_db, sigma_db} or {mu, sigma}");
        }
        any_db |= has_db;
        any_nat |= has_nat;
        try {
            if (has_db) {
                comps.push_back(LognormalComponent::from_db(item["mu_db"].get<double>(),
                                                            item["sigma_db"].get<double>()));
            } else {
                comps.emplace_back(item["mu"].get<double>(), item["sigma"].get<double>());
            }
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(std::string("SlnSpec JSON: bad component: ") + e.what());
        } catch (const std::domain_error& e) {
            throw std::runtime_error(std::string("SlnSpec JSON: ") + e.what());
        }
    }
    if (any_db && any_nat) {
        throw std::runtime_error("SlnSpec JSON: mixed dB and natural-log unit systems");
    }
    return SlnSpec(std::move(comps));
}

}  // namespace slnfit
