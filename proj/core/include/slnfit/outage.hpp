#ifndef SLNFIT_OUTAGE_HPP
#define SLNFIT_OUTAGE_HPP

// Hexagonal-network outage probability under lognormal shadowing: the
// interference sum is fitted by a log skew normal, the dB-domain
// signal-minus-interference difference is again skew normal, and outage is
// its CDF at the threshold. A direct Monte Carlo path serves as reference.

#include <cstdint>
#include <string>
#include <vector>

#include "slnfit/dists.hpp"
#include "slnfit/lskn_fit.hpp"
#include "slnfit/mc_engine.hpp"
#include "slnfit/sln_model.hpp"

namespace slnfit {

struct NetworkConfig {
    double cell_range_km = 1.0;  // R, centre-to-vertex
    int rings = 18;              // interferer rings around the serving cell
    double eta = 3.0;            // path-loss exponent, > 2
    double sigma_db = 3.0;       // shadowing std dev; 0 allowed on the MC path only
    double mobile_distance_km = 0.5;  // r, distance from the serving BS

    /// Half-distance between adjacent base stations: R sqrt(3)/2.
    double rc() const;

    /// Throws std::domain_error when any invariant is violated.
    void validate() const;
};

/// Lattice distances from the mobile to every interfering BS, M = 3 rings (rings+1)
/// of them. The mobile sits on the segment from the serving BS toward a
/// nearest neighbouring BS.
std::vector<double> interferer_geometry(const NetworkConfig& cfg);

/// Same, with the mobile placed at an arbitrary bearing (radians) from the
/// serving BS; bearing 0 reproduces interferer_geometry.
std::vector<double> interferer_geometry_bearing(const NetworkConfig& cfg, double bearing);

/// The interference sum as an SlnSpec: component j has mu = -eta ln r_j and
/// sigma = kDbScale * sigma_db. Requires sigma_db > 0.
SlnSpec interference_spec(const NetworkConfig& cfg);

/// Skew-normal parameters of signal_dB - interference_dB (natural-log units).
struct SnDiffParams {
    double lambda1 = 0.0;
    double epsilon1 = 0.0;
    double omega1 = 1.0;

    SkewNormalParams as_sn() const { return {lambda1, epsilon1, omega1}; }
};

/// Difference of a normal signal term N(signal_mu, signal_sigma^2) and an
/// independent SN interference term: epsilon1 = signal_mu - epsilon,
/// omega1 = sqrt(signal_sigma^2 + omega^2),
/// lambda1 = -lambda / sqrt(1 + (signal_sigma^2/omega^2)(1 + lambda^2))
/// (the reflection sign from negating the interference term).
SnDiffParams sn_difference(double signal_mu, double signal_sigma,
                           const SkewNormalParams& interference);

/// Interference fit and difference parameters for one configuration; build
/// once, evaluate the analytic outage curve cheaply.
class OutageModel {
public:
    static OutageModel build(const NetworkConfig& cfg);

    /// P(SIR_dB < threshold_db) = sn_cdf(kDbScale * threshold_db, difference).
    double probability(double threshold_db) const;

    const SkewNormalParams& interference() const { return interference_; }
    const SnDiffParams& difference() const { return diff_; }

private:
    SkewNormalParams interference_;
    SnDiffParams diff_;
};

/// Analytic outage probability (fits the interference on every call; use
/// OutageModel for curves).
double outage_probability(const NetworkConfig& cfg, double threshold_db);

/// SIR_dB samples of `count` shadowing trials; trial j is a pure function of
/// (rng, j) so worker counts never change results.
std::vector<double> outage_mc_sir_db(const NetworkConfig& cfg, const RngSpec& rng,
                                     std::size_t count, int threads = 0);

/// Fraction of trials with 10 log10(signal/interference) < threshold_db.
double outage_mc(const NetworkConfig& cfg, double threshold_db, const RngSpec& rng,
                 std::size_t count, int threads = 0);

struct OutagePoint {
    double threshold_db = 0.0;
    double probability = 0.0;
};

struct OutageCurve {
    std::vector<OutagePoint> points;
};

/// Parse {"cell_range_km":..,"rings":..,"eta":..,"sigma_db":..,
/// "mobile_distance_km":..}; missing keys keep their defaults.
/// Throws std::runtime_error on malformed input.
NetworkConfig network_config_from_json(const std::string& text);

}  // namespace slnfit

#endif
