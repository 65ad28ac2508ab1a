#ifndef SLNFIT_MC_ENGINE_HPP
#define SLNFIT_MC_ENGINE_HPP

// Deterministic counter-based Monte Carlo sampling. Every variate is a pure
// function of (seed, stream_id, index), so runs partition across workers and
// resume at any offset with bit-identical results.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "slnfit/dists.hpp"
#include "slnfit/sln_model.hpp"

namespace slnfit {

struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// Uniform variate in (0, 1), strictly open, at the given counter index.
double mc_uniform(const RngSpec& rng, std::uint64_t index);

/// Standard normal variate by quantile inversion of mc_uniform.
double mc_normal(const RngSpec& rng, std::uint64_t index);

/// `count` draws of the sum. Sample j consumes normal indices
/// [(first_index+j) N, (first_index+j+1) N), N = component count, so
/// a run of (a, offset 0) followed by (b, offset a) equals one run of a+b.
/// threads <= 0 uses all hardware threads; the result does not depend on it.
std::vector<double> sample_sln(const SlnSpec& s, const RngSpec& rng, std::size_t count,
                               std::uint64_t first_index = 0, int threads = 0);

/// `count` draws of e^X, X ~ SN(p); sample j consumes indices 2j and 2j+1
/// (offset by first_index samples).
std::vector<double> sample_lskn(const SkewNormalParams& p, const RngSpec& rng,
                                std::size_t count, std::uint64_t first_index = 0,
                                int threads = 0);

/// Raw-sample dump: 8-byte little-endian count, then little-endian doubles.
void dump_samples(const std::filesystem::path& path, std::span<const double> samples);
std::vector<double> load_samples(const std::filesystem::path& path);

}  // namespace slnfit

#endif
