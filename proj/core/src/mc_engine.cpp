#include "slnfit/mc_engine.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "parallel.hpp"
#include "slnfit/specfun.hpp"

static_assert(std::endian::native == std::endian::little,
              "sample dump format assumes a little-endian host");

namespace slnfit {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// Stafford's Mix13 finalizer (the SplitMix64 output function).
inline std::uint64_t mix13(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// SplitMix64 evaluated at an arbitrary counter: state_0 derived from
// (seed, stream), output at state_0 + (index+1) * golden increment.
inline std::uint64_t word_at(const RngSpec& rng, std::uint64_t index) {
    const std::uint64_t state0 = rng.seed ^ mix13(rng.stream_id + kGolden);
    return mix13(state0 + (index + 1) * kGolden);
}

}  // namespace

double mc_uniform(const RngSpec& rng, std::uint64_t index) {
    // top 53 bits, centered: lands strictly inside (0, 1)
    return (static_cast<double>(word_at(rng, index) >> 11) + 0.5) * 0x1.0p-53;
}

double mc_normal(const RngSpec& rng, std::uint64_t index) {
    return norm_quantile(mc_uniform(rng, index));
}

std::vector<double> sample_sln(const SlnSpec& s, const RngSpec& rng, std::size_t count,
                               std::uint64_t first_index, int threads) {
    if (count < 1) throw std::domain_error("sample_sln: count must be >= 1");
    const auto& comps = s.components();
    const std::uint64_t n = comps.size();
    std::vector<double> out(count);
    detail::parallel_for(count, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            const std::uint64_t base = (first_index + j) * n;
            double sum = 0.0;
            for (std::uint64_t i = 0; i < n; ++i) {
                sum += std::exp(comps[i].mu + comps[i].sigma * mc_normal(rng, base + i));
            }
            out[j] = sum;
        }
    });
    return out;
}

std::vector<double> sample_lskn(const SkewNormalParams& p, const RngSpec& rng,
                                std::size_t count, std::uint64_t first_index, int threads) {
    if (count < 1) throw std::domain_error("sample_lskn: count must be >= 1");
    std::vector<double> out(count);
    detail::parallel_for(count, threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            const std::uint64_t base = 2 * (first_index + j);
            out[j] = std::exp(
                sn_sample(p, mc_normal(rng, base), mc_normal(rng, base + 1)));
        }
    });
    return out;
}

void dump_samples(const std::filesystem::path& path, std::span<const double> samples) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("dump_samples: cannot open " + path.string());
    const std::uint64_t n = samples.size();
    os.write(reinterpret_cast<const char*>(&n), sizeof n);
    os.write(reinterpret_cast<const char*>(samples.data()),
             static_cast<std::streamsize>(n * sizeof(double)));
    if (!os) throw std::runtime_error("dump_samples: write failed for " + path.string());
}

std::vector<double> load_samples(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_samples: cannot open " + path.string());
    std::uint64_t n = 0;
    is.read(reinterpret_cast<char*>(&n), sizeof n);
    std::vector<double> out(n);
    is.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(n * sizeof(double)));
    if (!is) throw std::runtime_error("load_samples: truncated file " + path.string());
    return out;
}

}  // namespace slnfit
