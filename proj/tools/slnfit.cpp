// slnfit: fits a log skew normal to a sum of independent lognormals and
// reproduces the comparison and outage experiments as named presets.
//
// Exit codes: 0 success, 2 usage/parse error, 3 numerical failure.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "presets.hpp"
#include "slnfit/dists.hpp"
#include "slnfit/lskn_fit.hpp"
#include "slnfit/mc_engine.hpp"
#include "slnfit/outage.hpp"
#include "slnfit/prob_scale.hpp"
#include "slnfit/sln_model.hpp"

namespace {

using namespace slnfit;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string preset;
    std::string input;
    std::uint64_t seed = 42;
    std::size_t samples = 1'000'000;
    bool samples_given = false;
    std::string out_dir = ".";
    int threads = 0;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// preset name, else input file stem
std::string run_name(const Options& opt) {
    if (!opt.preset.empty()) return opt.preset;
    return std::filesystem::path(opt.input).stem().string();
}

SlnSpec resolve_sln_spec(const Options& opt) {
    if (!opt.preset.empty()) {
        if (auto spec = tools::find_sln_preset(opt.preset)) return *std::move(spec);
        throw std::runtime_error("unknown preset: " + opt.preset +
                                 " (expected fig1, fig2, fig3 or fig4)");
    }
    if (opt.input.empty()) throw std::runtime_error("either --preset or --input is required");
    return sln_spec_from_json(read_file(opt.input));
}

NetworkConfig resolve_network(const Options& opt) {
    if (!opt.preset.empty()) {
        if (auto cfg = tools::find_network_preset(opt.preset)) return *cfg;
        throw std::runtime_error("unknown preset: " + opt.preset +
                                 " (expected fig6a, fig6b, fig7a or fig7b)");
    }
    if (opt.input.empty()) throw std::runtime_error("either --preset or --input is required");
    return network_config_from_json(read_file(opt.input));
}

std::filesystem::path output_path(const Options& opt, const std::string& file) {
    std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);
    return dir / file;
}

// figure presets default to the figure-reproduction sample count
std::size_t effective_samples(const Options& opt) {
    if (!opt.samples_given && !opt.preset.empty()) return 10'000'000;
    return opt.samples;
}

int cmd_fit(const Options& opt) {
    const FitResult fit = fit_lskn(resolve_sln_spec(opt));
    const std::string json = fit_result_to_json(fit);
    std::cout << json << '\n';
    if (opt.out_dir != ".") {
        std::ofstream os(output_path(opt, run_name(opt) + "_fit.json"));
        os << json << '\n';
    }
    return 0;
}

int cmd_curve(const Options& opt) {
    const SlnSpec spec = resolve_sln_spec(opt);
    const std::size_t n = effective_samples(opt);
    const RngSpec rng{opt.seed, 0};

    const EmpiricalCdf ecdf(sample_sln(spec, rng, n, 0, opt.threads));
    const FitResult lskn = fit_lskn(spec);
    const LognormalComponent fw = fit_fenton_wilkinson(spec);

    // x grid spanning empirical CDF 1e-4 .. 1-1e-4
    const double x_lo = std::log(ecdf.quantile(1e-4));
    const double x_hi = std::log(ecdf.quantile(1.0 - 1e-4));
    constexpr int kGridPoints = 201;
    std::vector<double> xs(kGridPoints);
    for (int i = 0; i < kGridPoints; ++i) {
        xs[i] = x_lo + (x_hi - x_lo) * i / (kGridPoints - 1);
    }

    std::vector<ProbitColumn> cols;
    cols.push_back({"probit_mc", probit_values([&](double l) { return ecdf(l); }, xs)});
    cols.push_back(
        {"probit_lskn", probit_values([&](double l) { return lskn_cdf(l, lskn.params); }, xs)});
    cols.push_back({"probit_fw", probit_values([&](double l) { return lognormal_cdf(l, fw); }, xs)});

    const auto path = output_path(opt, run_name(opt) + "_curve.csv");
    std::ofstream os(path);
    write_probit_csv(os, xs, cols);
    std::cout << path.string() << '\n';
    return 0;
}

int cmd_compare(const Options& opt) {
    const SlnSpec spec = resolve_sln_spec(opt);
    const std::size_t n = effective_samples(opt);
    const RngSpec rng{opt.seed, 0};

    const EmpiricalCdf ecdf(sample_sln(spec, rng, n, 0, opt.threads));
    const FitResult lskn = fit_lskn(spec);
    const LognormalComponent fw = fit_fenton_wilkinson(spec);

    const int threads = opt.threads > 0 ? opt.threads : 0;
    const double err_lskn = max_cdf_error(
        ecdf, [&](double l) { return lskn_cdf(l, lskn.params); }, 0.001, 0.999,
        threads == 0 ? -1 : threads);
    const double err_fw = max_cdf_error(
        ecdf, [&](double l) { return lognormal_cdf(l, fw); }, 0.001, 0.999,
        threads == 0 ? -1 : threads);

    const auto path = output_path(opt, run_name(opt) + "_compare.csv");
    std::ofstream os(path);
    os << "method,max_cdf_error\n";
    os << "lskn_slope_match," << fmt(err_lskn) << '\n';
    os << "fenton_wilkinson," << fmt(err_fw) << '\n';
    std::cout << path.string() << '\n';
    return 0;
}

int cmd_table1(const Options& opt) {
    struct Row {
        const char* label;
        const char* preset;
        double paper_fit[3];  // beta, epsilon, omega
        double paper_mc[3];
    };
    static const Row rows[] = {
        {"20 RVs mu 0dB sigma 3dB", "fig1", {0.6332, 3.1186, 0.1996}, {0.6113, 3.1231, 0.1975}},
        {"20 RVs mu 0dB sigma 6dB", "fig2", {0.8749, 3.3937, 0.6379}, {0.8776, 3.4186, 0.6121}},
        {"12 RVs mu -12..12dB sigma 6dB", "fig3", {0.9344, 3.5285, 1.1194},
         {0.8921, 3.6402, 1.0441}},
        {"6 RVs mu 0dB sigma 1..6dB", "fig4", {0.9766, 1.3882, 0.8775}, {0.9933, 1.4843, 0.7889}},
    };

    const std::size_t n = opt.samples;
    const auto path = output_path(opt, "table1.csv");
    std::ofstream os(path);
    os << "case,beta_fit,epsilon_fit,omega_fit,beta_mc,epsilon_mc,omega_mc,"
          "beta_paper,epsilon_paper,omega_paper,beta_paper_mc,epsilon_paper_mc,omega_paper_mc\n";

    std::uint64_t stream = 0;
    for (const Row& row : rows) {
        const SlnSpec spec = *tools::find_sln_preset(row.preset);
        const FitResult fit = fit_lskn(spec);
        const auto samples = sample_sln(spec, RngSpec{opt.seed, stream++}, n, 0, opt.threads);
        const SkewNormalParams mc = fit_log_domain_mom(samples);

        os << '"' << row.label << '"';
        os << ',' << fmt(fit.params.beta()) << ',' << fmt(fit.params.epsilon) << ','
           << fmt(fit.params.omega);
        os << ',' << fmt(mc.beta()) << ',' << fmt(mc.epsilon) << ',' << fmt(mc.omega);
        for (double v : row.paper_fit) os << ',' << fmt(v);
        for (double v : row.paper_mc) os << ',' << fmt(v);
        os << '\n';
    }
    std::cout << path.string() << '\n';
    return 0;
}

int cmd_outage(const Options& opt) {
    const NetworkConfig cfg = resolve_network(opt);
    const std::size_t n = opt.samples;
    const OutageModel model = OutageModel::build(cfg);
    const std::vector<double> sir = outage_mc_sir_db(cfg, RngSpec{opt.seed, 0}, n, opt.threads);

    const auto path = output_path(opt, run_name(opt) + "_outage.csv");
    std::ofstream os(path);
    os << "threshold_db,p_analytic,p_mc\n";
    std::vector<double> sorted(sir);
    std::sort(sorted.begin(), sorted.end());
    for (int k = -60; k <= 60; ++k) {
        const double threshold = 0.5 * k;
        const double p_mc =
            static_cast<double>(std::lower_bound(sorted.begin(), sorted.end(), threshold) -
                                sorted.begin()) /
            static_cast<double>(n);
        os << fmt(threshold) << ',' << fmt(model.probability(threshold)) << ',' << fmt(p_mc)
           << '\n';
    }
    std::cout << path.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"log-skew-normal fitting for sums of independent lognormals"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* sub, bool with_sampling) {
        sub->add_option("--preset", opt.preset, "named preset");
        sub->add_option("--input", opt.input, "JSON input file")->excludes("--preset");
        if (with_sampling) {
            sub->add_option("--seed", opt.seed, "RNG seed (default 42)");
            sub->add_option("--samples", opt.samples, "Monte Carlo sample count")
                ->check(CLI::PositiveNumber);
            sub->add_option("--threads", opt.threads, "worker threads (0 = all)");
        }
        sub->add_option("--out", opt.out_dir, "output directory (default .)");
    };

    auto* fit = app.add_subcommand("fit", "fit LSKN parameters to an SLN spec");
    add_common(fit, false);
    auto* curve = app.add_subcommand("curve", "probit-scale CDF curves: MC, LSKN, FW");
    add_common(curve, true);
    auto* compare = app.add_subcommand("compare", "max CDF error of LSKN and FW vs MC");
    add_common(compare, true);
    auto* table1 = app.add_subcommand("table1", "fitted vs published parameters, four cases");
    add_common(table1, true);
    auto* outage = app.add_subcommand("outage", "analytic vs MC outage probability curve");
    add_common(outage, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    for (auto* sub : {curve, compare, table1, outage}) {
        if (sub->parsed() && sub->count("--samples") > 0) opt.samples_given = true;
    }

    try {
        if (fit->parsed()) return cmd_fit(opt);
        if (curve->parsed()) return cmd_curve(opt);
        if (compare->parsed()) return cmd_compare(opt);
        if (table1->parsed()) return cmd_table1(opt);
        if (outage->parsed()) return cmd_outage(opt);
    } catch (const FitError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
