#ifndef SLNFIT_TOOLS_PRESETS_HPP
#define SLNFIT_TOOLS_PRESETS_HPP

// Named experiment presets: the four sum-of-lognormals cases of the
// comparison study and the four hexagonal-network outage configurations.

#include <optional>
#include <string>
#include <vector>

#include "slnfit/outage.hpp"
#include "slnfit/sln_model.hpp"

namespace slnfit::tools {

struct SlnPreset {
    std::string name;
    std::string description;
    SlnSpec spec;
};

struct NetworkPreset {
    std::string name;
    std::string description;
    NetworkConfig config;
};

inline std::vector<SlnPreset> sln_presets() {
    std::vector<SlnPreset> out;

    auto iid = [](int n, double mu_db, double sigma_db) {
        std::vector<LognormalComponent> comps;
        comps.reserve(n);
        for (int i = 0; i < n; ++i) comps.push_back(LognormalComponent::from_db(mu_db, sigma_db));
        return SlnSpec(std::move(comps));
    };

    out.push_back({"fig1", "20 i.i.d. RVs, mu 0 dB, sigma 3 dB", iid(20, 0.0, 3.0)});
    out.push_back({"fig2", "20 i.i.d. RVs, mu 0 dB, sigma 6 dB", iid(20, 0.0, 6.0)});

    // 12 RVs, mu = -12..12 dB step 2 excluding 0, sigma 6 dB
    {
        std::vector<LognormalComponent> comps;
        for (int mu_db = -12; mu_db <= 12; mu_db += 2) {
            if (mu_db == 0) continue;
            comps.push_back(LognormalComponent::from_db(mu_db, 6.0));
        }
        out.push_back({"fig3", "12 RVs, mu -12..12 dB step 2 (0 excluded), sigma 6 dB",
                       SlnSpec(std::move(comps))});
    }

    // 6 RVs, mu 0 dB, sigma 1..6 dB
    {
        std::vector<LognormalComponent> comps;
        for (int s_db = 1; s_db <= 6; ++s_db) {
            comps.push_back(LognormalComponent::from_db(0.0, s_db));
        }
        out.push_back({"fig4", "6 RVs, mu 0 dB, sigma 1..6 dB", SlnSpec(std::move(comps))});
    }
    return out;
}

inline std::vector<NetworkPreset> network_presets() {
    std::vector<NetworkPreset> out;
    auto mk = [](double sigma_db, bool at_edge) {
        NetworkConfig cfg;
        cfg.cell_range_km = 1.0;
        cfg.rings = 18;
        cfg.eta = 3.0;
        cfg.sigma_db = sigma_db;
        cfg.mobile_distance_km = at_edge ? cfg.rc() : cfg.rc() / 2.0;
        return cfg;
    };
    out.push_back({"fig6a", "sigma 3 dB, mobile at Rc", mk(3.0, true)});
    out.push_back({"fig6b", "sigma 3 dB, mobile at Rc/2", mk(3.0, false)});
    out.push_back({"fig7a", "sigma 6 dB, mobile at Rc", mk(6.0, true)});
    out.push_back({"fig7b", "sigma 6 dB, mobile at Rc/2", mk(6.0, false)});
    return out;
}

inline std::optional<SlnSpec> find_sln_preset(const std::string& name) {
    for (auto& p : sln_presets()) {
        if (p.name == name) return std::move(p.spec);
    }
    return std::nullopt;
}

inline std::optional<NetworkConfig> find_network_preset(const std::string& name) {
    for (auto& p : network_presets()) {
        if (p.name == name) return p.config;
    }
    return std::nullopt;
}

}  // namespace slnfit::tools

#endif
