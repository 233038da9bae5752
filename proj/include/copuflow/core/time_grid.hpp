#ifndef COPUFLOW_CORE_TIME_GRID_HPP
#define COPUFLOW_CORE_TIME_GRID_HPP

#include <cmath>
#include <string>
#include <vector>

#include "copuflow/errors.hpp"

namespace copuflow {

enum class GridScheme { KL, Linear, PowerLaw };

inline const char* grid_scheme_name(GridScheme s) {
    switch (s) {
        case GridScheme::KL: return "kl";
        case GridScheme::Linear: return "linear";
        case GridScheme::PowerLaw: return "power";
    }
    return "?";
}

inline GridScheme parse_grid_scheme(const std::string& s) {
    if (s == "kl") return GridScheme::KL;
    if (s == "linear") return GridScheme::Linear;
    if (s == "power") return GridScheme::PowerLaw;
    throw ConfigError("unknown time-grid scheme '" + s + "' (kl|linear|power)");
}

/// Ordered diffusion times 0 = t_0 < ... < t_{k-1} = terminal.
struct TimeGrid {
    std::vector<double> times;
    GridScheme scheme = GridScheme::KL;
    double terminal = 0.0;
    double exponent = 0.0;  // PowerLaw only

    int k() const { return static_cast<int>(times.size()); }
};

/// Build a time grid.
///
/// KL spaces steps by a constant decay of the forward process's KL to
/// stationarity: t_s = -1/2 log(1 - (1 - e^{-2T}) s/(k-1)). Linear is the
/// uniform grid. PowerLaw is t_s = T (s/(k-1))^exponent.
inline TimeGrid make_time_grid(GridScheme scheme, int k, double terminal,
                               double exponent = 0.125) {
    if (k < 2) throw ConfigError("make_time_grid: need k >= 2");
    if (!(terminal > 0.0)) throw ConfigError("make_time_grid: need terminal > 0");
    if (scheme == GridScheme::PowerLaw && !(exponent > 0.0))
        throw ConfigError("make_time_grid: need exponent > 0");

    TimeGrid g;
    g.scheme = scheme;
    g.terminal = terminal;
    g.exponent = (scheme == GridScheme::PowerLaw) ? exponent : 0.0;
    g.times.resize(static_cast<std::size_t>(k));
    const double denom = static_cast<double>(k - 1);
    for (int s = 0; s < k; ++s) {
        const double frac = static_cast<double>(s) / denom;
        double t = 0.0;
        switch (scheme) {
            case GridScheme::KL:
                t = -0.5 * std::log1p(-(-std::expm1(-2.0 * terminal)) * frac);
                break;
            case GridScheme::Linear:
                t = frac * terminal;
                break;
            case GridScheme::PowerLaw:
                t = terminal * std::pow(frac, exponent);
                break;
        }
        g.times[static_cast<std::size_t>(s)] = t;
    }
    g.times.front() = 0.0;
    g.times.back() = terminal;
    for (int s = 1; s < k; ++s)
        if (!(g.times[s] > g.times[s - 1]))
            throw NumericError("make_time_grid: grid not strictly increasing");
    return g;
}

}  // namespace copuflow

#endif
