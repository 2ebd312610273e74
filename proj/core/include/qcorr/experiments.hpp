// Parameter sweeps over (alpha, gamma) for the four channel configurations,
// sudden-death threshold location and discord-positivity scans.
#pragma once

#include <optional>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/density_matrix.hpp"

namespace qcorr {

enum class ConfigKind { Dephasing, GAD, Depolarizing, DephasingPlusGAD };
enum class StateFamily { Werner, Phi };

struct ChannelConfig {
    ConfigKind kind;
    StateFamily state_family;
    double q = 1.0;  // GAD stationary parameter, used by GAD and DephasingPlusGAD
};

struct SweepCell {
    double alpha;
    double gamma;
    CorrelationReport report;
};

struct SweepGrid {
    std::vector<double> alphas;
    std::vector<double> gammas;
    std::vector<SweepCell> rows;  // row-major, alpha outer
};

struct EsdResult {
    double alpha;
    // First gamma at which the concurrence reaches zero; nullopt when the
    // state is never entangled or stays entangled for every gamma < 1.
    std::optional<double> gamma_esd;
    double bracket_width;
};

struct DiscordScanResult {
    double alpha;
    double gamma;
    double discord;
};

struct GridBounds {
    double alpha_min = 0.05;
    double alpha_max = 0.95;
    int alpha_steps = 19;
    double gamma_min = 0.0;
    double gamma_max = 0.95;
    int gamma_steps = 20;
};

// Initial state of the configured family evolved under the per-qubit channel
// at decoherence degree gamma (dephasing composed with GAD for the combined
// configuration, both at the same gamma).
DensityMatrix evolve(const ChannelConfig& config, double alpha, double gamma);

// Uniform grid over [0,1]^2 including endpoints, one CorrelationReport per
// cell. Cells are independent; with threads > 1 they are evaluated
// concurrently and gathered by index, so results do not depend on the
// thread count.
SweepGrid sweep(const ChannelConfig& config, int alpha_steps, int gamma_steps, int threads = 1);

// Bisection for the first zero of the concurrence along gamma, to bracket
// width below tol. Relies on concurrence being non-increasing in gamma.
EsdResult esd_gamma(const ChannelConfig& config, double alpha, double tol = 1e-6);

// Minimum discord over the bounded grid and where it occurs.
DiscordScanResult discord_positivity_scan(const ChannelConfig& config,
                                          const GridBounds& bounds = {});

}  // namespace qcorr
