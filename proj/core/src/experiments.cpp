#include "qcorr/experiments.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "qcorr/errors.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

namespace {

// Concurrence values below this are exact zeros (the measure is a hard
// max{0, .}); the threshold only guards round-off on the positive side.
constexpr double kConcurrenceZero = 1e-12;

KrausChannel channel_for(const ChannelConfig& config, double gamma) {
    switch (config.kind) {
        case ConfigKind::Dephasing:
            return KrausChannel::dephasing(gamma);
        case ConfigKind::GAD:
            return KrausChannel::gad(gamma, config.q);
        case ConfigKind::Depolarizing:
            return KrausChannel::depolarizing(gamma);
        case ConfigKind::DephasingPlusGAD:
            return compose(KrausChannel::dephasing(gamma), KrausChannel::gad(gamma, config.q));
    }
    throw ParamOutOfRange("unknown channel configuration");
}

DensityMatrix initial_state(const ChannelConfig& config, double alpha) {
    return config.state_family == StateFamily::Werner ? werner(alpha) : phi_state(alpha);
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n <= 1) return {lo};
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

}  // namespace

DensityMatrix evolve(const ChannelConfig& config, double alpha, double gamma) {
    const KrausChannel ch = channel_for(config, gamma);
    return apply_two_qubit(initial_state(config, alpha), ch, ch);
}

SweepGrid sweep(const ChannelConfig& config, int alpha_steps, int gamma_steps, int threads) {
    if (alpha_steps < 2 || gamma_steps < 2)
        throw ParamOutOfRange("sweep needs at least 2 steps per axis");

    SweepGrid grid;
    grid.alphas = linspace(0.0, 1.0, alpha_steps);
    grid.gammas = linspace(0.0, 1.0, gamma_steps);
    grid.rows.resize(static_cast<std::size_t>(alpha_steps) * gamma_steps);

    const auto run_cell = [&](std::size_t idx) {
        const double alpha = grid.alphas[idx / gamma_steps];
        const double gamma = grid.gammas[idx % gamma_steps];
        grid.rows[idx] = {alpha, gamma, discord(evolve(config, alpha, gamma))};
    };

    if (threads <= 1) {
        for (std::size_t idx = 0; idx < grid.rows.size(); ++idx) run_cell(idx);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t idx = next.fetch_add(1); idx < grid.rows.size();
                     idx = next.fetch_add(1))
                    run_cell(idx);
            });
        }
        for (auto& worker : pool) worker.join();
    }
    return grid;
}

EsdResult esd_gamma(const ChannelConfig& config, double alpha, double tol) {
    if (!(tol > 0.0)) throw ParamOutOfRange("tol must be positive");

    const auto concurrence_at = [&](double gamma) {
        return concurrence_general(evolve(config, alpha, gamma));
    };

    // Entanglement alive just short of the asymptote: decay is asymptotic
    // only, no finite death point.
    if (concurrence_at(1.0 - tol) > tol) return {alpha, std::nullopt, 0.0};
    // Never entangled: there is no death event to locate.
    if (concurrence_at(0.0) < kConcurrenceZero) return {alpha, std::nullopt, 0.0};

    double lo = 0.0;  // concurrence > 0 here
    double hi = 1.0;  // concurrence == 0 here (gamma = 1 kills all coherence)
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (concurrence_at(mid) < kConcurrenceZero)
            hi = mid;
        else
            lo = mid;
    }
    const double gamma_esd = 0.5 * (lo + hi);
    // A zero located at the asymptote itself is not a sudden death.
    if (gamma_esd >= 1.0 - 2.0 * tol) return {alpha, std::nullopt, 0.0};
    return {alpha, gamma_esd, hi - lo};
}

DiscordScanResult discord_positivity_scan(const ChannelConfig& config, const GridBounds& bounds) {
    DiscordScanResult worst{0.0, 0.0, std::numeric_limits<double>::infinity()};
    for (double alpha : linspace(bounds.alpha_min, bounds.alpha_max, bounds.alpha_steps)) {
        for (double gamma : linspace(bounds.gamma_min, bounds.gamma_max, bounds.gamma_steps)) {
            const CorrelationReport report = discord(evolve(config, alpha, gamma));
            if (report.discord < worst.discord) worst = {alpha, gamma, report.discord};
        }
    }
    return worst;
}

}  // namespace qcorr
