#include <doctest.h>

#include <cmath>
#include <cstring>

#include "qcorr/errors.hpp"
#include "qcorr/experiments.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

bool grids_identical(const SweepGrid& a, const SweepGrid& b) {
    if (a.rows.size() != b.rows.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const SweepCell& x = a.rows[i];
        const SweepCell& y = b.rows[i];
        if (std::memcmp(&x.alpha, &y.alpha, sizeof x.alpha) != 0) return false;
        if (std::memcmp(&x.gamma, &y.gamma, sizeof x.gamma) != 0) return false;
        const double xs[4]{x.report.concurrence, x.report.discord, x.report.mutual_info,
                           x.report.classical_corr};
        const double ys[4]{y.report.concurrence, y.report.discord, y.report.mutual_info,
                           y.report.classical_corr};
        if (std::memcmp(xs, ys, sizeof xs) != 0) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("evolve endpoints") {
    const ChannelConfig dephasing_werner{ConfigKind::Dephasing, StateFamily::Werner};
    for (double alpha : {0.0, 0.4, 1.0})
        CHECK(max_abs_diff(evolve(dephasing_werner, alpha, 0.0).mat(), werner(alpha).mat()) <
              1e-15);

    const ChannelConfig depol_phi{ConfigKind::Depolarizing, StateFamily::Phi};
    for (double alpha : {0.0, 0.5, 0.9})
        CHECK(max_abs_diff(evolve(depol_phi, alpha, 1.0).mat(), 0.25 * CMat4::identity()) <
              1e-14);

    const ChannelConfig gad_phi{ConfigKind::GAD, StateFamily::Phi, 1.0};
    CMat4 ground;
    ground(0, 0) = 1.0;
    for (double alpha : {0.0, 0.5, 0.9})
        CHECK(max_abs_diff(evolve(gad_phi, alpha, 1.0).mat(), ground) < 1e-14);
}

TEST_CASE("sweep covers the grid exactly once, row-major") {
    const ChannelConfig config{ConfigKind::Dephasing, StateFamily::Werner};
    const SweepGrid grid = sweep(config, 5, 5);
    REQUIRE(grid.rows.size() == 25);
    REQUIRE(grid.alphas.size() == 5);
    REQUIRE(grid.gammas.size() == 5);
    CHECK(grid.alphas.front() == 0.0);
    CHECK(grid.alphas.back() == 1.0);
    for (std::size_t i = 0; i < grid.rows.size(); ++i) {
        CHECK(grid.rows[i].alpha == grid.alphas[i / 5]);
        CHECK(grid.rows[i].gamma == grid.gammas[i % 5]);
    }
    // Singlet corner.
    const SweepCell& corner = grid.rows[20];  // alpha = 1, gamma = 0
    CHECK(corner.report.concurrence == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(corner.report.discord == doctest::Approx(1.0).epsilon(1e-9));
    // Internal consistency of every cell.
    for (const SweepCell& cell : grid.rows)
        CHECK(cell.report.discord ==
              doctest::Approx(cell.report.mutual_info - cell.report.classical_corr)
                  .epsilon(1e-12));
}

TEST_CASE("sweep rejects degenerate grids") {
    const ChannelConfig config{ConfigKind::Dephasing, StateFamily::Werner};
    CHECK_THROWS_AS((void)sweep(config, 1, 5), ParamOutOfRange);
    CHECK_THROWS_AS((void)sweep(config, 5, 0), ParamOutOfRange);
}

TEST_CASE("sweeps are deterministic and thread-count independent") {
    const ChannelConfig config{ConfigKind::GAD, StateFamily::Phi, 2.0 / 3.0};
    const SweepGrid a = sweep(config, 4, 4);
    const SweepGrid b = sweep(config, 4, 4);
    const SweepGrid c = sweep(config, 4, 4, 3);
    CHECK(grids_identical(a, b));
    CHECK(grids_identical(a, c));
}

TEST_CASE("gad q = 2/3 kills entanglement before gamma = 1 in every interior row") {
    const ChannelConfig config{ConfigKind::GAD, StateFamily::Phi, 2.0 / 3.0};
    const SweepGrid grid = sweep(config, 5, 5);
    for (std::size_t row = 1; row + 1 < 5; ++row) {
        std::size_t last_positive = 0;
        for (std::size_t col = 0; col < 5; ++col)
            if (grid.rows[row * 5 + col].report.concurrence > 1e-12) last_positive = col;
        CHECK(last_positive < 4);  // dead strictly before the last gamma column
        CHECK(grid.rows[row * 5].report.concurrence > 0.0);  // but alive at gamma = 0
    }
}

TEST_CASE("separable pure corners carry no discord under gad") {
    const ChannelConfig config{ConfigKind::GAD, StateFamily::Phi, 1.0};
    const SweepGrid grid = sweep(config, 3, 5);
    for (std::size_t col = 0; col < 5; ++col) {
        CHECK(std::abs(grid.rows[col].report.discord) < 1e-6);           // alpha = 0
        CHECK(std::abs(grid.rows[2 * 5 + col].report.discord) < 1e-6);   // alpha = 1
    }
}

TEST_CASE("esd threshold for gad q = 1 matches sqrt((1-alpha)/alpha)") {
    const ChannelConfig config{ConfigKind::GAD, StateFamily::Phi, 1.0};
    for (double alpha : {0.6, 0.8, 0.9}) {
        const EsdResult r = esd_gamma(config, alpha);
        REQUIRE(r.gamma_esd.has_value());
        CHECK(*r.gamma_esd ==
              doctest::Approx(std::sqrt((1.0 - alpha) / alpha)).epsilon(2e-6));
        CHECK(r.bracket_width < 1e-6);
    }
    for (double alpha : {0.1, 0.3, 0.4})
        CHECK(!esd_gamma(config, alpha).gamma_esd.has_value());
}

TEST_CASE("esd threshold for dephased werner") {
    const ChannelConfig config{ConfigKind::Dephasing, StateFamily::Werner};
    const EsdResult mid = esd_gamma(config, 0.5);
    REQUIRE(mid.gamma_esd.has_value());
    CHECK(*mid.gamma_esd == doctest::Approx(0.5).epsilon(2e-6));

    // Entangled all the way to the asymptote.
    CHECK(!esd_gamma(config, 1.0).gamma_esd.has_value());
    // Never entangled below the separability threshold.
    CHECK(!esd_gamma(config, 0.2).gamma_esd.has_value());
}

TEST_CASE("every esd bracket satisfies its own invariant") {
    for (const ChannelConfig& config :
         {ChannelConfig{ConfigKind::GAD, StateFamily::Phi, 2.0 / 3.0},
          ChannelConfig{ConfigKind::Depolarizing, StateFamily::Phi},
          ChannelConfig{ConfigKind::DephasingPlusGAD, StateFamily::Phi, 1.0}}) {
        for (double alpha : {0.1, 0.5, 0.9}) {
            const EsdResult r = esd_gamma(config, alpha);
            REQUIRE(r.gamma_esd.has_value());
            const double w = r.bracket_width;
            CHECK(concurrence_general(evolve(config, alpha, *r.gamma_esd - w)) > 0.0);
            CHECK(concurrence_general(evolve(config, alpha,
                                             std::min(1.0, *r.gamma_esd + w))) < 1e-12);
        }
    }
}

TEST_CASE("combining dephasing with gad produces sudden death for every alpha") {
    const ChannelConfig combined{ConfigKind::DephasingPlusGAD, StateFamily::Phi, 1.0};
    const ChannelConfig gad_only{ConfigKind::GAD, StateFamily::Phi, 1.0};
    for (int i = 1; i <= 9; ++i) {
        const double alpha = i / 10.0;
        const EsdResult r = esd_gamma(combined, alpha);
        REQUIRE(r.gamma_esd.has_value());
        // (1-g) sqrt(a(1-a)) = a g  =>  g = s/(1+s), s = sqrt((1-a)/a)
        const double s = std::sqrt((1.0 - alpha) / alpha);
        CHECK(*r.gamma_esd == doctest::Approx(s / (1.0 + s)).epsilon(2e-6));
        // The contrast: gad alone never kills entanglement below alpha = 1/2.
        if (alpha < 0.5) CHECK(!esd_gamma(gad_only, alpha).gamma_esd.has_value());
    }
}

TEST_CASE("discord stays positive on the bounded scan") {
    GridBounds small;
    small.alpha_steps = 5;
    small.gamma_steps = 5;
    const DiscordScanResult r =
        discord_positivity_scan({ConfigKind::Dephasing, StateFamily::Werner}, small);
    CHECK(r.discord > 1e-7);
    // The asymptotic point itself is excluded from the scan: at gamma = 1
    // exactly the depolarized state is maximally mixed and discord-free.
    const auto report = discord(evolve({ConfigKind::Depolarizing, StateFamily::Phi}, 0.5, 1.0));
    CHECK(std::abs(report.discord) < 1e-9);
}

}  // TEST_SUITE
