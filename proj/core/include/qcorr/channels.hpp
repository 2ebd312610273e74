// Single-qubit Kraus channels (dephasing, generalized amplitude damping,
// depolarizing) and the two-qubit product evolution
//   rho' = sum_{mu,nu} (E_mu (x) E_nu) rho (E_mu (x) E_nu)^dagger
// for independent per-qubit noise.
#pragma once

#include <optional>
#include <vector>

#include "qcorr/cmat.hpp"
#include "qcorr/density_matrix.hpp"

namespace qcorr {

enum class ChannelKind { Identity, Dephasing, GeneralizedAmplitudeDamping, Depolarizing, Composed };

class KrausChannel {
  public:
    static constexpr double kCompletenessTol = 1e-12;

    // gamma = 0 leaves states untouched; gamma = 1 is the infinite-time limit.
    static KrausChannel identity();
    static KrausChannel dephasing(double gamma);
    // q sets the stationary population of |0>; q = 1 is amplitude damping at
    // zero temperature.
    static KrausChannel gad(double gamma, double q);
    static KrausChannel depolarizing(double gamma);

    ChannelKind kind() const { return kind_; }
    const std::vector<CMat2>& operators() const { return ops_; }
    double gamma() const { return gamma_; }
    std::optional<double> q() const { return q_; }

    // Max entrywise deviation of sum E^dag E from the identity.
    double completeness_defect() const;

    friend KrausChannel compose(const KrausChannel& first, const KrausChannel& second);

  private:
    KrausChannel(ChannelKind kind, std::vector<CMat2> ops, double gamma, std::optional<double> q);

    ChannelKind kind_;
    std::vector<CMat2> ops_;
    double gamma_;
    std::optional<double> q_;
};

// Channel whose operator list is all products second_nu * first_mu, i.e.
// "apply first, then second".
KrausChannel compose(const KrausChannel& first, const KrausChannel& second);

struct DecayClock {
    double rate;  // Gamma >= 0, inverse time units
    double time;  // t >= 0
};

// gamma = 1 - exp(-rate * time).
double gamma_of(const DecayClock& clock);

// Single-qubit action sum_mu E rho E^dagger (used by tests and fixed-point
// checks; not trace-validating).
CMat2 apply_one_qubit(const KrausChannel& ch, const CMat2& rho);

// Two-qubit evolution with channel a on the first qubit and b on the second.
DensityMatrix apply_two_qubit(const DensityMatrix& rho0, const KrausChannel& a,
                              const KrausChannel& b);

}  // namespace qcorr
