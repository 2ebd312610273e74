#include "qcorr/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

void require_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw ParamOutOfRange(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

KrausChannel::KrausChannel(ChannelKind kind, std::vector<CMat2> ops, double gamma,
                           std::optional<double> q)
    : kind_(kind), ops_(std::move(ops)), gamma_(gamma), q_(q) {
    if (completeness_defect() > kCompletenessTol)
        throw InvalidChannel("Kraus operators fail the completeness relation");
}

double KrausChannel::completeness_defect() const {
    CMat2 sum;
    for (const CMat2& op : ops_) sum = sum + adjoint(op) * op;
    return max_abs_diff(sum, CMat2::identity());
}

KrausChannel KrausChannel::identity() {
    return KrausChannel(ChannelKind::Identity, {CMat2::identity()}, 0.0, std::nullopt);
}

KrausChannel KrausChannel::dephasing(double gamma) {
    require_unit_interval(gamma, "gamma");
    // E1 = diag(0, sqrt(gamma)) is the completeness-restoring partner of
    // E0 = diag(1, sqrt(1-gamma)).
    std::vector<CMat2> ops{
        diag2(1.0, std::sqrt(1.0 - gamma)),
        diag2(0.0, std::sqrt(gamma)),
    };
    return KrausChannel(ChannelKind::Dephasing, std::move(ops), gamma, std::nullopt);
}

KrausChannel KrausChannel::gad(double gamma, double q) {
    require_unit_interval(gamma, "gamma");
    require_unit_interval(q, "q");
    const CMat2 lower = 0.5 * (pauli(1) + Complex(0.0, 1.0) * pauli(2));  // |0><1|
    const CMat2 raise = 0.5 * (pauli(1) - Complex(0.0, 1.0) * pauli(2));  // |1><0|
    // The E2 prefactor is sqrt(1-q), not sqrt((1-q)*gamma); completeness
    // fixes it uniquely given the other three operators.
    std::vector<CMat2> ops{
        std::sqrt(q) * diag2(1.0, std::sqrt(1.0 - gamma)),
        std::sqrt(q * gamma) * lower,
        std::sqrt(1.0 - q) * diag2(std::sqrt(1.0 - gamma), 1.0),
        std::sqrt((1.0 - q) * gamma) * raise,
    };
    return KrausChannel(ChannelKind::GeneralizedAmplitudeDamping, std::move(ops), gamma, q);
}

KrausChannel KrausChannel::depolarizing(double gamma) {
    require_unit_interval(gamma, "gamma");
    std::vector<CMat2> ops{
        std::sqrt(1.0 - 0.75 * gamma) * CMat2::identity(),
        std::sqrt(0.25 * gamma) * pauli(1),
        std::sqrt(0.25 * gamma) * pauli(2),
        std::sqrt(0.25 * gamma) * pauli(3),
    };
    return KrausChannel(ChannelKind::Depolarizing, std::move(ops), gamma, std::nullopt);
}

KrausChannel compose(const KrausChannel& first, const KrausChannel& second) {
    std::vector<CMat2> ops;
    ops.reserve(first.ops_.size() * second.ops_.size());
    for (const CMat2& f : second.ops_)
        for (const CMat2& e : first.ops_) ops.push_back(f * e);
    const double gamma = std::max(first.gamma_, second.gamma_);
    return KrausChannel(ChannelKind::Composed, std::move(ops), gamma, second.q_ ? second.q_ : first.q_);
}

double gamma_of(const DecayClock& clock) {
    if (clock.rate < 0.0) throw NegativeInput("decay rate must be >= 0");
    if (clock.time < 0.0) throw NegativeInput("elapsed time must be >= 0");
    return 1.0 - std::exp(-clock.rate * clock.time);
}

CMat2 apply_one_qubit(const KrausChannel& ch, const CMat2& rho) {
    CMat2 out;
    for (const CMat2& op : ch.operators()) out = out + op * rho * adjoint(op);
    return out;
}

DensityMatrix apply_two_qubit(const DensityMatrix& rho0, const KrausChannel& a,
                              const KrausChannel& b) {
    if (a.completeness_defect() > KrausChannel::kCompletenessTol ||
        b.completeness_defect() > KrausChannel::kCompletenessTol)
        throw InvalidChannel("apply_two_qubit: channel fails completeness");
    CMat4 out;
    for (const CMat2& ea : a.operators()) {
        for (const CMat2& eb : b.operators()) {
            const CMat4 k = kron(ea, eb);
            out = out + k * rho0.mat() * adjoint(k);
        }
    }
    return DensityMatrix(out);
}

}  // namespace qcorr
