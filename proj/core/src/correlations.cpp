#include "qcorr/correlations.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kDegenerateOutcome = 1e-14;
constexpr double kObjectiveTol = 1e-10;
constexpr int kMaxRefineIter = 500;
constexpr int kGridTheta = 64;
constexpr int kGridPhi = 128;

double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double entropy_of(double lambda) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    return -xlog2(lambda);
}

// The 2x2 blocks of rho over the measured qubit: block(a,a')[b,b'] =
// rho[(2a+b),(2a'+b')]. Conditional states of A are quadratic forms of the
// measurement ket in these blocks.
struct MeasuredBlocks {
    CMat2 block[2][2];

    explicit MeasuredBlocks(const DensityMatrix& rho) {
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t ap = 0; ap < 2; ++ap)
                for (std::size_t b = 0; b < 2; ++b)
                    for (std::size_t bp = 0; bp < 2; ++bp)
                        block[a][ap](b, bp) = rho(2 * a + b, 2 * ap + bp);
    }

    CMat2 conditional_unnormalized(const std::array<Complex, 2>& psi) const {
        CMat2 m;
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t ap = 0; ap < 2; ++ap) {
                Complex acc = 0.0;
                for (std::size_t b = 0; b < 2; ++b)
                    for (std::size_t bp = 0; bp < 2; ++bp)
                        acc += std::conj(psi[b]) * block[a][ap](b, bp) * psi[bp];
                m(a, ap) = acc;
            }
        return m;
    }
};

double conditional_entropy_sum(const MeasuredBlocks& blocks, double theta, double phi) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex eip = std::polar(1.0, phi);
    const std::array<Complex, 2> psi1{c, eip * s};
    const std::array<Complex, 2> psi2{std::conj(eip) * s, -c};

    double total = 0.0;
    for (const auto& psi : {psi1, psi2}) {
        CMat2 m = blocks.conditional_unnormalized(psi);
        const double p = m(0, 0).real() + m(1, 1).real();
        if (p < kDegenerateOutcome) continue;  // p S(rho|k) -> 0 in the limit
        const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
        const double a = m(0, 0).real() / p;
        const double d = m(1, 1).real() / p;
        const double h = 0.5 * std::hypot(a - d, 2.0 * std::abs(b) / p);
        const double mean = 0.5 * (a + d);
        total += p * (entropy_of(mean + h) + entropy_of(mean - h));
    }
    return total;
}

struct Vertex {
    double theta;
    double phi;
    double value;
};

}  // namespace

std::array<Complex, 2> MeasurementBasis::ket(int k) const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex eip = std::polar(1.0, phi);
    if (k == 1) return {c, eip * s};
    if (k == 2) return {std::conj(eip) * s, -c};
    throw ParamOutOfRange("measurement outcome must be 1 or 2");
}

CMat2 MeasurementBasis::projector(int k) const {
    const auto psi = ket(k);
    CMat2 p;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) p(i, j) = psi[i] * std::conj(psi[j]);
    return p;
}

double entropy(const CMat2& rho) {
    if (hermiticity_defect(rho) > 1e-10) throw InvalidState("entropy: state not Hermitian");
    if (std::abs(trace(rho) - Complex(1.0)) > 1e-9)
        throw InvalidState("entropy: state trace differs from 1");
    const auto ev = hermitian_eigenvalues2(rho);
    if (ev[1] < -1e-9) throw InvalidState("entropy: state has a negative eigenvalue");
    // + 0.0 turns -0 into +0 so zero entropies print without a sign.
    return entropy_of(ev[0]) + entropy_of(ev[1]) + 0.0;
}

double entropy(const DensityMatrix& rho) {
    const EigenSystem4 es = hermitian_eigensystem(rho.mat());
    double s = 0.0;
    for (double lambda : es.values) s += entropy_of(lambda);
    return s + 0.0;
}

double mutual_information(const DensityMatrix& rho) {
    return entropy(partial_trace(rho, Subsystem::A)) + entropy(partial_trace(rho, Subsystem::B)) -
           entropy(rho) + 0.0;
}

ConditionalState conditional_state(const DensityMatrix& rho, const MeasurementBasis& basis,
                                   int outcome) {
    const MeasuredBlocks blocks(rho);
    CMat2 m = blocks.conditional_unnormalized(basis.ket(outcome));
    const double p = m(0, 0).real() + m(1, 1).real();
    if (p < kDegenerateOutcome)
        return {p, 0.5 * CMat2::identity(), true};
    m = (1.0 / p) * m;
    // Symmetrize away round-off so downstream entropy sees a clean state.
    m = 0.5 * (m + adjoint(m));
    return {p, m, false};
}

double measurement_objective(const DensityMatrix& rho, const MeasurementBasis& basis,
                             MeasuredSide side) {
    const DensityMatrix& oriented = (side == MeasuredSide::B) ? rho : swap_qubits(rho);
    const MeasuredBlocks blocks(oriented);
    const double s_kept = entropy(partial_trace(oriented, Subsystem::A));
    return s_kept - conditional_entropy_sum(blocks, basis.theta, basis.phi);
}

ClassicalCorrelation classical_correlation(const DensityMatrix& rho, MeasuredSide side) {
    const DensityMatrix oriented = (side == MeasuredSide::B) ? rho : swap_qubits(rho);
    const MeasuredBlocks blocks(oriented);
    const double s_kept = entropy(partial_trace(oriented, Subsystem::A));

    const auto objective = [&](double theta, double phi) {
        return s_kept - conditional_entropy_sum(blocks, theta, phi);
    };

    // Coarse global seed. The unordered projector pair covers the Bloch
    // sphere for theta in [0, pi/2], phi in [0, 2 pi).
    double best_theta = 0.0, best_phi = 0.0;
    double best = objective(0.0, 0.0);
    const double dtheta = (0.5 * M_PI) / (kGridTheta - 1);
    const double dphi = (2.0 * M_PI) / kGridPhi;
    for (int i = 0; i < kGridTheta; ++i) {
        const double theta = i * dtheta;
        for (int j = 0; j < kGridPhi; ++j) {
            const double phi = j * dphi;
            const double v = objective(theta, phi);
            if (v > best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // Nelder-Mead refinement from the best grid point. The objective is
    // smooth and periodic, so the walk is unconstrained.
    std::array<Vertex, 3> simplex{
        Vertex{best_theta, best_phi, best},
        Vertex{best_theta + dtheta, best_phi, objective(best_theta + dtheta, best_phi)},
        Vertex{best_theta, best_phi + dphi, objective(best_theta, best_phi + dphi)},
    };
    bool converged = false;
    for (int iter = 0; iter < kMaxRefineIter; ++iter) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.value > b.value; });
        if (simplex[0].value - simplex[2].value < kObjectiveTol) {
            converged = true;
            break;
        }
        const double cth = 0.5 * (simplex[0].theta + simplex[1].theta);
        const double cph = 0.5 * (simplex[0].phi + simplex[1].phi);
        const Vertex& worst = simplex[2];

        const auto eval = [&](double t, double p) { return Vertex{t, p, objective(t, p)}; };
        Vertex reflected = eval(2.0 * cth - worst.theta, 2.0 * cph - worst.phi);
        if (reflected.value > simplex[0].value) {
            Vertex expanded = eval(3.0 * cth - 2.0 * worst.theta, 3.0 * cph - 2.0 * worst.phi);
            simplex[2] = expanded.value > reflected.value ? expanded : reflected;
        } else if (reflected.value > simplex[1].value) {
            simplex[2] = reflected;
        } else {
            Vertex contracted =
                eval(0.5 * (cth + worst.theta), 0.5 * (cph + worst.phi));
            if (contracted.value > worst.value) {
                simplex[2] = contracted;
            } else {
                for (int k = 1; k < 3; ++k)
                    simplex[k] = eval(0.5 * (simplex[0].theta + simplex[k].theta),
                                      0.5 * (simplex[0].phi + simplex[k].phi));
            }
        }
    }
    if (!converged) throw OptimizerDidNotConverge("measurement optimizer hit iteration cap");

    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.value > b.value; });
    if (simplex[0].value >= best) {
        best = simplex[0].value;
        best_theta = simplex[0].theta;
        best_phi = simplex[0].phi;
    }
    return {best, MeasurementBasis{best_theta, best_phi}};
}

CorrelationReport discord(const DensityMatrix& rho) {
    const double info = mutual_information(rho);
    const ClassicalCorrelation cc = classical_correlation(rho, MeasuredSide::B);
    double d = info - cc.value;
    // Round-off within [-1e-9, 0) counts as zero; anything more negative is
    // reported raw since it would signal an optimizer defect.
    if (d < 0.0 && d >= -1e-9) d = 0.0;
    return {concurrence_general(rho), info, cc.value, d, cc.argmax};
}

double concurrence_general(const DensityMatrix& rho) {
    const CMat4 flip = kron(pauli(2), pauli(2));
    const CMat4 rho_tilde = flip * conjugate(rho.mat()) * flip;
    const CMat4 root = matrix_sqrt_psd(rho.mat());
    CMat4 h = root * rho_tilde * root;
    h = 0.5 * (h + adjoint(h));
    EigenSystem4 es = hermitian_eigensystem(h);
    std::array<double, 4> lambda{};
    for (std::size_t k = 0; k < 4; ++k) {
        // Eigenvalues below the round-off floor of the triple product are
        // exact zeros; taking their square root would inflate them to ~1e-8.
        const double mu = es.values[k] < 1e-15 ? 0.0 : es.values[k];
        lambda[k] = std::sqrt(mu);
    }
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double concurrence_x(const XState& x) {
    const double p1 = std::max(0.0, x.populations[0]);
    const double p2 = std::max(0.0, x.populations[1]);
    const double p3 = std::max(0.0, x.populations[2]);
    const double p4 = std::max(0.0, x.populations[3]);
    const double lambda1 = std::abs(x.rho14) - std::sqrt(p2 * p3);
    const double lambda2 = std::abs(x.rho23) - std::sqrt(p1 * p4);
    return 2.0 * std::max({0.0, lambda1, lambda2});
}

double dephased_werner_concurrence_closed_form(double alpha, double gamma) {
    return alpha * (1.5 - 2.0 * gamma) - 0.5;
}

std::optional<double> dephased_werner_discord_closed_form(double alpha, double gamma) {
    if (!(alpha >= 0.0 && alpha <= 1.0) || !(gamma >= 0.0 && gamma <= 1.0))
        throw ParamOutOfRange("alpha and gamma must lie in [0, 1]");
    const double a = 1.0 - alpha;
    const double b = 2.0 * alpha * (1.0 - gamma);
    if (a - b <= 0.0) return std::nullopt;
    return (xlog2(a + b) + xlog2(a - b)) / 4.0 - xlog2(a) / 2.0;
}

double discord_bell_diagonal(const BlochCorrelationForm& form) {
    if (std::abs(form.c0) > 1e-12)
        throw NotBellDiagonal("state has a local polarization term");
    const DensityMatrix rho = from_bloch(form);
    const double c =
        std::max({std::abs(form.c[0]), std::abs(form.c[1]), std::abs(form.c[2])});
    const double classical = 0.5 * (xlog2(1.0 - c) + xlog2(1.0 + c));
    return mutual_information(rho) - classical;
}

}  // namespace qcorr
