// Correlation measures for two-qubit states: von Neumann entropy, mutual
// information, measurement-optimized classical correlation, quantum discord
// and concurrence, plus the closed-form reference expressions used as
// independent cross-checks.
#pragma once

#include <array>
#include <optional>

#include "qcorr/cmat.hpp"
#include "qcorr/density_matrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// Projective measurement basis on one qubit:
//   |psi1> = cos(theta)|0> + e^{i phi} sin(theta)|1>
//   |psi2> = e^{-i phi} sin(theta)|0> - cos(theta)|1>
struct MeasurementBasis {
    double theta;
    double phi;

    std::array<Complex, 2> ket(int k) const;  // k = 1 or 2
    CMat2 projector(int k) const;
};

struct ConditionalState {
    double probability;
    CMat2 state;       // reduced state of A after the outcome; I/2 if degenerate
    bool degenerate;   // probability fell below 1e-14
};

struct CorrelationReport {
    double concurrence;
    double mutual_info;       // bits
    double classical_corr;    // bits
    double discord;           // bits
    MeasurementBasis argmax;  // basis achieving the classical correlation
};

// Entropies in bits; eigenvalues are clamped to [0, 1] and 0 log 0 := 0.
double entropy(const CMat2& rho);
double entropy(const DensityMatrix& rho);

// S(rho_A) + S(rho_B) - S(rho_AB).
double mutual_information(const DensityMatrix& rho);

enum class MeasuredSide { A, B };

// Post-measurement reduced state of A given outcome k of measuring B.
ConditionalState conditional_state(const DensityMatrix& rho, const MeasurementBasis& basis,
                                   int outcome);

// The quantity maximized over bases: S(rho_kept) - sum_k p_k S(rho_kept|k).
double measurement_objective(const DensityMatrix& rho, const MeasurementBasis& basis,
                             MeasuredSide side = MeasuredSide::B);

struct ClassicalCorrelation {
    double value;  // bits
    MeasurementBasis argmax;
};

// Maximum of the measurement objective over projective measurements on the
// given side: 64x128 angular grid seed followed by Nelder-Mead refinement.
// Throws OptimizerDidNotConverge after 500 refinement steps.
ClassicalCorrelation classical_correlation(const DensityMatrix& rho,
                                           MeasuredSide side = MeasuredSide::B);

// Full report: concurrence, mutual information, classical correlation
// (measuring B) and their difference, the discord.
CorrelationReport discord(const DensityMatrix& rho);

// Wootters concurrence via the Hermitian similarity sqrt(rho) rho~ sqrt(rho),
// rho~ = (s2 (x) s2) conj(rho) (s2 (x) s2).
double concurrence_general(const DensityMatrix& rho);

// Analytic X-state concurrence 2 max{0, |rho14| - sqrt(rho22 rho33),
// |rho23| - sqrt(rho11 rho44)}.
double concurrence_x(const XState& x);

// Closed-form references for the Werner state under two-sided dephasing.
// The concurrence expression alpha*(3/2 - 2*gamma) - 1/2 and the compact
// discord expression [F(a+b) + F(a-b)]/4 - F(a)/2 (F(x) = x log2 x,
// a = 1-alpha, b = 2 alpha (1-gamma)) are reproduced verbatim for reporting;
// both deviate from the channel-derived values, which are authoritative.
double dephased_werner_concurrence_closed_form(double alpha, double gamma);

// Returns nullopt when a - b <= 0, where F(a-b) is undefined.
std::optional<double> dephased_werner_discord_closed_form(double alpha, double gamma);

// Discord of a Bell-diagonal state (c0 = 0) using the closed-form classical
// correlation with c = max_j |c_j|. Independent of the numerical optimizer.
double discord_bell_diagonal(const BlochCorrelationForm& form);

}  // namespace qcorr
