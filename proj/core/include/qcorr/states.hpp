// Initial-state factories (Werner and |Phi> superposition families) and
// converters between the full 4x4 matrix, the X-state form and the restricted
// Pauli-correlation (Bloch) form used for closed-form cross-checks.
#pragma once

#include <array>

#include "qcorr/cmat.hpp"
#include "qcorr/density_matrix.hpp"

namespace qcorr {

// Two-qubit state whose only nonzero entries sit on the diagonal and the
// anti-diagonal: rho12 = rho13 = rho24 = rho34 = 0 in the
// |00>,|01>,|10>,|11> ordering. Construction validates positivity of the two
// 2x2 blocks.
struct XState {
    std::array<double, 4> populations;  // rho11, rho22, rho33, rho44
    Complex rho14;
    Complex rho23;

    XState(const std::array<double, 4>& pops, Complex r14, Complex r23);
};

// State of the form
//   rho = 1/4 [ I + c0 (s3 (x) I + I (x) s3) + sum_j c[j-1] s_j (x) s_j ],
// which forces equal reduced states on both qubits.
struct BlochCorrelationForm {
    double c0;
    std::array<double, 3> c;
};

// (1-alpha) I/4 + alpha |Psi-><Psi-|.
DensityMatrix werner(double alpha);

// Projector onto sqrt(1-alpha)|00> + sqrt(alpha)|11>.
DensityMatrix phi_state(double alpha);

// Throws NotXForm if any excluded entry exceeds 1e-10 in magnitude.
XState to_x_state(const DensityMatrix& rho);

DensityMatrix to_density(const XState& x);

DensityMatrix from_bloch(const BlochCorrelationForm& form);

// Requires both local Bloch vectors to point along s3 and to coincide, and
// the reconstruction to reproduce rho entrywise within 1e-10; throws
// NotRepresentable otherwise.
BlochCorrelationForm to_bloch(const DensityMatrix& rho);

enum class Subsystem { A, B };

// Reduced state of the kept qubit; unit-trace Hermitian PSD by construction.
CMat2 partial_trace(const DensityMatrix& rho, Subsystem keep);

// Exchanges the roles of the two qubits.
DensityMatrix swap_qubits(const DensityMatrix& rho);

}  // namespace qcorr
