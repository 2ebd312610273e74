#include "qcorr/states.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kXFormTol = 1e-10;
constexpr double kBlochTol = 1e-10;

void require_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw ParamOutOfRange(std::string(name) + " must lie in [0, 1]");
}

CMat4 bloch_matrix(const BlochCorrelationForm& form) {
    const CMat2 s3 = pauli(3);
    const CMat2 id = CMat2::identity();
    CMat4 m = kron(id, id);
    m = m + form.c0 * (kron(s3, id) + kron(id, s3));
    for (int j = 1; j <= 3; ++j) {
        const CMat2 sj = pauli(j);
        m = m + form.c[j - 1] * kron(sj, sj);
    }
    return 0.25 * m;
}

double pauli_expectation(const DensityMatrix& rho, const CMat4& op) {
    return trace(rho.mat() * op).real();
}

}  // namespace

XState::XState(const std::array<double, 4>& pops, Complex r14, Complex r23)
    : populations(pops), rho14(r14), rho23(r23) {
    double sum = 0.0;
    for (double p : populations) {
        if (p < -1e-12) throw InvalidState("X-state population is negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw InvalidState("X-state populations do not sum to 1");
    const double p1 = std::max(0.0, populations[0]);
    const double p2 = std::max(0.0, populations[1]);
    const double p3 = std::max(0.0, populations[2]);
    const double p4 = std::max(0.0, populations[3]);
    if (std::abs(rho14) > std::sqrt(p1 * p4) + 1e-12)
        throw InvalidState("X-state coherence rho14 breaks positivity");
    if (std::abs(rho23) > std::sqrt(p2 * p3) + 1e-12)
        throw InvalidState("X-state coherence rho23 breaks positivity");
}

DensityMatrix werner(double alpha) {
    require_unit_interval(alpha, "alpha");
    CMat4 m;
    m(0, 0) = (1.0 - alpha) / 4.0;
    m(1, 1) = (1.0 + alpha) / 4.0;
    m(2, 2) = (1.0 + alpha) / 4.0;
    m(3, 3) = (1.0 - alpha) / 4.0;
    m(1, 2) = -alpha / 2.0;
    m(2, 1) = -alpha / 2.0;
    return DensityMatrix(m);
}

DensityMatrix phi_state(double alpha) {
    require_unit_interval(alpha, "alpha");
    CMat4 m;
    m(0, 0) = 1.0 - alpha;
    m(3, 3) = alpha;
    m(0, 3) = std::sqrt(alpha * (1.0 - alpha));
    m(3, 0) = m(0, 3);
    return DensityMatrix(m);
}

XState to_x_state(const DensityMatrix& rho) {
    const std::array<std::pair<int, int>, 4> excluded{{{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
    for (auto [i, j] : excluded) {
        if (std::abs(rho(i, j)) > kXFormTol || std::abs(rho(j, i)) > kXFormTol)
            throw NotXForm("state carries entries outside the X structure");
    }
    return XState({rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(), rho(3, 3).real()},
                  rho(0, 3), rho(1, 2));
}

DensityMatrix to_density(const XState& x) {
    CMat4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = x.populations[i];
    m(0, 3) = x.rho14;
    m(3, 0) = std::conj(x.rho14);
    m(1, 2) = x.rho23;
    m(2, 1) = std::conj(x.rho23);
    return DensityMatrix(m);
}

DensityMatrix from_bloch(const BlochCorrelationForm& form) {
    try {
        return DensityMatrix(bloch_matrix(form));
    } catch (const InvalidState& e) {
        throw NotRepresentable(std::string("coefficients do not give a valid state: ") + e.what());
    }
}

BlochCorrelationForm to_bloch(const DensityMatrix& rho) {
    const CMat2 id = CMat2::identity();
    // Local polarization must be along s3 and equal on both qubits.
    for (int j = 1; j <= 2; ++j) {
        if (std::abs(pauli_expectation(rho, kron(pauli(j), id))) > kBlochTol ||
            std::abs(pauli_expectation(rho, kron(id, pauli(j)))) > kBlochTol)
            throw NotRepresentable("local Bloch vector has a transverse component");
    }
    const double c0a = pauli_expectation(rho, kron(pauli(3), id));
    const double c0b = pauli_expectation(rho, kron(id, pauli(3)));
    if (std::abs(c0a - c0b) > kBlochTol)
        throw NotRepresentable("reduced states of the two qubits differ");

    BlochCorrelationForm form;
    form.c0 = c0a;
    for (int j = 1; j <= 3; ++j)
        form.c[j - 1] = pauli_expectation(rho, kron(pauli(j), pauli(j)));

    if (max_abs_diff(bloch_matrix(form), rho.mat()) > kBlochTol)
        throw NotRepresentable("state lies outside the Pauli-correlation family");
    return form;
}

CMat2 partial_trace(const DensityMatrix& rho, Subsystem keep) {
    CMat2 r;
    if (keep == Subsystem::A) {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                r(i, j) = rho(2 * i + 0, 2 * j + 0) + rho(2 * i + 1, 2 * j + 1);
    } else {
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t bp = 0; bp < 2; ++bp)
                r(b, bp) = rho(0 + b, 0 + bp) + rho(2 + b, 2 + bp);
    }
    return r;
}

DensityMatrix swap_qubits(const DensityMatrix& rho) {
    CMat4 m;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t ap = 0; ap < 2; ++ap)
                for (std::size_t bp = 0; bp < 2; ++bp)
                    m(2 * b + a, 2 * bp + ap) = rho(2 * a + b, 2 * ap + bp);
    return DensityMatrix(m);
}

}  // namespace qcorr
