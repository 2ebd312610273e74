#include "qcorr/cmat.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"

namespace qcorr {

CMat2 pauli(int axis) {
    CMat2 m;
    switch (axis) {
        case 1:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 2:
            m(0, 1) = Complex(0.0, -1.0);
            m(1, 0) = Complex(0.0, 1.0);
            break;
        case 3:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw ParamOutOfRange("pauli axis must be 1, 2 or 3");
    }
    return m;
}

CMat4 kron(const CMat2& a, const CMat2& b) {
    CMat4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

namespace {

constexpr double kHermCheckTol = 1e-10;
constexpr double kOffDiagTarget = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const CMat4& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem4 hermitian_eigensystem(const CMat4& m) {
    if (hermiticity_defect(m) > kHermCheckTol)
        throw NotHermitian("hermitian_eigensystem: input is not Hermitian");

    // Work on the exactly Hermitian average.
    CMat4 a = 0.5 * (m + adjoint(m));
    CMat4 v = CMat4::identity();

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < kOffDiagTarget) break;
        for (std::size_t p = 0; p < 4; ++p) {
            for (std::size_t q = p + 1; q < 4; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const Complex phase = apq / r;  // e^{i arg(apq)}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();

                // Small-angle root of t^2 - 2*theta*t - 1 = 0 eliminates the
                // phase-rotated pivot.
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0)
                                     ? -1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                     : 1.0 / (-theta + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // Columns: (AG)(:,p) = c*A(:,p) + s*conj(phase)*A(:,q)
                //          (AG)(:,q) = -s*phase*A(:,p) + c*A(:,q)
                for (std::size_t i = 0; i < 4; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip + s * std::conj(phase) * aiq;
                    a(i, q) = -s * phase * aip + c * aiq;
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + s * std::conj(phase) * viq;
                    v(i, q) = -s * phase * vip + c * viq;
                }
                // Rows: (G^dag A)(p,:) = c*A(p,:) + s*phase*A(q,:)
                //       (G^dag A)(q,:) = -s*conj(phase)*A(p,:) + c*A(q,:)
                for (std::size_t j = 0; j < 4; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj + s * phase * aqj;
                    a(q, j) = -s * std::conj(phase) * apj + c * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    EigenSystem4 es;
    std::array<int, 4> order{0, 1, 2, 3};
    std::array<double, 4> diag{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(), a(3, 3).real()};
    std::sort(order.begin(), order.end(), [&](int x, int y) { return diag[x] > diag[y]; });
    for (std::size_t k = 0; k < 4; ++k) {
        es.values[k] = diag[order[k]];
        for (std::size_t i = 0; i < 4; ++i) es.vectors(i, k) = v(i, order[k]);
    }
    return es;
}

std::array<double, 2> hermitian_eigenvalues2(const CMat2& m) {
    if (hermiticity_defect(m) > kHermCheckTol)
        throw NotHermitian("hermitian_eigenvalues2: input is not Hermitian");
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double h = 0.5 * std::hypot(a - d, 2.0 * std::abs(m(0, 1)));
    const double mean = 0.5 * (a + d);
    return {mean + h, mean - h};
}

CMat4 matrix_sqrt_psd(const CMat4& m) {
    EigenSystem4 es = hermitian_eigensystem(m);
    std::array<double, 4> roots{};
    for (std::size_t k = 0; k < 4; ++k) {
        double lambda = es.values[k];
        if (lambda < -1e-10)
            throw InvalidState("matrix_sqrt_psd: eigenvalue below PSD tolerance");
        if (lambda < 0.0) lambda = 0.0;
        roots[k] = std::sqrt(lambda);
    }
    CMat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k)
                acc += es.vectors(i, k) * roots[k] * std::conj(es.vectors(j, k));
            r(i, j) = acc;
        }
    // Kill round-off asymmetry so the result is Hermitian by construction.
    return 0.5 * (r + adjoint(r));
}

}  // namespace qcorr
