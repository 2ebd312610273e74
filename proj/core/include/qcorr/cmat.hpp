// Fixed-size complex matrices (2x2 and 4x4) plus the spectral routines the
// rest of the library is built on. Everything is a plain value type; all
// functions are pure.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qcorr {

using Complex = std::complex<double>;

template <std::size_t N>
struct CMat {
    std::array<Complex, N * N> e{};

    Complex& operator()(std::size_t i, std::size_t j) { return e[i * N + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return e[i * N + j]; }

    static CMat zero() { return {}; }

    static CMat identity() {
        CMat m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    friend CMat operator+(const CMat& a, const CMat& b) {
        CMat r;
        for (std::size_t k = 0; k < N * N; ++k) r.e[k] = a.e[k] + b.e[k];
        return r;
    }

    friend CMat operator-(const CMat& a, const CMat& b) {
        CMat r;
        for (std::size_t k = 0; k < N * N; ++k) r.e[k] = a.e[k] - b.e[k];
        return r;
    }

    friend CMat operator*(Complex s, const CMat& a) {
        CMat r;
        for (std::size_t k = 0; k < N * N; ++k) r.e[k] = s * a.e[k];
        return r;
    }

    friend CMat operator*(const CMat& a, const CMat& b) {
        CMat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                Complex acc = 0.0;
                for (std::size_t k = 0; k < N; ++k) acc += a(i, k) * b(k, j);
                r(i, j) = acc;
            }
        return r;
    }
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

template <std::size_t N>
CMat<N> adjoint(const CMat<N>& m) {
    CMat<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

template <std::size_t N>
CMat<N> conjugate(const CMat<N>& m) {
    CMat<N> r;
    for (std::size_t k = 0; k < N * N; ++k) r.e[k] = std::conj(m.e[k]);
    return r;
}

template <std::size_t N>
Complex trace(const CMat<N>& m) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += m(i, i);
    return t;
}

// Largest entrywise magnitude of a - b.
template <std::size_t N>
double max_abs_diff(const CMat<N>& a, const CMat<N>& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) d = std::max(d, std::abs(a.e[k] - b.e[k]));
    return d;
}

// Largest entrywise magnitude of m - m^dagger.
template <std::size_t N>
double hermiticity_defect(const CMat<N>& m) {
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j)
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

// Pauli matrices, indexed 1..3 (x, y, z).
CMat2 pauli(int axis);

inline CMat2 diag2(Complex a, Complex b) {
    CMat2 m;
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

// Kronecker product with row-major block layout:
// entry[(2i+k),(2j+l)] = a(i,j) * b(k,l).
CMat4 kron(const CMat2& a, const CMat2& b);

struct EigenSystem4 {
    std::array<double, 4> values;  // sorted descending
    CMat4 vectors;                 // orthonormal eigenvectors as columns
};

// Cyclic Jacobi diagonalization of a Hermitian 4x4 matrix. The input must be
// Hermitian within 1e-10 (throws NotHermitian otherwise); it is symmetrized
// before the iteration so the result corresponds to (m + m^dagger)/2.
EigenSystem4 hermitian_eigensystem(const CMat4& m);

// Closed-form eigenvalues of a Hermitian 2x2 matrix, descending.
std::array<double, 2> hermitian_eigenvalues2(const CMat2& m);

// Principal square root of a Hermitian positive-semidefinite matrix.
// Eigenvalues in [-1e-10, 0) count as round-off and are clamped to zero;
// anything more negative throws InvalidState.
CMat4 matrix_sqrt_psd(const CMat4& m);

}  // namespace qcorr
