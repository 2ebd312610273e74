#include <doctest.h>

#include <cmath>
#include <random>

#include "qcorr/cmat.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

CMat4 diag4(double a, double b, double c, double d) {
    CMat4 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

// Entries are dyadic rationals (k/64), so sums and products below stay exact
// in double precision.
CMat2 random_dyadic(std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-64, 64);
    CMat2 m;
    for (auto& v : m.e) v = Complex(dist(rng) / 64.0, dist(rng) / 64.0);
    return m;
}

CMat4 random_hermitian(std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CMat4 g;
    for (auto& v : g.e) v = Complex(dist(rng), dist(rng));
    return 0.5 * (g + adjoint(g));
}

}  // namespace

TEST_SUITE("cmat") {

TEST_CASE("kron of identities is the 4x4 identity") {
    CHECK(max_abs_diff(kron(CMat2::identity(), CMat2::identity()), CMat4::identity()) == 0.0);
}

TEST_CASE("kron of the second Pauli with itself is the spin-flip matrix") {
    const CMat4 ss = kron(pauli(2), pauli(2));
    CMat4 expected;
    expected(0, 3) = -1.0;
    expected(1, 2) = 1.0;
    expected(2, 1) = 1.0;
    expected(3, 0) = -1.0;
    CHECK(max_abs_diff(ss, expected) == 0.0);
}

TEST_CASE("kron of projectors") {
    const CMat4 p = kron(diag2(1.0, 0.0), diag2(1.0, 0.0));
    CHECK(max_abs_diff(p, diag4(1, 0, 0, 0)) == 0.0);
}

TEST_CASE("kron is bilinear, exactly, on dyadic entries") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const CMat2 a = random_dyadic(rng);
        const CMat2 b = random_dyadic(rng);
        const CMat2 c = random_dyadic(rng);
        CHECK(max_abs_diff(kron(a + b, c), kron(a, c) + kron(b, c)) == 0.0);
        CHECK(max_abs_diff(kron(c, a + b), kron(c, a) + kron(c, b)) == 0.0);
    }
}

TEST_CASE("eigensystem of a diagonal matrix") {
    const auto es = hermitian_eigensystem(diag4(0.4, 0.3, 0.2, 0.1));
    CHECK(es.values[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(es.values[1] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(es.values[2] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(es.values[3] == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("eigensystem of the identity") {
    const auto es = hermitian_eigensystem(CMat4::identity());
    for (double v : es.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    // Eigenvector orthonormality.
    const CMat4 gram = adjoint(es.vectors) * es.vectors;
    CHECK(max_abs_diff(gram, CMat4::identity()) < 1e-12);
}

TEST_CASE("eigenvalues of the alpha = 0.2 Werner state") {
    // (1 + 3 alpha)/4 on the singlet, (1 - alpha)/4 threefold; cross-checked
    // against the characteristic polynomial
    //   l^4 - l^3 + 0.36 l^2 - 0.056 l + 0.0032.
    const auto es = hermitian_eigensystem(werner(0.2).mat());
    CHECK(es.values[0] == doctest::Approx(0.4).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) CHECK(es.values[k] == doctest::Approx(0.2).epsilon(1e-12));
    for (double v : es.values) {
        const double p = ((((v - 1.0) * v + 0.36) * v) - 0.056) * v + 0.0032;
        CHECK(std::abs(p) < 1e-12);
    }
}

TEST_CASE("non-Hermitian input is rejected") {
    CMat4 m = diag4(1, 0, 0, 0);
    m(0, 1) = 0.5;  // no mirrored conjugate
    CHECK_THROWS_AS((void)hermitian_eigensystem(m), NotHermitian);
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const CMat4 m = random_hermitian(rng);
        const auto es = hermitian_eigensystem(m);

        CMat4 rebuilt;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Complex acc = 0.0;
                for (std::size_t k = 0; k < 4; ++k)
                    acc += es.vectors(i, k) * es.values[k] * std::conj(es.vectors(j, k));
                rebuilt(i, j) = acc;
            }
        CHECK(max_abs_diff(rebuilt, m) < 1e-9);

        // Trace is invariant under conjugation by the eigenvector matrix.
        const CMat4 rotated = adjoint(es.vectors) * m * es.vectors;
        CHECK(std::abs(trace(rotated) - trace(m)) < 1e-10);

        // Eigenvalue equation for each column.
        for (std::size_t k = 0; k < 4; ++k) {
            for (std::size_t i = 0; i < 4; ++i) {
                Complex mv = 0.0;
                for (std::size_t j = 0; j < 4; ++j) mv += m(i, j) * es.vectors(j, k);
                CHECK(std::abs(mv - es.values[k] * es.vectors(i, k)) < 1e-10);
            }
        }
    }
}

TEST_CASE("2x2 Hermitian eigenvalues") {
    CMat2 m = diag2(0.75, 0.25);
    m(0, 1) = Complex(0.0, 0.25);
    m(1, 0) = Complex(0.0, -0.25);
    const auto ev = hermitian_eigenvalues2(m);
    // Closed form: 1/2 +- sqrt(0.0625 + 0.0625)
    CHECK(ev[0] == doctest::Approx(0.5 + std::sqrt(0.125)).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(0.5 - std::sqrt(0.125)).epsilon(1e-14));
}

TEST_CASE("matrix square root of a PSD diagonal") {
    const CMat4 r = matrix_sqrt_psd(diag4(4.0, 1.0, 0.0, 0.25));
    CHECK(max_abs_diff(r, diag4(2.0, 1.0, 0.0, 0.5)) < 1e-12);
}

TEST_CASE("matrix square root of the identity") {
    CHECK(max_abs_diff(matrix_sqrt_psd(CMat4::identity()), CMat4::identity()) < 1e-13);
}

TEST_CASE("square root round-trips the alpha = 0.2 Werner state") {
    const CMat4 w = werner(0.2).mat();
    const CMat4 r = matrix_sqrt_psd(w);
    CHECK(max_abs_diff(r * r, w) < 1e-9);
    CHECK(hermiticity_defect(r) == 0.0);
}

TEST_CASE("square root rejects indefinite matrices") {
    CHECK_THROWS_AS((void)matrix_sqrt_psd(diag4(1.0, -0.5, 0.25, 0.25)), InvalidState);
}

TEST_CASE("square root tolerates round-off negatives") {
    const CMat4 r = matrix_sqrt_psd(diag4(1.0, -5e-11, 0.5, 0.25));
    CHECK(r(1, 1).real() == 0.0);
}

}  // TEST_SUITE
