#include "sqrac/qcore.hpp"

#include <doctest.h>

#include <random>

using namespace sqrac;

namespace {

double u01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BlochVector random_ball_vector(std::mt19937_64& rng)
{
    for (;;) {
        BlochVector v{2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0};
        if (v.norm() <= 1.0) {
            return v;
        }
    }
}

template <int N>
Matrix<N> random_matrix(std::mt19937_64& rng)
{
    Matrix<N> m;
    for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N; ++c) {
            m(r, c) = Complex(2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0);
        }
    }
    return m;
}

template <int N>
Matrix<N> random_hermitian(std::mt19937_64& rng)
{
    const Matrix<N> m = random_matrix<N>(rng);
    return 0.5 * (m + m.adjoint());
}

} // namespace

TEST_SUITE_BEGIN("qcore");

TEST_CASE("pauli_expand reproduces the basic projectors")
{
    const Mat2 half_id = pauli_expand({0.0, 0.0, 0.0});
    CHECK(half_id(0, 0) == Complex(0.5, 0.0));
    CHECK(half_id(1, 1) == Complex(0.5, 0.0));
    CHECK(half_id(0, 1) == Complex(0.0, 0.0));

    const Mat2 up = pauli_expand({0.0, 0.0, 1.0});
    CHECK(up(0, 0) == Complex(1.0, 0.0));
    CHECK(up(1, 1) == Complex(0.0, 0.0));
    CHECK(up(0, 1) == Complex(0.0, 0.0));

    // +X projector: every entry 1/2
    const Mat2 plus = pauli_expand({1.0, 0.0, 0.0});
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            CHECK(plus(r, c) == Complex(0.5, 0.0));
        }
    }
}

TEST_CASE("pauli_expand is PSD inside the Bloch ball")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        const Mat2 m = pauli_expand(random_ball_vector(rng));
        CHECK(trace_real(m) == doctest::Approx(1.0).epsilon(1e-14));
        const auto eigs = hermitian_eigenvalues(m);
        CHECK(eigs[0] >= -1e-12);
    }
}

TEST_CASE("bloch_of inverts pauli_expand")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const BlochVector v = random_ball_vector(rng);
        const BlochVector w = bloch_of(pauli_expand(v));
        CHECK(std::abs(v.x - w.x) <= 1e-15);
        CHECK(std::abs(v.y - w.y) <= 1e-15);
        CHECK(std::abs(v.z - w.z) <= 1e-15);
    }
}

TEST_CASE("tensor products")
{
    const Mat2 id = Mat2::identity();
    CHECK(max_abs_diff(tensor(id, id), Mat4::identity()) == 0.0);

    const Mat2 p0 = pauli_expand({0.0, 0.0, 1.0});
    const Mat4 p00 = tensor(p0, p0);
    CHECK(p00(0, 0) == Complex(1.0, 0.0));
    for (int i = 1; i < 4; ++i) {
        CHECK(p00(i, i) == Complex(0.0, 0.0));
    }

    // sigma_x (x) sigma_z: anti-diagonal +1, -1, +1, -1 pattern
    const Mat4 xz = tensor(sigma_x(), sigma_z());
    CHECK(xz(0, 2) == Complex(1.0, 0.0));
    CHECK(xz(1, 3) == Complex(-1.0, 0.0));
    CHECK(xz(2, 0) == Complex(1.0, 0.0));
    CHECK(xz(3, 1) == Complex(-1.0, 0.0));
    CHECK(xz(0, 0) == Complex(0.0, 0.0));
    CHECK(xz(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("tensor is bilinear and multiplicative on traces")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const Mat2 a = random_matrix<2>(rng);
        const Mat2 b = random_matrix<2>(rng);
        const Mat2 c = random_matrix<2>(rng);
        const Complex s(2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0);

        const Mat4 lhs = tensor(s * a + b, c);
        const Mat4 rhs = s * tensor(a, c) + tensor(b, c);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-13);

        CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) <= 1e-13);
    }
}

TEST_CASE("adjoint reverses products")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const Mat4 a = random_matrix<4>(rng);
        const Mat4 b = random_matrix<4>(rng);
        CHECK(max_abs_diff((a * b).adjoint(), b.adjoint() * a.adjoint()) <= 1e-14);
    }
}

TEST_CASE("hermitian eigensystem reconstructs the input")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const Mat4 h = random_hermitian<4>(rng);
        const EigenSystem<4> es = hermitian_eigensystem(h);
        Mat4 diag;
        for (int k = 0; k < 4; ++k) {
            diag(k, k) = es.values[k];
        }
        const Mat4 rebuilt = es.vectors * diag * es.vectors.adjoint();
        CHECK(max_abs_diff(rebuilt, h) <= 1e-10);
        for (int k = 0; k + 1 < 4; ++k) {
            CHECK(es.values[k] <= es.values[k + 1]);
        }
    }

    const auto z = hermitian_eigenvalues(sigma_z());
    CHECK(z[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(z[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("maximally entangled state")
{
    const TwoQubitState bell = max_entangled_state();
    const Mat4& m = bell.matrix();

    CHECK(m(0, 0) == Complex(0.5, 0.0));
    CHECK(m(0, 3) == Complex(0.5, 0.0));
    CHECK(m(3, 0) == Complex(0.5, 0.0));
    CHECK(m(3, 3) == Complex(0.5, 0.0));
    CHECK(m(1, 1) == Complex(0.0, 0.0));
    CHECK(m(2, 2) == Complex(0.0, 0.0));

    CHECK(bell.purity() == doctest::Approx(1.0).epsilon(1e-12));

    const Mat2 half = 0.5 * Mat2::identity();
    CHECK(max_abs_diff(partial_trace_first(m), half) <= 1e-15);
    CHECK(max_abs_diff(partial_trace_second(m), half) <= 1e-15);

    CHECK(trace_real(m * tensor(sigma_x(), sigma_x())) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(trace_real(m * tensor(sigma_y(), sigma_y())) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(trace_real(m * tensor(sigma_z(), sigma_z())) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("state validation rejects unphysical matrices")
{
    Mat4 bad_trace = Mat4::identity();
    CHECK_THROWS_AS(TwoQubitState::from_matrix(bad_trace), std::invalid_argument);

    Mat4 not_hermitian;
    not_hermitian(0, 0) = 1.0;
    not_hermitian(0, 1) = 0.5;
    CHECK_THROWS_AS(TwoQubitState::from_matrix(not_hermitian), std::invalid_argument);

    Mat4 negative;
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(TwoQubitState::from_matrix(negative), std::invalid_argument);

    Mat4 ok;
    for (int i = 0; i < 4; ++i) {
        ok(i, i) = 0.25;
    }
    CHECK_NOTHROW(TwoQubitState::from_matrix(ok));
}

TEST_SUITE_END();
