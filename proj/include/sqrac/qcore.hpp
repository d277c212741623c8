#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace sqrac {

using Complex = std::complex<double>;

/// Dense complex matrix of fixed dimension 2 or 4, row-major storage.
/// Value type; all operations return new matrices.
template <int N>
class Matrix {
    static_assert(N == 2 || N == 4, "only 2x2 and 4x4 matrices are supported");

public:
    Matrix() : e_{} {}

    static constexpr int dimension() { return N; }

    static Matrix identity()
    {
        Matrix m;
        for (int i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    Complex& operator()(int r, int c) { return e_[r * N + c]; }
    const Complex& operator()(int r, int c) const { return e_[r * N + c]; }

    Matrix operator+(const Matrix& o) const
    {
        Matrix m;
        for (int i = 0; i < N * N; ++i) {
            m.e_[i] = e_[i] + o.e_[i];
        }
        return m;
    }

    Matrix operator-(const Matrix& o) const
    {
        Matrix m;
        for (int i = 0; i < N * N; ++i) {
            m.e_[i] = e_[i] - o.e_[i];
        }
        return m;
    }

    Matrix operator*(const Matrix& o) const
    {
        Matrix m;
        for (int r = 0; r < N; ++r) {
            for (int k = 0; k < N; ++k) {
                const Complex a = (*this)(r, k);
                if (a == Complex{}) {
                    continue;
                }
                for (int c = 0; c < N; ++c) {
                    m(r, c) += a * o(k, c);
                }
            }
        }
        return m;
    }

    friend Matrix operator*(const Complex& s, const Matrix& m)
    {
        Matrix out;
        for (int i = 0; i < N * N; ++i) {
            out.e_[i] = s * m.e_[i];
        }
        return out;
    }

    friend Matrix operator*(double s, const Matrix& m) { return Complex(s, 0.0) * m; }

    Matrix adjoint() const
    {
        Matrix m;
        for (int r = 0; r < N; ++r) {
            for (int c = 0; c < N; ++c) {
                m(r, c) = std::conj((*this)(c, r));
            }
        }
        return m;
    }

    Complex trace() const
    {
        Complex t;
        for (int i = 0; i < N; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

private:
    std::array<Complex, N * N> e_;
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <int N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b)
{
    double d = 0.0;
    for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N; ++c) {
            d = std::max(d, std::abs(a(r, c) - b(r, c)));
        }
    }
    return d;
}

template <int N>
bool is_hermitian(const Matrix<N>& m, double tol)
{
    return max_abs_diff(m, m.adjoint()) <= tol;
}

template <int N>
double trace_real(const Matrix<N>& m)
{
    return m.trace().real();
}

/// Real 3-vector on (or inside) the Bloch sphere.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }

    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVector scaled(double s) const { return {s * x, s * y, s * z}; }
};

Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();

/// (I + x sigma_x + y sigma_y + z sigma_z) / 2. Hermitian with unit trace;
/// positive semidefinite whenever |v| <= 1.
Mat2 pauli_expand(const BlochVector& v);

/// Pauli components (Tr[m sigma_i]) of a 2x2 operator. Exact inverse of
/// pauli_expand for Hermitian unit-trace input.
BlochVector bloch_of(const Mat2& m);

/// Kronecker product, first factor on the slow index.
Mat4 tensor(const Mat2& a, const Mat2& b);

Mat2 partial_trace_first(const Mat4& m);
Mat2 partial_trace_second(const Mat4& m);

template <int N>
struct EigenSystem {
    std::array<double, N> values; // ascending
    Matrix<N> vectors;            // columns are the eigenvectors
};

/// Cyclic Jacobi diagonalization for Hermitian input;
/// the result satisfies m ~ V diag(values) V^dagger.
template <int N>
EigenSystem<N> hermitian_eigensystem(const Matrix<N>& m);

template <int N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m)
{
    return hermitian_eigensystem(m).values;
}

/// Validated 4x4 density matrix of a two-qubit system.
class TwoQubitState {
public:
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kHermTol = 1e-12;
    static constexpr double kPsdTol = 1e-10;

    /// Throws std::invalid_argument unless m has unit trace, is Hermitian
    /// and has no eigenvalue below -kPsdTol.
    static TwoQubitState from_matrix(const Mat4& m);

    const Mat4& matrix() const { return m_; }

    double purity() const { return trace_real(m_ * m_); }

private:
    explicit TwoQubitState(const Mat4& m) : m_(m) {}
    Mat4 m_;
};

/// Projector onto the Bell state (|00> + |11>)/sqrt(2).
TwoQubitState max_entangled_state();

} // namespace sqrac
