#include "sqrac/qcore.hpp"

#include <stdexcept>

namespace sqrac {

Mat2 sigma_x()
{
    Mat2 m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Mat2 sigma_y()
{
    Mat2 m;
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
}

Mat2 sigma_z()
{
    Mat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

Mat2 pauli_expand(const BlochVector& v)
{
    Mat2 m;
    m(0, 0) = 0.5 * (1.0 + v.z);
    m(1, 1) = 0.5 * (1.0 - v.z);
    m(0, 1) = 0.5 * Complex(v.x, -v.y);
    m(1, 0) = 0.5 * Complex(v.x, v.y);
    return m;
}

BlochVector bloch_of(const Mat2& m)
{
    BlochVector v;
    v.x = (m(0, 1) + m(1, 0)).real();
    v.y = (Complex(0.0, 1.0) * (m(0, 1) - m(1, 0))).real();
    v.z = (m(0, 0) - m(1, 1)).real();
    return v;
}

Mat4 tensor(const Mat2& a, const Mat2& b)
{
    Mat4 m;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return m;
}

Mat2 partial_trace_first(const Mat4& m)
{
    Mat2 out;
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            out(k, l) = m(k, l) + m(2 + k, 2 + l);
        }
    }
    return out;
}

Mat2 partial_trace_second(const Mat4& m)
{
    Mat2 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
        }
    }
    return out;
}

namespace {

// One complex Givens rotation zeroing a(p,q); accumulates the rotation in v.
template <int N>
void jacobi_rotate(Matrix<N>& a, Matrix<N>& v, int p, int q)
{
    const Complex g = a(p, q);
    const double ag = std::abs(g);
    if (ag == 0.0) {
        return;
    }
    const Complex phase = g / ag; // e^{i phi}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (app - aqq) / (2.0 * ag);
    double t;
    if (tau >= 0.0) {
        t = 1.0 / (tau + std::sqrt(tau * tau + 1.0));
    } else {
        t = -1.0 / (-tau + std::sqrt(tau * tau + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // u_pp = c, u_pq = -s*phase, u_qp = s*conj(phase), u_qq = c
    for (int r = 0; r < N; ++r) {
        const Complex arp = a(r, p);
        const Complex arq = a(r, q);
        a(r, p) = c * arp + s * std::conj(phase) * arq;
        a(r, q) = -s * phase * arp + c * arq;
    }
    for (int col = 0; col < N; ++col) {
        const Complex apc = a(p, col);
        const Complex aqc = a(q, col);
        a(p, col) = c * apc + s * phase * aqc;
        a(q, col) = -s * std::conj(phase) * apc + c * aqc;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    for (int r = 0; r < N; ++r) {
        const Complex vrp = v(r, p);
        const Complex vrq = v(r, q);
        v(r, p) = c * vrp + s * std::conj(phase) * vrq;
        v(r, q) = -s * phase * vrp + c * vrq;
    }
}

template <int N>
double offdiag_norm2(const Matrix<N>& a)
{
    double s = 0.0;
    for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N; ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return s;
}

} // namespace

template <int N>
EigenSystem<N> hermitian_eigensystem(const Matrix<N>& m)
{
    Matrix<N> a = m;
    Matrix<N> v = Matrix<N>::identity();

    for (int sweep = 0; sweep < 64 && offdiag_norm2(a) > 1e-30; ++sweep) {
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }

    EigenSystem<N> out;
    std::array<int, N> order;
    for (int i = 0; i < N; ++i) {
        order[i] = i;
    }
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            if (a(order[j], order[j]).real() < a(order[i], order[i]).real()) {
                std::swap(order[i], order[j]);
            }
        }
    }
    for (int i = 0; i < N; ++i) {
        out.values[i] = a(order[i], order[i]).real();
        for (int r = 0; r < N; ++r) {
            out.vectors(r, i) = v(r, order[i]);
        }
    }
    return out;
}

template EigenSystem<2> hermitian_eigensystem<2>(const Matrix<2>&);
template EigenSystem<4> hermitian_eigensystem<4>(const Matrix<4>&);

TwoQubitState TwoQubitState::from_matrix(const Mat4& m)
{
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > kTraceTol) {
        throw std::invalid_argument("two-qubit state: trace differs from 1");
    }
    if (!is_hermitian(m, kHermTol)) {
        throw std::invalid_argument("two-qubit state: matrix is not Hermitian");
    }
    const auto eigs = hermitian_eigenvalues(m);
    if (eigs[0] < -kPsdTol) {
        throw std::invalid_argument("two-qubit state: negative eigenvalue");
    }
    return TwoQubitState(m);
}

TwoQubitState max_entangled_state()
{
    Mat4 m;
    m(0, 0) = 0.5;
    m(0, 3) = 0.5;
    m(3, 0) = 0.5;
    m(3, 3) = 0.5;
    return TwoQubitState::from_matrix(m);
}

} // namespace sqrac
