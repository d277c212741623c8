#include "sqrac/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace sqrac {

namespace {

constexpr double kRangeSlack = 1e-12;

void check_bit(int v, const char* name)
{
    if (v != 0 && v != 1) {
        throw std::domain_error(std::string(name) + " must be 0 or 1");
    }
}

double clamp01(double v)
{
    return std::min(1.0, std::max(0.0, v));
}

} // namespace

void ProtocolParams::validate() const
{
    if (eta0 < -kRangeSlack || eta0 > 1.0 + kRangeSlack ||
        eta1 < -kRangeSlack || eta1 > 1.0 + kRangeSlack) {
        throw std::domain_error("sharpness parameters must lie in [0, 1]");
    }
    if (alpha < -kRangeSlack || alpha > kQuarterPi + kRangeSlack ||
        beta < -kRangeSlack || beta > kQuarterPi + kRangeSlack) {
        throw std::domain_error("direction angles must lie in [0, pi/4]");
    }
}

QubitObservable::QubitObservable(const BlochVector& dir, double sharp)
    : direction(dir), sharpness(sharp)
{
    if (std::abs(dir.norm() - 1.0) > 1e-12) {
        throw std::domain_error("observable direction must be unit length");
    }
    if (sharp < -kRangeSlack || sharp > 1.0 + kRangeSlack) {
        throw std::domain_error("sharpness must lie in [0, 1]");
    }
}

Mat2 QubitObservable::povm_element(int outcome) const
{
    check_bit(outcome, "outcome");
    const Mat2 m0 = pauli_expand(direction.scaled(sharpness));
    if (outcome == 0) {
        return m0;
    }
    return Mat2::identity() - m0; // completeness exact by construction
}

KrausPair QubitObservable::kraus_pair() const
{
    // eta = cos(4 theta); the Kraus weights are cos(2 theta), sin(2 theta).
    const double c = std::sqrt(clamp01(0.5 * (1.0 + sharpness)));
    const double s = std::sqrt(clamp01(0.5 * (1.0 - sharpness)));
    const Mat2 id = Mat2::identity();
    const Mat2 ns = pauli_expand(direction) - 0.5 * id; // dir.sigma / 2
    KrausPair kp;
    kp.k0 = 0.5 * (c + s) * id + (c - s) * ns;
    kp.k1 = 0.5 * (c + s) * id + (s - c) * ns;
    return kp;
}

BlochVector alice_direction(int x)
{
    check_bit(x, "x");
    return x == 0 ? BlochVector{1.0, 0.0, 0.0} : BlochVector{0.0, 0.0, 1.0};
}

BlochVector bob_direction(int y, double alpha)
{
    check_bit(y, "y");
    const double sign = (y == 0) ? 1.0 : -1.0;
    return {std::cos(alpha), 0.0, sign * std::sin(alpha)};
}

BlochVector charlie_direction(int z, double beta)
{
    check_bit(z, "z");
    const double sign = (z == 0) ? 1.0 : -1.0;
    return {std::cos(beta), 0.0, sign * std::sin(beta)};
}

Mat2 alice_povm(int x, int a)
{
    check_bit(a, "a");
    return QubitObservable(alice_direction(x), 1.0).povm_element(a);
}

QubitObservable bob_observable(int y, double alpha, double eta)
{
    return QubitObservable(bob_direction(y, alpha), eta);
}

Mat2 bob_povm(int y, int b, double alpha, double eta)
{
    return bob_observable(y, alpha, eta).povm_element(b);
}

KrausPair bob_kraus_pair(int y, double alpha, double eta)
{
    return bob_observable(y, alpha, eta).kraus_pair();
}

double sharpness_from_waveplate(double theta_lambda)
{
    return std::cos(4.0 * theta_lambda);
}

Mat2 bob_kraus(int y, int b, double alpha, double theta_lambda)
{
    check_bit(b, "b");
    if (theta_lambda < -kRangeSlack || theta_lambda > kPi / 8.0 + kRangeSlack) {
        throw std::domain_error("wave-plate angle must lie in [0, pi/8]");
    }
    const double c = std::cos(2.0 * theta_lambda);
    const double s = std::sin(2.0 * theta_lambda);
    const Mat2 id = Mat2::identity();
    const Mat2 ns = pauli_expand(bob_direction(y, alpha)) - 0.5 * id;
    if (b == 0) {
        return 0.5 * (c + s) * id + (c - s) * ns;
    }
    return 0.5 * (c + s) * id + (s - c) * ns;
}

TwoQubitState rho_ac(const TwoQubitState& rho_ab, const ProtocolParams& p)
{
    p.validate();
    Mat4 acc;
    for (int y = 0; y < 2; ++y) {
        const double eta = (y == 0) ? p.eta0 : p.eta1;
        const KrausPair kp = bob_kraus_pair(y, p.alpha, eta);
        for (const Mat2& k : {kp.k0, kp.k1}) {
            const Mat4 big = tensor(Mat2::identity(), k);
            acc = acc + big * rho_ab.matrix() * big.adjoint();
        }
    }
    return TwoQubitState::from_matrix(0.5 * acc);
}

namespace {

int decoded_bit(int x0, int x1, int setting)
{
    return setting == 0 ? x0 : x1;
}

double eta_of(const ProtocolParams& p, int y)
{
    return y == 0 ? p.eta0 : p.eta1;
}

} // namespace

double p_ab_bruteforce(const ProtocolParams& p)
{
    p.validate();
    const Mat4 rho = max_entangled_state().matrix();
    double total = 0.0;
    for (int x0 = 0; x0 < 2; ++x0) {
        for (int x1 = 0; x1 < 2; ++x1) {
            const int x = x0 ^ x1;
            for (int y = 0; y < 2; ++y) {
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        if (decoded_bit(x0, x1, y) != ((x0 ^ a) ^ b)) {
                            continue;
                        }
                        const Mat4 joint =
                            tensor(alice_povm(x, a), bob_povm(y, b, p.alpha, eta_of(p, y)));
                        total += trace_real(joint * rho);
                    }
                }
            }
        }
    }
    return total / 8.0;
}

double p_ab_closed(const ProtocolParams& p)
{
    p.validate();
    return (4.0 + (p.eta0 + p.eta1) * (std::cos(p.alpha) + std::sin(p.alpha))) / 8.0;
}

double p_ac_bruteforce(const ProtocolParams& p)
{
    p.validate();
    const Mat4 rho = rho_ac(max_entangled_state(), p).matrix();
    double total = 0.0;
    for (int x0 = 0; x0 < 2; ++x0) {
        for (int x1 = 0; x1 < 2; ++x1) {
            const int x = x0 ^ x1;
            for (int z = 0; z < 2; ++z) {
                for (int a = 0; a < 2; ++a) {
                    for (int c = 0; c < 2; ++c) {
                        if (decoded_bit(x0, x1, z) != ((x0 ^ a) ^ c)) {
                            continue;
                        }
                        const Mat4 joint = tensor(alice_povm(x, a), charlie_povm(z, c, p.beta));
                        total += trace_real(joint * rho);
                    }
                }
            }
        }
    }
    return total / 8.0;
}

double p_ac_closed(const ProtocolParams& p)
{
    p.validate();
    const double ca = std::cos(p.alpha);
    const double sa = std::sin(p.alpha);
    const double m = ca * ca * std::cos(p.beta) + sa * sa * std::sin(p.beta);
    const double n = ca * ca * std::sin(p.beta) + sa * sa * std::cos(p.beta);
    const double shrink = std::sqrt(std::max(0.0, 1.0 - p.eta0 * p.eta0)) +
                          std::sqrt(std::max(0.0, 1.0 - p.eta1 * p.eta1));
    return (4.0 + 2.0 * m + n * shrink) / 8.0;
}

Mat2 charlie_povm(int z, int c, double beta)
{
    check_bit(c, "c");
    return QubitObservable(charlie_direction(z, beta), 1.0).povm_element(c);
}

double p_abc_bruteforce(const ProtocolParams& p)
{
    p.validate();
    const Mat4 rho = max_entangled_state().matrix();
    double total = 0.0;
    for (int x0 = 0; x0 < 2; ++x0) {
        for (int x1 = 0; x1 < 2; ++x1) {
            const int x = x0 ^ x1;
            for (int y = 0; y < 2; ++y) {
                const int z = 1 - y;
                const KrausPair kp = bob_kraus_pair(y, p.alpha, eta_of(p, y));
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        const int c = (decoded_bit(x0, x1, z) ^ x0) ^ a;
                        if (decoded_bit(x0, x1, y) != ((x0 ^ a) ^ b)) {
                            continue;
                        }
                        const Mat2& k = (b == 0) ? kp.k0 : kp.k1;
                        const Mat2 evolved = k.adjoint() * charlie_povm(z, c, p.beta) * k;
                        total += trace_real(tensor(alice_povm(x, a), evolved) * rho);
                    }
                }
            }
        }
    }
    return total / 8.0;
}

double p_abc_closed(const ProtocolParams& p)
{
    p.validate();
    const double ca = std::cos(p.alpha);
    const double sa = std::sin(p.alpha);
    const double capb = std::cos(p.alpha + p.beta);
    const double sapb = std::sin(p.alpha + p.beta);
    const double shrink = std::sqrt(std::max(0.0, 1.0 - p.eta0 * p.eta0)) +
                          std::sqrt(std::max(0.0, 1.0 - p.eta1 * p.eta1));
    return 0.25 + capb * (ca - sa) / 8.0 + (p.eta0 + p.eta1) * (ca + sa) / 16.0 +
           shrink * (ca + sa) * sapb / 16.0;
}

BlochVector charlie_conditional_bloch(int x, int a, const ProtocolParams& p)
{
    check_bit(a, "a");
    p.validate();
    const double sign = (a == 0) ? 1.0 : -1.0;
    const BlochVector v = alice_direction(x).scaled(sign);
    BlochVector out{0.0, 0.0, 0.0};
    for (int y = 0; y < 2; ++y) {
        const double eta = eta_of(p, y);
        const double shrink = std::sqrt(std::max(0.0, 1.0 - eta * eta));
        const BlochVector axis = bob_direction(y, p.alpha);
        const BlochVector along = axis.scaled(v.dot(axis));
        out = out + (along + (v - along).scaled(shrink)).scaled(0.5);
    }
    return out;
}

BlochVector charlie_conditional_bloch_closed(int x, int a, const ProtocolParams& p)
{
    check_bit(x, "x");
    check_bit(a, "a");
    p.validate();
    const double u0 = std::sqrt(std::max(0.0, 1.0 - p.eta0 * p.eta0));
    const double u1 = std::sqrt(std::max(0.0, 1.0 - p.eta1 * p.eta1));
    const double f = 0.25 * (u1 - u0);
    const double c2a = std::cos(2.0 * p.alpha);
    const double s2a = std::sin(2.0 * p.alpha);
    const double gp = 0.25 * (2.0 + u0 + u1 + (2.0 - u0 - u1) * c2a);
    const double gm = 0.25 * (2.0 + u0 + u1 - (2.0 - u0 - u1) * c2a);
    BlochVector v = (x == 0) ? BlochVector{gp, 0.0, f * s2a} : BlochVector{f * s2a, 0.0, gm};
    return (a == 0) ? v : v.scaled(-1.0);
}

double max_conditional_distance(const ProtocolParams& p)
{
    const BlochVector d0 =
        charlie_conditional_bloch(0, 0, p) - charlie_conditional_bloch(0, 1, p);
    const BlochVector d1 =
        charlie_conditional_bloch(1, 0, p) - charlie_conditional_bloch(1, 1, p);
    return std::max(d0.norm(), d1.norm());
}

SuccessReport success_report(const ProtocolParams& p, Branch branch)
{
    SuccessReport r;
    r.p_ab = p_ab_closed(p);
    r.p_ac = p_ac_closed(p);
    r.p_abc = p_abc_closed(p);
    r.branch = branch;
    return r;
}

} // namespace sqrac
