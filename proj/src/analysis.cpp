#include "sqrac/analysis.hpp"

#include <cmath>

namespace sqrac {

namespace {

double sign_bit(int v)
{
    return v == 0 ? 1.0 : -1.0;
}

// E(x,y) = sum_{a,b} (-1)^{a+b} P(a,b | x,y)
double correlator_ab(const Mat4& rho, int x, int y, const ProtocolParams& p)
{
    const double eta = (y == 0) ? p.eta0 : p.eta1;
    double e = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const Mat4 joint = tensor(alice_povm(x, a), bob_povm(y, b, p.alpha, eta));
            e += sign_bit(a) * sign_bit(b) * trace_real(joint * rho);
        }
    }
    return e;
}

double correlator_ac(const Mat4& rho_c, int x, int z, const ProtocolParams& p)
{
    double e = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
            const Mat4 joint = tensor(alice_povm(x, a), charlie_povm(z, c, p.beta));
            e += sign_bit(a) * sign_bit(c) * trace_real(joint * rho_c);
        }
    }
    return e;
}

} // namespace

ChshValues chsh_values(const ProtocolParams& p)
{
    p.validate();
    const TwoQubitState bell = max_entangled_state();
    const Mat4 rho_c = rho_ac(bell, p).matrix();

    ChshValues out;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const double sign = (x == 1 && y == 1) ? -1.0 : 1.0;
            out.i_ab += sign * correlator_ab(bell.matrix(), x, y, p);
            out.i_ac += sign * correlator_ac(rho_c, x, y, p);
        }
    }
    return out;
}

ChshValues chsh_values_closed(const ProtocolParams& p)
{
    p.validate();
    const double ca = std::cos(p.alpha);
    const double sa = std::sin(p.alpha);
    const double m = ca * ca * std::cos(p.beta) + sa * sa * std::sin(p.beta);
    const double n = ca * ca * std::sin(p.beta) + sa * sa * std::cos(p.beta);
    const double shrink = std::sqrt(std::max(0.0, 1.0 - p.eta0 * p.eta0)) +
                          std::sqrt(std::max(0.0, 1.0 - p.eta1 * p.eta1));
    ChshValues out;
    out.i_ab = (p.eta0 + p.eta1) * (ca + sa);
    out.i_ac = 2.0 * m + n * shrink;
    return out;
}

double min_entropy(double chsh_i)
{
    const double radicand = std::max(0.0, 2.0 - chsh_i * chsh_i / 4.0);
    return std::max(0.0, 1.0 - std::log2(1.0 + std::sqrt(radicand)));
}

RandomnessReport randomness_report(const ProtocolParams& p)
{
    const ChshValues i = chsh_values(p);
    RandomnessReport out;
    out.i_ab = i.i_ab;
    out.i_ac = i.i_ac;
    out.hmin_ab = min_entropy(i.i_ab);
    out.hmin_ac = min_entropy(i.i_ac);
    out.hmin_total = out.hmin_ab + out.hmin_ac;
    return out;
}

} // namespace sqrac
