#include "sqrac/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sqrac {

namespace {

const double kSqrt2 = std::sqrt(2.0);

double clamp(double v, double lo, double hi, bool* flag)
{
    if (v < lo || v > hi) {
        if (flag != nullptr) {
            *flag = true;
        }
        return std::min(hi, std::max(lo, v));
    }
    return v;
}

double shrink_sum(double eta0, double eta1)
{
    return std::sqrt(std::max(0.0, 1.0 - eta0 * eta0)) +
           std::sqrt(std::max(0.0, 1.0 - eta1 * eta1));
}

} // namespace

SharpnessBounds sharpness_bounds(double p_ab, double p_ac)
{
    SharpnessBounds out;
    out.sub_half_data = p_ab < 0.5;
    // A deviation from 1/2 in either direction certifies sharpness; with
    // success below chance the bound applies to the bit-flipped decoder.
    out.eta_low = clamp(kSqrt2 * std::abs(2.0 * p_ab - 1.0), 0.0, 1.0, &out.clamped);

    const double product = (2.0 + kSqrt2 - 4.0 * p_ac) * (2.0 * p_ac - 1.0);
    if (product < 0.0) {
        out.clamped = true;
    }
    out.eta_up = clamp(2.0 * std::sqrt(std::max(0.0, product)), 0.0, 1.0, &out.clamped);
    return out;
}

double bob_biasness_upper(double p_ab, double eta0, double eta1)
{
    const double denom = eta0 + eta1;
    if (denom <= 0.0) {
        throw std::domain_error("biasness bound undefined for zero total sharpness");
    }
    const double r = (8.0 * p_ab - 4.0) / denom;
    const double radicand = std::max(0.0, 2.0 - r * r);
    return clamp(r * std::sqrt(radicand), 0.0, 1.0, nullptr);
}

CharlieBiasness charlie_biasness_upper(double p_ac, double eta0, double eta1, double s_up)
{
    CharlieBiasness out;
    const double alpha = 0.5 * std::acos(clamp(s_up, 0.0, 1.0, nullptr));
    const double s = shrink_sum(eta0, eta1);
    const double ca2 = std::cos(alpha) * std::cos(alpha);
    const double sa2 = std::sin(alpha) * std::sin(alpha);
    // 8 p_ac - 4 = A cos(beta) + B sin(beta)
    const double a = 2.0 * ca2 + s * sa2;
    const double b = 2.0 * sa2 + s * ca2;
    const double target = 8.0 * p_ac - 4.0;

    const double amp = std::hypot(a, b);
    const double delta = std::atan2(b, a); // location of the maximum
    const double ratio = target / amp;

    double beta;
    if (ratio > 1.0) {
        // Observed value above the achievable maximum; the closest
        // achievable point is the maximum itself.
        beta = std::clamp(delta, 0.0, kQuarterPi);
        out.clamped = true;
    } else {
        const double off = std::acos(std::max(-1.0, ratio));
        const double lo_root = delta - off;
        const double hi_root = delta + off;
        if (lo_root >= -1e-12 && lo_root <= kQuarterPi + 1e-12) {
            beta = std::clamp(lo_root, 0.0, kQuarterPi);
        } else if (hi_root >= -1e-12 && hi_root <= kQuarterPi + 1e-12) {
            beta = std::clamp(hi_root, 0.0, kQuarterPi);
        } else {
            beta = std::abs(lo_root) < std::abs(hi_root - kQuarterPi) ? 0.0 : kQuarterPi;
            out.clamped = true;
        }
        // Polish the root on its monotone branch.
        if (!out.clamped) {
            double lo = beta <= delta ? 0.0 : delta;
            double hi = beta <= delta ? std::min(delta, kQuarterPi) : kQuarterPi;
            auto value = [&](double x) { return a * std::cos(x) + b * std::sin(x); };
            const bool increasing = beta <= delta;
            for (int it = 0; it < 100 && hi - lo > 1e-12; ++it) {
                const double mid = 0.5 * (lo + hi);
                const bool below = value(mid) < target;
                if (below == increasing) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            const double polished = 0.5 * (lo + hi);
            if (std::abs(value(polished) - target) <= std::abs(value(beta) - target)) {
                beta = polished;
            }
        }
    }
    out.t_up = clamp(std::cos(2.0 * beta), 0.0, 1.0, nullptr);
    return out;
}

IncompatibilityBounds incompatibility_bounds(double p_ab, double p_ac,
                                             const ProtocolParams& params)
{
    IncompatibilityBounds out;
    out.m = max_conditional_distance(params);
    if (out.m <= 0.0) {
        throw std::domain_error("incompatibility bound undefined for vanishing distance");
    }
    out.d_s_low = clamp(8.0 * p_ab - 6.0, 0.0, 2.0, nullptr);
    out.d_t_low = clamp((16.0 * p_ac - 8.0) / out.m - 2.0, 0.0, 2.0, nullptr);
    return out;
}

BoundsReport bounds_report(double p_ab, double p_ac, double eta0, double eta1,
                           std::optional<double> alpha)
{
    BoundsReport out;
    const SharpnessBounds sb = sharpness_bounds(p_ab, p_ac);
    out.eta_low = sb.eta_low;
    out.eta_up = sb.eta_up;
    out.sub_half_data = sb.sub_half_data;
    out.clamped = sb.clamped;

    out.s_up = bob_biasness_upper(p_ab, eta0, eta1);
    const CharlieBiasness cb = charlie_biasness_upper(p_ac, eta0, eta1, out.s_up);
    out.t_up = cb.t_up;
    out.clamped = out.clamped || cb.clamped;

    ProtocolParams params{eta0, eta1, alpha.value_or(0.5 * std::acos(out.s_up)),
                          kQuarterPi};
    const IncompatibilityBounds ib = incompatibility_bounds(p_ab, p_ac, params);
    out.d_s_low = ib.d_s_low;
    out.d_t_low = ib.d_t_low;
    out.m = ib.m;
    return out;
}

} // namespace sqrac
