#pragma once

#include "sqrac/protocol.hpp"

#include <optional>

namespace sqrac {

/// Sharpness interval certified from the two observed success
/// probabilities. Values are clamped to [0, 1]; `clamped` marks that the
/// raw algebra left the physical range, `sub_half_data` that the Bob
/// probability was below 1/2 (the bound then certifies the relabeled
/// decoder).
struct SharpnessBounds {
    double eta_low = 0.0;
    double eta_up = 1.0;
    bool sub_half_data = false;
    bool clamped = false;
};

SharpnessBounds sharpness_bounds(double p_ab, double p_ac);

/// Upper bound on the overlap |s0.s1| of Bob's measurement directions.
/// Throws std::domain_error when eta0 + eta1 == 0. The square-root
/// argument is clamped at zero and the result to [0, 1].
double bob_biasness_upper(double p_ab, double eta0, double eta1);

struct CharlieBiasness {
    double t_up = 1.0;
    bool clamped = false; // no root in [0, pi/4]; nearest endpoint used
};

/// Upper bound on |t0.t1|: sets alpha = arccos(s_up)/2, solves the
/// success-probability expression for beta at the observed p_ac (smallest
/// root in [0, pi/4]) and returns cos(2 beta).
CharlieBiasness charlie_biasness_upper(double p_ac, double eta0, double eta1, double s_up);

struct IncompatibilityBounds {
    double d_s_low = 0.0;
    double d_t_low = 0.0;
    double m = 0.0; // max distance between Charlie's conditional states
};

/// Lower bounds on the incompatibility degree of each decoder's pair of
/// measurements: D(s) >= 8 P_AB - 6 and D(t) >= (16 P_AC - 8)/m - 2, both
/// clamped to [0, 2]. Throws std::domain_error when m vanishes.
IncompatibilityBounds incompatibility_bounds(double p_ab, double p_ac,
                                             const ProtocolParams& params);

struct BoundsReport {
    double eta_low = 0.0;
    double eta_up = 1.0;
    double s_up = 1.0;
    double t_up = 1.0;
    double d_s_low = 0.0;
    double d_t_low = 0.0;
    double m = 0.0;
    bool clamped = false;
    bool sub_half_data = false;
};

/// Full certification chain from observed probabilities. When `alpha` is
/// not supplied, the angle used for the conditional-state distance is
/// arccos(s_up)/2, i.e. the chain is driven entirely by the data.
BoundsReport bounds_report(double p_ab, double p_ac, double eta0, double eta1,
                           std::optional<double> alpha = std::nullopt);

} // namespace sqrac
