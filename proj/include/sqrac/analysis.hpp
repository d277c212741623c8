#pragma once

#include "sqrac/protocol.hpp"

namespace sqrac {

struct ChshValues {
    double i_ab = 0.0;
    double i_ac = 0.0;
};

/// CHSH combinations for the Alice-Bob and Alice-Charlie pairs, computed
/// from brute-force correlators (the ground truth).
ChshValues chsh_values(const ProtocolParams& p);

/// Closed forms: I_AB = (eta0 + eta1)(cos a + sin a),
/// I_AC = 2M + N (sqrt(1-eta0^2) + sqrt(1-eta1^2)).
ChshValues chsh_values_closed(const ProtocolParams& p);

/// Certified bits per round from a CHSH value:
/// max(0, 1 - log2(1 + sqrt(max(0, 2 - I^2/4)))). Zero at I <= 2, one bit
/// at the Tsirelson value 2 sqrt(2); values above it clamp to one bit.
double min_entropy(double chsh_i);

struct RandomnessReport {
    double i_ab = 0.0;
    double i_ac = 0.0;
    double hmin_ab = 0.0;
    double hmin_ac = 0.0;
    double hmin_total = 0.0;
};

RandomnessReport randomness_report(const ProtocolParams& p);

} // namespace sqrac
