#pragma once

#include "sqrac/qcore.hpp"

#include <numbers>

namespace sqrac {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

enum class Branch { unbiased, optimized };

/// Tunable knobs of a protocol scenario: Bob's two sharpness parameters and
/// the direction half-angles of Bob (alpha) and Charlie (beta), radians.
struct ProtocolParams {
    double eta0 = 1.0;
    double eta1 = 1.0;
    double alpha = kQuarterPi;
    double beta = kQuarterPi;

    /// Throws std::domain_error when a field is outside its range.
    void validate() const;
};

struct KrausPair {
    Mat2 k0;
    Mat2 k1;
};

/// Dichotomic qubit measurement: Bloch direction plus sharpness.
/// The outcome-0 POVM element is (I + sharpness * dir.sigma)/2 and the
/// outcome-1 element is its exact complement.
struct QubitObservable {
    BlochVector direction;
    double sharpness = 1.0;

    QubitObservable(const BlochVector& dir, double sharp);

    Mat2 povm_element(int outcome) const;
    KrausPair kraus_pair() const;
};

struct SuccessReport {
    double p_ab = 0.0;
    double p_ac = 0.0;
    double p_abc = 0.0;
    Branch branch = Branch::unbiased;
};

BlochVector alice_direction(int x);
BlochVector bob_direction(int y, double alpha);
BlochVector charlie_direction(int z, double beta);

/// Alice's sharp encoding projector: +/-X for x=0, +/-Z for x=1.
Mat2 alice_povm(int x, int a);

QubitObservable bob_observable(int y, double alpha, double eta);
Mat2 bob_povm(int y, int b, double alpha, double eta);

/// Kraus operators of Bob's unsharp measurement for a given sharpness.
KrausPair bob_kraus_pair(int y, double alpha, double eta);

/// Wave-plate parametrization: sharpness eta = cos(4 theta_lambda).
/// theta_lambda in radians, valid range [0, pi/8]; outside it throws
/// std::domain_error.
Mat2 bob_kraus(int y, int b, double alpha, double theta_lambda);

double sharpness_from_waveplate(double theta_lambda);

/// Charlie's sharp projector along (cos beta, 0, (-1)^z sin beta).
Mat2 charlie_povm(int z, int c, double beta);

/// State shared between Alice and Charlie after Bob's measurement,
/// averaged over Bob's input and output.
TwoQubitState rho_ac(const TwoQubitState& rho_ab, const ProtocolParams& p);

double p_ab_bruteforce(const ProtocolParams& p);
double p_ab_closed(const ProtocolParams& p);
double p_ac_bruteforce(const ProtocolParams& p);
double p_ac_closed(const ProtocolParams& p);
double p_abc_bruteforce(const ProtocolParams& p);
double p_abc_closed(const ProtocolParams& p);

/// Bloch vector of Charlie's conditional state for Alice's outcome a at
/// setting x, obtained by pushing the encoding vector through Bob's
/// averaged channel (components parallel to each measurement direction are
/// preserved, transverse ones shrink by sqrt(1 - eta^2)).
BlochVector charlie_conditional_bloch(int x, int a, const ProtocolParams& p);

/// Closed form of the same vectors. With u_y = sqrt(1 - eta_y^2),
/// F = (u1 - u0)/4 and Gpm = [2 + u0 + u1 +/- (2 - u0 - u1) cos(2 alpha)]/4:
///   m(0|r0) = (G+, 0, F sin 2a),  m(0|r1) = (F sin 2a, 0, G-),
/// and m(1|rx) = -m(0|rx).
BlochVector charlie_conditional_bloch_closed(int x, int a, const ProtocolParams& p);

/// Largest distance between Charlie's conditional states for the two
/// outcomes of one Alice setting.
double max_conditional_distance(const ProtocolParams& p);

SuccessReport success_report(const ProtocolParams& p, Branch branch);

} // namespace sqrac
