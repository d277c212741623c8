#pragma once

#include <array>

// Published reference values used by the regression tables ("tables"
// subcommand) and the acceptance checks. Angles in degrees. Kept in one
// place so every externally sourced number has a single audit point.

namespace sqrac::reftab {

struct AngleRow {
    double theta_deg;
    double eta1;
    double alpha_deg;
    double beta_deg;
};

// Optimized decoder directions for eta0 = 1.
extern const std::array<AngleRow, 16> kTable1;
// Optimized decoder directions for eta0 = 0.707.
extern const std::array<AngleRow, 7> kTable2;
// Optimized decoder directions for eta0 = eta1.
extern const std::array<AngleRow, 7> kTable3;

struct SharpnessRow {
    double theta_deg;
    double eta_low;
    double eta_up;
    double p_mb0; // Bob's measured per-bit success probabilities
    double p_mb1;
    double p_mc0; // Charlie's
    double p_mc1;
};

// Measured unbiased-direction dataset with certified sharpness bounds.
extern const std::array<SharpnessRow, 15> kTable4;

struct EqualSharpnessRow {
    double theta_deg;
    double eta;
    double p_ab;
    double p_ac;
    double p_ab_opt;
    double p_ac_opt;
};

// Measured success probabilities on the equal-sharpness diagonal.
extern const std::array<EqualSharpnessRow, 7> kTable5;

struct JointDecodeRow {
    double theta_deg; // eta0 = 0.707, eta1 = cos(4 theta)
    double p_ab;
    double p_ac;
    double p_abc;
    double p_ab_opt;
    double p_ac_opt;
    double p_abc_opt;
};

extern const std::array<JointDecodeRow, 4> kTable6;

struct IncompatibilityRow {
    double theta_deg;
    double eta;
    double s_overlap; // |s0.s1| upper bound
    double d_s;       // D(s0, s1) lower bound
    double t_overlap; // |t0.t1| upper bound
    double d_t;       // D(t0, t1) lower bound
};

extern const std::array<IncompatibilityRow, 7> kTable7;

struct ChshRow {
    double theta_deg;
    double eta;
    double i_ab;
    double i_ac;
    double hmin;
};

extern const std::array<ChshRow, 12> kTable8;

} // namespace sqrac::reftab
