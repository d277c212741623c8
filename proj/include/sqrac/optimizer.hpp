#pragma once

#include "sqrac/protocol.hpp"

#include <array>
#include <vector>

namespace sqrac {

struct OptimalSetting {
    double alpha = kQuarterPi;
    double beta = kQuarterPi;
    double p_equal = 0.0; // maximin value min(P_AB, P_AC) at the setting
    Branch branch = Branch::unbiased;
};

/// Charlie angle maximizing P_AC at fixed alpha, clipped to [0, pi/4]:
/// tan(beta*) = (2 sin^2 a + S cos^2 a) / (2 cos^2 a + S sin^2 a),
/// S = sqrt(1-eta0^2) + sqrt(1-eta1^2).
double best_beta(double alpha, double eta0, double eta1);

/// Maximin selection of the decoder directions. Keeps alpha = beta = pi/4
/// when that already gives P_AB <= P_AC; otherwise bisects for the alpha
/// with P_AB(alpha) = max_beta P_AC(alpha, beta).
OptimalSetting optimize(double eta0, double eta1);

struct GridSpec {
    int resolution = 241; // points per axis over [0, 1]
    int threads = 0;      // 0 = hardware concurrency
};

struct RegionPoint {
    double eta0 = 0.0;
    double eta1 = 0.0;
    OptimalSetting setting;
    SuccessReport report;
    bool violation = false; // min(P_AB, P_AC) >= 3/4 - 1e-12
};

struct RegionScan {
    int resolution = 0;
    std::vector<RegionPoint> points;                // row-major, eta0 outer
    std::vector<std::array<double, 2>> boundary;    // min(P_AB,P_AC) = 3/4 polyline
};

/// Per-point maximin optimization over an (eta0, eta1) grid; grid work is
/// evaluated in parallel, output ordering is deterministic.
RegionScan scan_region(const GridSpec& spec);

/// Violation interval endpoints on the equal-sharpness diagonal with
/// unbiased settings, found by root-finding on the closed forms.
std::array<double, 2> unbiased_violation_interval();

} // namespace sqrac
