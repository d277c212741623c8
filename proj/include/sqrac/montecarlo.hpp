#pragma once

#include "sqrac/protocol.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sqrac {

enum class TrialKind { bob, charlie };

/// One coincidence-counting configuration. Bob-phase trials resolve
/// (a, b); Charlie-phase trials resolve (a, c) with Bob's outcome
/// marginalized inside the channel and his setting y fixed per trial.
struct Trial {
    TrialKind kind = TrialKind::bob;
    int x0 = 0, x1 = 0; // Alice's bits
    int a = 0;          // Alice outcome
    int y = 0;          // Bob setting
    int b = -1;         // Bob outcome (bob phase only)
    int z = -1, c = -1; // Charlie setting/outcome (charlie phase only)
    double rate_hz = 0.0;
    bool success = false; // decoding predicate for this outcome pattern
};

struct TrialSchedule {
    std::vector<Trial> trials; // 32 bob-phase + 64 charlie-phase
    double duration_s = 4.0;
    int subwindows = 50;
    ProtocolParams params;

    /// Rates are Born probabilities scaled so the expected total count of
    /// a full measurement equals expected_total_counts.
    static TrialSchedule standard(const ProtocolParams& params,
                                  double expected_total_counts = 4.0e5,
                                  double duration_s = 4.0);
};

struct CountsRecord {
    std::uint64_t seed = 0;
    std::vector<std::vector<std::int64_t>> subcounts; // [trial][window]

    std::int64_t total(std::size_t trial) const;
    std::int64_t grand_total() const;
};

/// Poisson counts per trial sub-window; bit-reproducible for a given seed,
/// with an independent deterministic stream per trial.
CountsRecord simulate_counts(const TrialSchedule& schedule, std::uint64_t seed);

struct ReconstructedProbs {
    double p_ab = 0.0;
    double p_ac = 0.0;
};

/// Success probabilities rebuilt from observed counts alone.
ReconstructedProbs reconstruct(const TrialSchedule& schedule, const CountsRecord& record);

struct SdReport {
    double sd_p_ab = 0.0;
    double sd_p_ac = 0.0;
};

/// Statistical error of the reconstructed probabilities: sub-window counts
/// are shuffled into 50 groups per trial, each conditional probability is
/// evaluated per group, and the per-quantity errors (group scatter scaled
/// to the full sample) are summed with the 1/8 weights of the averages.
/// Throws std::runtime_error when a group ends up with no counts.
SdReport estimate_sd(const TrialSchedule& schedule, const CountsRecord& record,
                     std::uint64_t grouping_seed);

namespace detail {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
double uniform01(std::mt19937_64& rng);
std::int64_t poisson_sample(double mean, std::mt19937_64& rng);

} // namespace detail

} // namespace sqrac
