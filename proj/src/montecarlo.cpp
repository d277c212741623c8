#include "sqrac/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sqrac {

namespace detail {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt)
{
    // splitmix64 step over seed xor salt
    std::uint64_t z = seed ^ (salt * 0x9e3779b97f4a7c15ULL);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

std::int64_t poisson_knuth(double mean, std::mt19937_64& rng)
{
    const double limit = std::exp(-mean);
    std::int64_t k = -1;
    double prod = 1.0;
    do {
        ++k;
        prod *= uniform01(rng);
    } while (prod > limit);
    return k;
}

// Transformed-rejection sampler (PTRD) for mean >= 10.
std::int64_t poisson_ptrd(double mean, std::mt19937_64& rng)
{
    const double smu = std::sqrt(mean);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        double u = uniform01(rng) - 0.5;
        const double v = uniform01(rng);
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<std::int64_t>(k);
        }
        if (k < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
        const double rhs = k * std::log(mean) - mean - std::lgamma(k + 1.0);
        if (lhs <= rhs) {
            return static_cast<std::int64_t>(k);
        }
    }
}

} // namespace

std::int64_t poisson_sample(double mean, std::mt19937_64& rng)
{
    if (mean <= 0.0) {
        return 0;
    }
    if (mean < 10.0) {
        return poisson_knuth(mean, rng);
    }
    return poisson_ptrd(mean, rng);
}

} // namespace detail

namespace {

int decoded_bit(int x0, int x1, int setting)
{
    return setting == 0 ? x0 : x1;
}

double born_bob(const ProtocolParams& p, int x0, int x1, int y, int a, int b,
                const Mat4& rho)
{
    const double eta = (y == 0) ? p.eta0 : p.eta1;
    const Mat4 joint = tensor(alice_povm(x0 ^ x1, a), bob_povm(y, b, p.alpha, eta));
    return trace_real(joint * rho);
}

double born_charlie(const ProtocolParams& p, int x0, int x1, int y, int z, int a, int c,
                    const Mat4& rho)
{
    const double eta = (y == 0) ? p.eta0 : p.eta1;
    const KrausPair kp = bob_kraus_pair(y, p.alpha, eta);
    const Mat2 povm_c = charlie_povm(z, c, p.beta);
    const Mat2 evolved =
        kp.k0.adjoint() * povm_c * kp.k0 + kp.k1.adjoint() * povm_c * kp.k1;
    return trace_real(tensor(alice_povm(x0 ^ x1, a), evolved) * rho);
}

} // namespace

TrialSchedule TrialSchedule::standard(const ProtocolParams& params,
                                      double expected_total_counts, double duration_s)
{
    params.validate();
    if (expected_total_counts <= 0.0 || duration_s <= 0.0) {
        throw std::domain_error("expected counts and duration must be positive");
    }

    TrialSchedule sched;
    sched.params = params;
    sched.duration_s = duration_s;
    const Mat4 rho = max_entangled_state().matrix();

    for (int x0 = 0; x0 < 2; ++x0) {
        for (int x1 = 0; x1 < 2; ++x1) {
            for (int y = 0; y < 2; ++y) {
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        Trial t;
                        t.kind = TrialKind::bob;
                        t.x0 = x0;
                        t.x1 = x1;
                        t.y = y;
                        t.a = a;
                        t.b = b;
                        t.rate_hz = born_bob(params, x0, x1, y, a, b, rho);
                        t.success = decoded_bit(x0, x1, y) == ((x0 ^ a) ^ b);
                        sched.trials.push_back(t);
                    }
                }
            }
        }
    }
    for (int x0 = 0; x0 < 2; ++x0) {
        for (int x1 = 0; x1 < 2; ++x1) {
            for (int y = 0; y < 2; ++y) {
                for (int z = 0; z < 2; ++z) {
                    for (int a = 0; a < 2; ++a) {
                        for (int c = 0; c < 2; ++c) {
                            Trial t;
                            t.kind = TrialKind::charlie;
                            t.x0 = x0;
                            t.x1 = x1;
                            t.y = y;
                            t.z = z;
                            t.a = a;
                            t.c = c;
                            t.rate_hz = born_charlie(params, x0, x1, y, z, a, c, rho);
                            t.success = decoded_bit(x0, x1, z) == ((x0 ^ a) ^ c);
                            sched.trials.push_back(t);
                        }
                    }
                }
            }
        }
    }

    double mass = 0.0;
    for (const Trial& t : sched.trials) {
        mass += t.rate_hz;
    }
    const double scale = expected_total_counts / (mass * duration_s);
    for (Trial& t : sched.trials) {
        t.rate_hz *= scale;
    }
    return sched;
}

std::int64_t CountsRecord::total(std::size_t trial) const
{
    const auto& w = subcounts.at(trial);
    return std::accumulate(w.begin(), w.end(), std::int64_t{0});
}

std::int64_t CountsRecord::grand_total() const
{
    std::int64_t t = 0;
    for (std::size_t i = 0; i < subcounts.size(); ++i) {
        t += total(i);
    }
    return t;
}

CountsRecord simulate_counts(const TrialSchedule& schedule, std::uint64_t seed)
{
    CountsRecord rec;
    rec.seed = seed;
    rec.subcounts.resize(schedule.trials.size());
    const int nw = schedule.subwindows;
    for (std::size_t i = 0; i < schedule.trials.size(); ++i) {
        std::mt19937_64 rng(detail::mix_seed(seed, i + 1));
        const double mean = schedule.trials[i].rate_hz * schedule.duration_s / nw;
        rec.subcounts[i].resize(nw);
        for (int w = 0; w < nw; ++w) {
            rec.subcounts[i][w] = detail::poisson_sample(mean, rng);
        }
    }
    return rec;
}

namespace {

struct ConfigTotals {
    double success = 0.0;
    double total = 0.0;

    double ratio() const
    {
        if (total <= 0.0) {
            throw std::runtime_error("no counts recorded for a trial configuration");
        }
        return success / total;
    }
};

// Accumulates counts per configuration and rebuilds the two averages.
// pick(i) selects the count contribution of trial i.
template <typename Pick>
ReconstructedProbs reconstruct_with(const TrialSchedule& schedule, Pick pick)
{
    // Bob phase: key (x0, x1, y); Charlie phase: key (x0, x1, y, z).
    ConfigTotals bob[8];
    ConfigTotals charlie[16];
    for (std::size_t i = 0; i < schedule.trials.size(); ++i) {
        const Trial& t = schedule.trials[i];
        const double n = static_cast<double>(pick(i));
        if (t.kind == TrialKind::bob) {
            ConfigTotals& ct = bob[((t.x0 * 2 + t.x1) * 2) + t.y];
            ct.total += n;
            if (t.success) {
                ct.success += n;
            }
        } else {
            ConfigTotals& ct = charlie[((t.x0 * 2 + t.x1) * 4) + t.y * 2 + t.z];
            ct.total += n;
            if (t.success) {
                ct.success += n;
            }
        }
    }

    ReconstructedProbs out;
    for (int k = 0; k < 8; ++k) {
        out.p_ab += bob[k].ratio() / 8.0;
    }
    for (int x = 0; x < 4; ++x) {
        for (int z = 0; z < 2; ++z) {
            const double avg_over_y =
                0.5 * (charlie[x * 4 + 0 * 2 + z].ratio() + charlie[x * 4 + 1 * 2 + z].ratio());
            out.p_ac += avg_over_y / 8.0;
        }
    }
    return out;
}

} // namespace

ReconstructedProbs reconstruct(const TrialSchedule& schedule, const CountsRecord& record)
{
    return reconstruct_with(schedule,
                            [&](std::size_t i) { return record.total(i); });
}

SdReport estimate_sd(const TrialSchedule& schedule, const CountsRecord& record,
                     std::uint64_t grouping_seed)
{
    const int nw = schedule.subwindows;
    const std::size_t ntrials = schedule.trials.size();
    if (record.subcounts.size() != ntrials) {
        throw std::runtime_error("counts record does not match the schedule");
    }

    // Random regrouping: an independent shuffle of each trial's sub-windows.
    std::vector<std::vector<int>> perm(ntrials);
    for (std::size_t i = 0; i < ntrials; ++i) {
        perm[i].resize(nw);
        std::iota(perm[i].begin(), perm[i].end(), 0);
        std::mt19937_64 rng(detail::mix_seed(grouping_seed, 0x5eedULL + i));
        for (int w = nw - 1; w > 0; --w) {
            const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(w + 1));
            std::swap(perm[i][w], perm[i][j]);
        }
    }

    // Per-group conditional probabilities, 16 quantities per group
    // (8 Bob configurations + 8 Charlie (x, z) configurations).
    std::vector<std::array<double, 16>> values(nw);
    for (int g = 0; g < nw; ++g) {
        ConfigTotals bob[8];
        ConfigTotals charlie[16];
        for (std::size_t i = 0; i < ntrials; ++i) {
            const Trial& t = schedule.trials[i];
            const double n = static_cast<double>(record.subcounts[i][perm[i][g]]);
            if (t.kind == TrialKind::bob) {
                ConfigTotals& ct = bob[((t.x0 * 2 + t.x1) * 2) + t.y];
                ct.total += n;
                if (t.success) {
                    ct.success += n;
                }
            } else {
                ConfigTotals& ct = charlie[((t.x0 * 2 + t.x1) * 4) + t.y * 2 + t.z];
                ct.total += n;
                if (t.success) {
                    ct.success += n;
                }
            }
        }
        for (int k = 0; k < 8; ++k) {
            values[g][k] = bob[k].ratio();
        }
        for (int x = 0; x < 4; ++x) {
            for (int z = 0; z < 2; ++z) {
                values[g][8 + x * 2 + z] = 0.5 * (charlie[x * 4 + z].ratio() +
                                                  charlie[x * 4 + 2 + z].ratio());
            }
        }
    }

    // Group scatter -> standard error of the full-sample estimate.
    std::array<double, 16> se{};
    for (int q = 0; q < 16; ++q) {
        double mean = 0.0;
        for (int g = 0; g < nw; ++g) {
            mean += values[g][q];
        }
        mean /= nw;
        double var = 0.0;
        for (int g = 0; g < nw; ++g) {
            const double d = values[g][q] - mean;
            var += d * d;
        }
        var /= (nw - 1);
        se[q] = std::sqrt(var) / std::sqrt(static_cast<double>(nw));
    }

    SdReport out;
    for (int q = 0; q < 8; ++q) {
        out.sd_p_ab += se[q] / 8.0;
    }
    for (int q = 8; q < 16; ++q) {
        out.sd_p_ac += se[q] / 8.0;
    }
    return out;
}

} // namespace sqrac
