#include "sqrac/montecarlo.hpp"

#include <doctest.h>

#include <cmath>

using namespace sqrac;

namespace {

const ProtocolParams kNearSharp{0.99, 0.99, kQuarterPi, kQuarterPi};

} // namespace

TEST_SUITE_BEGIN("montecarlo");

TEST_CASE("standard schedule layout")
{
    const TrialSchedule sched = TrialSchedule::standard(kNearSharp);
    REQUIRE(sched.trials.size() == 96);

    int bob = 0;
    int charlie = 0;
    double expected_counts = 0.0;
    for (const Trial& t : sched.trials) {
        (t.kind == TrialKind::bob ? bob : charlie) += 1;
        CHECK(t.rate_hz >= 0.0);
        expected_counts += t.rate_hz * sched.duration_s;
    }
    CHECK(bob == 32);
    CHECK(charlie == 64);
    CHECK(expected_counts == doctest::Approx(4.0e5).epsilon(1e-9));

    // success predicate spot checks: x_y = (x0 ^ a) ^ b
    for (const Trial& t : sched.trials) {
        if (t.kind == TrialKind::bob) {
            const int want = t.y == 0 ? t.x0 : t.x1;
            CHECK(t.success == (want == ((t.x0 ^ t.a) ^ t.b)));
        } else {
            const int want = t.z == 0 ? t.x0 : t.x1;
            CHECK(t.success == (want == ((t.x0 ^ t.a) ^ t.c)));
        }
    }

    CHECK_THROWS_AS(TrialSchedule::standard(kNearSharp, -1.0), std::domain_error);
}

TEST_CASE("identical seeds give identical counts")
{
    const TrialSchedule sched = TrialSchedule::standard(kNearSharp);
    const CountsRecord a = simulate_counts(sched, 42);
    const CountsRecord b = simulate_counts(sched, 42);
    REQUIRE(a.subcounts.size() == b.subcounts.size());
    for (std::size_t i = 0; i < a.subcounts.size(); ++i) {
        CHECK(a.subcounts[i] == b.subcounts[i]);
    }

    const CountsRecord c = simulate_counts(sched, 43);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.subcounts.size() && !any_diff; ++i) {
        any_diff = a.subcounts[i] != c.subcounts[i];
    }
    CHECK(any_diff);
}

TEST_CASE("zero rate produces zero counts")
{
    TrialSchedule sched = TrialSchedule::standard(kNearSharp);
    sched.trials[0].rate_hz = 0.0;
    const CountsRecord rec = simulate_counts(sched, 99);
    CHECK(rec.total(0) == 0);
}

TEST_CASE("realized totals stay near the configured budget")
{
    const TrialSchedule sched = TrialSchedule::standard(kNearSharp);
    for (std::uint64_t seed : {1ULL, 42ULL, 1234ULL}) {
        const CountsRecord rec = simulate_counts(sched, seed);
        CHECK(std::abs(static_cast<double>(rec.grand_total()) - 4.0e5) <=
              5.0 * std::sqrt(4.0e5));
    }
}

TEST_CASE("reconstruction approaches the closed forms with more data")
{
    // 100x the standard duration shrinks the error by 10
    const TrialSchedule sched = TrialSchedule::standard(kNearSharp, 4.0e7, 400.0);
    const CountsRecord rec = simulate_counts(sched, 7);
    const ReconstructedProbs est = reconstruct(sched, rec);
    const SdReport sd = estimate_sd(sched, rec, 11);
    CHECK(std::abs(est.p_ab - p_ab_closed(kNearSharp)) <= 3.0 * sd.sd_p_ab);
    CHECK(std::abs(est.p_ac - p_ac_closed(kNearSharp)) <= 3.0 * sd.sd_p_ac);
    CHECK(sd.sd_p_ab <= 3.0e-4);
}

TEST_CASE("error estimate at the experimental scale")
{
    const TrialSchedule sched = TrialSchedule::standard(kNearSharp);
    const CountsRecord rec = simulate_counts(sched, 42);
    const SdReport sd = estimate_sd(sched, rec, 7);
    CHECK(sd.sd_p_ab >= 3.0e-4);
    CHECK(sd.sd_p_ab <= 3.0e-3);
    CHECK(sd.sd_p_ac >= 3.0e-4);
    CHECK(sd.sd_p_ac <= 3.0e-3);
}

TEST_CASE("error scales like one over the square root of the duration")
{
    const TrialSchedule base = TrialSchedule::standard(kNearSharp, 4.0e5, 4.0);
    const TrialSchedule twice = TrialSchedule::standard(kNearSharp, 8.0e5, 8.0);
    double ratio_sum = 0.0;
    const int nseeds = 10;
    for (int s = 0; s < nseeds; ++s) {
        const SdReport sd1 = estimate_sd(base, simulate_counts(base, 100 + s), 5);
        const SdReport sd2 = estimate_sd(twice, simulate_counts(twice, 200 + s), 5);
        ratio_sum += sd2.sd_p_ab / sd1.sd_p_ab;
    }
    const double mean_ratio = ratio_sum / nseeds;
    CHECK(mean_ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.2));
}

TEST_CASE("synthetic zero-variance counts give zero error")
{
    const TrialSchedule sched = TrialSchedule::standard(kNearSharp);
    CountsRecord rec;
    rec.seed = 0;
    rec.subcounts.assign(sched.trials.size(), std::vector<std::int64_t>(sched.subwindows, 3));
    const SdReport sd = estimate_sd(sched, rec, 1);
    CHECK(sd.sd_p_ab == 0.0);
    CHECK(sd.sd_p_ac == 0.0);
}

TEST_CASE("poisson sampler moments across the algorithm switch")
{
    // the sampler switches methods at mean 10
    for (const double mean : {0.8, 6.0, 9.9, 10.1, 83.0, 2000.0}) {
        std::mt19937_64 rng(777);
        const int n = 100000;
        double m1 = 0.0;
        std::vector<double> draws(n);
        for (int i = 0; i < n; ++i) {
            draws[i] = static_cast<double>(detail::poisson_sample(mean, rng));
            m1 += draws[i] / n;
        }
        double m2 = 0.0;
        for (int i = 0; i < n; ++i) {
            m2 += (draws[i] - m1) * (draws[i] - m1) / (n - 1);
        }
        const double se_mean = std::sqrt(mean / n);
        CHECK(std::abs(m1 - mean) <= 5.0 * se_mean);
        const double se_var = mean * std::sqrt(2.0 / n);
        CHECK(std::abs(m2 - mean) <= 5.0 * se_var);
    }
    std::mt19937_64 rng(1);
    CHECK(detail::poisson_sample(0.0, rng) == 0);
    CHECK(detail::poisson_sample(-1.0, rng) == 0);
}

TEST_CASE("grouping fails without counts")
{
    const TrialSchedule sched = TrialSchedule::standard(kNearSharp);
    CountsRecord rec;
    rec.subcounts.assign(sched.trials.size(), std::vector<std::int64_t>(sched.subwindows, 0));
    CHECK_THROWS_AS(estimate_sd(sched, rec, 1), std::runtime_error);

    CountsRecord mismatched;
    mismatched.subcounts.assign(3, std::vector<std::int64_t>(sched.subwindows, 1));
    CHECK_THROWS_AS(estimate_sd(sched, mismatched, 1), std::runtime_error);
}

TEST_SUITE_END();
