#include "sqrac/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace sqrac {

namespace {

double shrink_sum(double eta0, double eta1)
{
    return std::sqrt(std::max(0.0, 1.0 - eta0 * eta0)) +
           std::sqrt(std::max(0.0, 1.0 - eta1 * eta1));
}

double p_ac_at(double eta0, double eta1, double alpha, double beta)
{
    return p_ac_closed({eta0, eta1, alpha, beta});
}

double p_ab_at(double eta0, double eta1, double alpha)
{
    return p_ab_closed({eta0, eta1, alpha, kQuarterPi});
}

// P_AB(alpha) - max_beta P_AC(alpha, beta); strictly increasing in alpha.
double maximin_gap(double eta0, double eta1, double alpha)
{
    const double beta = best_beta(alpha, eta0, eta1);
    return p_ab_at(eta0, eta1, alpha) - p_ac_at(eta0, eta1, alpha, beta);
}

} // namespace

double best_beta(double alpha, double eta0, double eta1)
{
    const double s = shrink_sum(eta0, eta1);
    const double ca2 = std::cos(alpha) * std::cos(alpha);
    const double sa2 = std::sin(alpha) * std::sin(alpha);
    const double beta = std::atan2(2.0 * sa2 + s * ca2, 2.0 * ca2 + s * sa2);
    return std::clamp(beta, 0.0, kQuarterPi);
}

OptimalSetting optimize(double eta0, double eta1)
{
    ProtocolParams probe{eta0, eta1, kQuarterPi, kQuarterPi};
    probe.validate();

    OptimalSetting out;
    const double pab45 = p_ab_at(eta0, eta1, kQuarterPi);
    const double pac45 = p_ac_at(eta0, eta1, kQuarterPi, kQuarterPi);
    if (pab45 <= pac45) {
        out.branch = Branch::unbiased;
        out.alpha = kQuarterPi;
        out.beta = kQuarterPi;
        out.p_equal = std::min(pab45, pac45);
        return out;
    }

    double lo = 0.0;   // maximin_gap(lo) <= 0 for all physical sharpness
    double hi = kQuarterPi;
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (maximin_gap(eta0, eta1, mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    const double alpha = 0.5 * (lo + hi);
    out.branch = Branch::optimized;
    out.alpha = alpha;
    out.beta = best_beta(alpha, eta0, eta1);
    out.p_equal = std::min(p_ab_at(eta0, eta1, alpha),
                           p_ac_at(eta0, eta1, alpha, out.beta));
    return out;
}

namespace {

constexpr double kViolationSlack = 1e-12;

RegionPoint evaluate_point(double eta0, double eta1)
{
    RegionPoint pt;
    pt.eta0 = eta0;
    pt.eta1 = eta1;
    pt.setting = optimize(eta0, eta1);
    pt.report = success_report({eta0, eta1, pt.setting.alpha, pt.setting.beta},
                               pt.setting.branch);
    pt.violation =
        std::min(pt.report.p_ab, pt.report.p_ac) >= 0.75 - kViolationSlack;
    return pt;
}

double min_prob(const RegionPoint& pt)
{
    return std::min(pt.report.p_ab, pt.report.p_ac);
}

} // namespace

RegionScan scan_region(const GridSpec& spec)
{
    if (spec.resolution < 2) {
        throw std::domain_error("grid resolution must be at least 2 per axis");
    }
    const int n = spec.resolution;
    RegionScan scan;
    scan.resolution = n;
    scan.points.resize(static_cast<std::size_t>(n) * n);

    const double step = 1.0 / (n - 1);
    unsigned nthreads = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                         : std::thread::hardware_concurrency();
    nthreads = std::max(1u, std::min(nthreads, static_cast<unsigned>(n)));

    auto worker = [&](unsigned tid) {
        for (int i = static_cast<int>(tid); i < n; i += static_cast<int>(nthreads)) {
            for (int j = 0; j < n; ++j) {
                scan.points[static_cast<std::size_t>(i) * n + j] =
                    evaluate_point(i * step, j * step);
            }
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back(worker, t);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    // Crossings of min(P_AB, P_AC) = 3/4 on grid edges, row-major order.
    auto at = [&](int i, int j) -> const RegionPoint& {
        return scan.points[static_cast<std::size_t>(i) * n + j];
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v0 = min_prob(at(i, j)) - 0.75;
            if (j + 1 < n) {
                const double v1 = min_prob(at(i, j + 1)) - 0.75;
                if ((v0 < 0.0) != (v1 < 0.0)) {
                    const double t = v0 / (v0 - v1);
                    scan.boundary.push_back({i * step, (j + t) * step});
                }
            }
            if (i + 1 < n) {
                const double v1 = min_prob(at(i + 1, j)) - 0.75;
                if ((v0 < 0.0) != (v1 < 0.0)) {
                    const double t = v0 / (v0 - v1);
                    scan.boundary.push_back({(i + t) * step, j * step});
                }
            }
        }
    }
    return scan;
}

std::array<double, 2> unbiased_violation_interval()
{
    // Lower endpoint: P_AB(eta, pi/4) = 3/4, increasing in eta.
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (p_ab_at(mid, mid, kQuarterPi) < 0.75 ? lo : hi) = mid;
    }
    const double lower = 0.5 * (lo + hi);

    // Upper endpoint: P_AC(eta, pi/4, pi/4) = 3/4, decreasing in eta.
    lo = 0.0;
    hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (p_ac_at(mid, mid, kQuarterPi, kQuarterPi) > 0.75 ? lo : hi) = mid;
    }
    const double upper = 0.5 * (lo + hi);
    return {lower, upper};
}

} // namespace sqrac
