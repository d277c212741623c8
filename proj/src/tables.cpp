#include "sqrac/tables.hpp"

#include "sqrac/analysis.hpp"
#include "sqrac/bounds.hpp"
#include "sqrac/optimizer.hpp"
#include "sqrac/protocol.hpp"
#include "sqrac/reference_tables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sqrac::tables {

namespace {

constexpr double kAngleTolDeg = 0.1;   // optimizer regression
constexpr double kSharpnessTol = 0.01; // certified sharpness recomputation
constexpr double kBiasTol = 0.03;      // biasness/incompatibility regression
constexpr double kJointTol = 0.02;     // optimized joint-decode regression
constexpr double kEntropyTol = 0.005;  // min-entropy recomputation

double deg2rad(double d)
{
    return d * kPi / 180.0;
}

double rad2deg(double r)
{
    return r * 180.0 / kPi;
}

double target_eta(double theta_deg)
{
    return std::cos(4.0 * deg2rad(theta_deg));
}

Cell gated(const std::string& table, double theta, const std::string& quantity,
           double computed, double reference, double tol)
{
    const Status st = std::abs(computed - reference) <= tol ? Status::pass : Status::fail;
    return {table, theta, quantity, computed, reference, tol, st};
}

Cell informational(const std::string& table, double theta, const std::string& quantity,
                   double computed, double reference)
{
    return {table, theta, quantity, computed, reference, 0.0, Status::info};
}

Cell excluded(const std::string& table, double theta, const std::string& quantity,
              double computed, double reference)
{
    return {table, theta, quantity, computed, reference, 0.0, Status::excluded};
}

template <std::size_t N>
void compare_angle_table(const std::string& name,
                         const std::array<reftab::AngleRow, N>& rows,
                         bool eta0_is_one, bool equal_sharpness,
                         std::vector<Cell>& out)
{
    for (const auto& row : rows) {
        const double eta1 = target_eta(row.theta_deg);
        // The tabulated "0.707" is 1/sqrt(2); the difference matters at the
        // branch boundary (last row of the fixed-eta0 table).
        const double eta0 =
            equal_sharpness ? eta1 : (eta0_is_one ? 1.0 : 1.0 / std::sqrt(2.0));
        const OptimalSetting s = optimize(eta0, eta1);
        out.push_back(gated(name, row.theta_deg, "alpha_deg", rad2deg(s.alpha),
                            row.alpha_deg, kAngleTolDeg));
        out.push_back(gated(name, row.theta_deg, "beta_deg", rad2deg(s.beta),
                            row.beta_deg, kAngleTolDeg));
        out.push_back(informational(name, row.theta_deg, "eta1", eta1, row.eta1));
        out.push_back(informational(name, row.theta_deg, "p_maximin", s.p_equal,
                                    std::numeric_limits<double>::quiet_NaN()));
    }
}

void compare_table4(std::vector<Cell>& out)
{
    for (const auto& row : reftab::kTable4) {
        const double p_ab = 0.5 * (row.p_mb0 + row.p_mb1);
        const double p_ac = 0.5 * (row.p_mc0 + row.p_mc1);
        const SharpnessBounds sb = sharpness_bounds(p_ab, p_ac);
        out.push_back(gated("IV", row.theta_deg, "eta_low", sb.eta_low, row.eta_low,
                            kSharpnessTol));
        out.push_back(gated("IV", row.theta_deg, "eta_up", sb.eta_up, row.eta_up,
                            kSharpnessTol));

        const double eta = target_eta(row.theta_deg);
        const ProtocolParams unbiased{eta, eta, kQuarterPi, kQuarterPi};
        out.push_back(informational("IV", row.theta_deg, "p_ab_theory",
                                    p_ab_closed(unbiased), p_ab));
        out.push_back(informational("IV", row.theta_deg, "p_ac_theory",
                                    p_ac_closed(unbiased), p_ac));
    }
}

void compare_table5(std::vector<Cell>& out)
{
    for (const auto& row : reftab::kTable5) {
        const double eta = target_eta(row.theta_deg);
        const ProtocolParams unbiased{eta, eta, kQuarterPi, kQuarterPi};
        const OptimalSetting s = optimize(eta, eta);
        out.push_back(informational("V", row.theta_deg, "p_ab_unbiased",
                                    p_ab_closed(unbiased), row.p_ab));
        out.push_back(informational("V", row.theta_deg, "p_ac_unbiased",
                                    p_ac_closed(unbiased), row.p_ac));
        out.push_back(informational("V", row.theta_deg, "p_ab_opt", s.p_equal, row.p_ab_opt));
        out.push_back(informational("V", row.theta_deg, "p_ac_opt", s.p_equal, row.p_ac_opt));
    }
}

void compare_table6(std::vector<Cell>& out)
{
    for (const auto& row : reftab::kTable6) {
        const double eta0 = 1.0 / std::sqrt(2.0);
        const double eta1 = target_eta(row.theta_deg);
        const ProtocolParams unbiased{eta0, eta1, kQuarterPi, kQuarterPi};
        const OptimalSetting s = optimize(eta0, eta1);
        const ProtocolParams opt{eta0, eta1, s.alpha, s.beta};

        out.push_back(gated("VI", row.theta_deg, "p_abc_opt", p_abc_closed(opt),
                            row.p_abc_opt, kJointTol));

        const double p_abc_unb = p_abc_closed(unbiased);
        if (row.theta_deg == 0.0) {
            // Documented anomaly: the unbiased joint probability of this row
            // is inconsistent with its neighbors.
            out.push_back(excluded("VI", row.theta_deg, "p_abc_unbiased", p_abc_unb,
                                   row.p_abc));
        } else {
            out.push_back(informational("VI", row.theta_deg, "p_abc_unbiased", p_abc_unb,
                                        row.p_abc));
        }
        out.push_back(informational("VI", row.theta_deg, "p_ab_opt", p_ab_closed(opt),
                                    row.p_ab_opt));
        out.push_back(informational("VI", row.theta_deg, "p_ac_opt", p_ac_closed(opt),
                                    row.p_ac_opt));
    }
}

void compare_table7(std::vector<Cell>& out)
{
    // Inputs taken from the measured equal-sharpness dataset: the certified
    // sharpness floor from the unbiased run, the optimized-run probabilities
    // for the remaining quantities.
    for (std::size_t i = 0; i < reftab::kTable7.size(); ++i) {
        const auto& row = reftab::kTable7[i];
        const auto& data = reftab::kTable5[i];
        const double eta_low = std::sqrt(2.0) * (2.0 * data.p_ab - 1.0);

        const double s_up = bob_biasness_upper(data.p_ab_opt, eta_low, eta_low);
        out.push_back(gated("VII", row.theta_deg, "s_overlap_up", s_up, row.s_overlap,
                            kBiasTol));

        const CharlieBiasness cb =
            charlie_biasness_upper(data.p_ac_opt, eta_low, eta_low, s_up);
        out.push_back(gated("VII", row.theta_deg, "t_overlap_up", cb.t_up, row.t_overlap,
                            kBiasTol));

        const ProtocolParams chain{eta_low, eta_low, 0.5 * std::acos(s_up), kQuarterPi};
        const IncompatibilityBounds ib =
            incompatibility_bounds(data.p_ab_opt, data.p_ac_opt, chain);
        out.push_back(gated("VII", row.theta_deg, "d_s_low", ib.d_s_low, row.d_s, kBiasTol));
        out.push_back(gated("VII", row.theta_deg, "d_t_low", ib.d_t_low, row.d_t, kBiasTol));
    }
}

void compare_table8(std::vector<Cell>& out)
{
    for (const auto& row : reftab::kTable8) {
        const double recomputed = min_entropy(row.i_ab) + min_entropy(row.i_ac);
        if (row.theta_deg == 0.0) {
            // Documented anomaly: the row's CHSH value exceeds the quantum
            // maximum and its entropy does not follow from its own columns.
            out.push_back(excluded("VIII", row.theta_deg, "hmin_recomputed", recomputed,
                                   row.hmin));
        } else {
            out.push_back(gated("VIII", row.theta_deg, "hmin_recomputed", recomputed,
                                row.hmin, kEntropyTol));
        }

        const double eta = target_eta(row.theta_deg);
        const ChshValues theory = chsh_values_closed({eta, eta, kQuarterPi, kQuarterPi});
        out.push_back(informational("VIII", row.theta_deg, "i_ab_theory", theory.i_ab,
                                    row.i_ab));
        out.push_back(informational("VIII", row.theta_deg, "i_ac_theory", theory.i_ac,
                                    row.i_ac));
        out.push_back(informational("VIII", row.theta_deg, "hmin_theory",
                                    min_entropy(theory.i_ab) + min_entropy(theory.i_ac),
                                    row.hmin));
    }
}

} // namespace

const char* status_name(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::info:
        return "info";
    case Status::excluded:
        return "excluded";
    }
    return "unknown";
}

std::vector<Cell> compare_table(const std::string& which)
{
    std::vector<Cell> out;
    if (which == "I") {
        compare_angle_table("I", reftab::kTable1, true, false, out);
    } else if (which == "II") {
        compare_angle_table("II", reftab::kTable2, false, false, out);
    } else if (which == "III") {
        compare_angle_table("III", reftab::kTable3, false, true, out);
    } else if (which == "IV") {
        compare_table4(out);
    } else if (which == "V") {
        compare_table5(out);
    } else if (which == "VI") {
        compare_table6(out);
    } else if (which == "VII") {
        compare_table7(out);
    } else if (which == "VIII") {
        compare_table8(out);
    } else {
        throw std::invalid_argument("unknown table: " + which);
    }
    return out;
}

std::vector<Cell> compare_all()
{
    std::vector<Cell> out;
    for (const char* name : {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"}) {
        auto cells = compare_table(name);
        out.insert(out.end(), cells.begin(), cells.end());
    }
    return out;
}

} // namespace sqrac::tables
