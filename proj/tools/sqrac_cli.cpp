// Command-line front end: parameter sweeps, table regression, region
// scans, certification bounds, randomness reports and the
// finite-statistics emulation.

#include "sqrac/analysis.hpp"
#include "sqrac/bounds.hpp"
#include "sqrac/montecarlo.hpp"
#include "sqrac/optimizer.hpp"
#include "sqrac/protocol.hpp"
#include "sqrac/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace sqrac;

double deg2rad(double d)
{
    return d * kPi / 180.0;
}

double rad2deg(double r)
{
    return r * 180.0 / kPi;
}

std::string fixed(double v, int digits)
{
    if (std::isnan(v)) {
        return "";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string prob(double v)
{
    return fixed(v, 6);
}

std::string angle(double rad)
{
    return fixed(rad2deg(rad), 2);
}

/// A scalar or an inclusive sweep range "lo:hi".
struct Sweep {
    double lo = 0.0;
    double hi = 0.0;
    bool swept = false;

    std::vector<double> values(int steps) const
    {
        if (!swept) {
            return {lo};
        }
        std::vector<double> out;
        const int n = std::max(2, steps);
        for (int i = 0; i < n; ++i) {
            out.push_back(lo + (hi - lo) * i / (n - 1));
        }
        return out;
    }
};

Sweep parse_sweep(const std::string& text)
{
    Sweep s;
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        s.lo = s.hi = std::stod(text);
        return s;
    }
    s.lo = std::stod(text.substr(0, colon));
    s.hi = std::stod(text.substr(colon + 1));
    s.swept = true;
    if (s.hi < s.lo) {
        throw CLI::ValidationError("range must be increasing: " + text);
    }
    return s;
}

struct OutputTarget {
    std::string path;    // empty = stdout
    std::string format;  // "csv" or "json"

    void write(const std::string& header, const std::vector<std::vector<std::string>>& rows,
               const std::vector<std::string>& columns) const
    {
        std::ostringstream body;
        if (format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json obj;
                for (std::size_t i = 0; i < columns.size(); ++i) {
                    obj[columns[i]] = row[i];
                }
                arr.push_back(obj);
            }
            body << arr.dump(2) << "\n";
        } else {
            body << header << "\n";
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    body << (i ? "," : "") << row[i];
                }
                body << "\n";
            }
        }
        if (path.empty()) {
            std::cout << body.str();
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot open output file: " + path);
        }
        f << body.str();
        if (!f) {
            throw std::runtime_error("failed writing output file: " + path);
        }
    }
};

std::string join(const std::vector<std::string>& cols)
{
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out += (i ? "," : "") + cols[i];
    }
    return out;
}

struct ParamArgs {
    std::string eta0_text;
    std::string eta1_text;
    std::optional<double> theta_lambda_deg;
    double alpha_deg = 45.0;
    double beta_deg = 45.0;
    int grid = 11;

    void attach(CLI::App* cmd, bool with_angles = true)
    {
        cmd->add_option("--eta0", eta0_text, "Bob sharpness for y=0 (value or lo:hi sweep)");
        cmd->add_option("--eta1", eta1_text, "Bob sharpness for y=1 (value or lo:hi sweep)");
        cmd->add_option("--theta-lambda", theta_lambda_deg,
                        "wave-plate angle in degrees; sets eta = cos(4 theta)");
        if (with_angles) {
            cmd->add_option("--alpha", alpha_deg, "Bob direction half-angle, degrees");
            cmd->add_option("--beta", beta_deg, "Charlie direction half-angle, degrees");
        }
        cmd->add_option("--grid", grid, "steps per swept range");
    }

    // (eta0, eta1) combinations from the sweep arguments.
    std::vector<std::pair<double, double>> eta_pairs() const
    {
        double theta_eta = 1.0;
        if (theta_lambda_deg) {
            theta_eta = sharpness_from_waveplate(deg2rad(*theta_lambda_deg));
        }
        Sweep s0;
        Sweep s1;
        if (!eta0_text.empty()) {
            s0 = parse_sweep(eta0_text);
        } else {
            s0.lo = s0.hi = theta_lambda_deg ? theta_eta : 1.0;
        }
        if (!eta1_text.empty()) {
            s1 = parse_sweep(eta1_text);
        } else {
            s1.lo = s1.hi = theta_lambda_deg ? theta_eta : 1.0;
        }
        std::vector<std::pair<double, double>> out;
        for (double e0 : s0.values(grid)) {
            for (double e1 : s1.values(grid)) {
                out.emplace_back(e0, e1);
            }
        }
        return out;
    }
};

int cmd_probs(const ParamArgs& args, const OutputTarget& out)
{
    const std::vector<std::string> cols = {"eta0",       "eta1",       "alpha_deg",
                                           "beta_deg",   "p_ab",       "p_ac",
                                           "p_abc",      "p_ab_brute", "p_ac_brute",
                                           "p_abc_brute"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& [e0, e1] : args.eta_pairs()) {
        const ProtocolParams p{e0, e1, deg2rad(args.alpha_deg), deg2rad(args.beta_deg)};
        p.validate();
        rows.push_back({prob(e0), prob(e1), angle(p.alpha), angle(p.beta),
                        prob(p_ab_closed(p)), prob(p_ac_closed(p)), prob(p_abc_closed(p)),
                        prob(p_ab_bruteforce(p)), prob(p_ac_bruteforce(p)),
                        prob(p_abc_bruteforce(p))});
    }
    out.write(join(cols), rows, cols);
    return 0;
}

int cmd_optimize(const ParamArgs& args, const OutputTarget& out)
{
    const std::vector<std::string> cols = {"eta0",      "eta1", "branch", "alpha_deg",
                                           "beta_deg",  "p_ab", "p_ac",   "p_abc"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& [e0, e1] : args.eta_pairs()) {
        const OptimalSetting s = optimize(e0, e1);
        const ProtocolParams p{e0, e1, s.alpha, s.beta};
        rows.push_back({prob(e0), prob(e1),
                        s.branch == Branch::unbiased ? "unbiased" : "optimized",
                        angle(s.alpha), angle(s.beta), prob(p_ab_closed(p)),
                        prob(p_ac_closed(p)), prob(p_abc_closed(p))});
    }
    out.write(join(cols), rows, cols);
    return 0;
}

int cmd_region(int grid, int threads, const OutputTarget& out, const std::string& dump_grid)
{
    const RegionScan scan = scan_region({grid, threads});

    if (!dump_grid.empty()) {
        OutputTarget grid_out{dump_grid, out.format};
        const std::vector<std::string> cols = {"eta0",      "eta1", "branch",
                                               "alpha_deg", "beta_deg", "p_ab",
                                               "p_ac",      "violation"};
        std::vector<std::vector<std::string>> rows;
        for (const RegionPoint& pt : scan.points) {
            rows.push_back({prob(pt.eta0), prob(pt.eta1),
                            pt.setting.branch == Branch::unbiased ? "unbiased" : "optimized",
                            angle(pt.setting.alpha), angle(pt.setting.beta),
                            prob(pt.report.p_ab), prob(pt.report.p_ac),
                            pt.violation ? "1" : "0"});
        }
        grid_out.write(join(cols), rows, cols);
    }

    const std::vector<std::string> cols = {"eta0", "eta1"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : scan.boundary) {
        rows.push_back({prob(v[0]), prob(v[1])});
    }
    out.write(join(cols), rows, cols);
    return 0;
}

int cmd_bounds(double p_ab, double p_ac, double eta0, double eta1,
               std::optional<double> alpha_deg, const OutputTarget& out)
{
    std::optional<double> alpha;
    if (alpha_deg) {
        alpha = deg2rad(*alpha_deg);
    }
    const BoundsReport r = bounds_report(p_ab, p_ac, eta0, eta1, alpha);
    const std::vector<std::string> cols = {"p_ab",    "p_ac",    "eta0",  "eta1",
                                           "eta_low", "eta_up",  "s_up",  "t_up",
                                           "d_s_low", "d_t_low", "m",     "clamped",
                                           "sub_half_data"};
    std::vector<std::vector<std::string>> rows = {
        {prob(p_ab), prob(p_ac), prob(eta0), prob(eta1), prob(r.eta_low), prob(r.eta_up),
         prob(r.s_up), prob(r.t_up), prob(r.d_s_low), prob(r.d_t_low), prob(r.m),
         r.clamped ? "1" : "0", r.sub_half_data ? "1" : "0"}};
    out.write(join(cols), rows, cols);
    return 0;
}

int cmd_entropy(const ParamArgs& args, const OutputTarget& out)
{
    const std::vector<std::string> cols = {"eta0",    "eta1",    "alpha_deg", "beta_deg",
                                           "i_ab",    "i_ac",    "hmin_ab",   "hmin_ac",
                                           "hmin_total"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& [e0, e1] : args.eta_pairs()) {
        const ProtocolParams p{e0, e1, deg2rad(args.alpha_deg), deg2rad(args.beta_deg)};
        const RandomnessReport r = randomness_report(p);
        rows.push_back({prob(e0), prob(e1), angle(p.alpha), angle(p.beta), prob(r.i_ab),
                        prob(r.i_ac), prob(r.hmin_ab), prob(r.hmin_ac), prob(r.hmin_total)});
    }
    out.write(join(cols), rows, cols);
    return 0;
}

int cmd_mc(const ParamArgs& args, std::uint64_t seed, double counts, double duration,
           const OutputTarget& out)
{
    const std::vector<std::string> cols = {
        "eta0",        "eta1",        "alpha_deg", "beta_deg", "seed",
        "total_counts", "p_ab_est",   "p_ac_est",  "p_ab",     "p_ac",
        "sd_p_ab",     "sd_p_ac"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& [e0, e1] : args.eta_pairs()) {
        const ProtocolParams p{e0, e1, deg2rad(args.alpha_deg), deg2rad(args.beta_deg)};
        const TrialSchedule sched = TrialSchedule::standard(p, counts, duration);
        const CountsRecord rec = simulate_counts(sched, seed);
        const ReconstructedProbs est = reconstruct(sched, rec);
        const SdReport sd = estimate_sd(sched, rec, seed ^ 0x9e3779b97f4a7c15ULL);
        rows.push_back({prob(e0), prob(e1), angle(p.alpha), angle(p.beta),
                        std::to_string(seed), std::to_string(rec.grand_total()),
                        prob(est.p_ab), prob(est.p_ac), prob(p_ab_closed(p)),
                        prob(p_ac_closed(p)), prob(sd.sd_p_ab), prob(sd.sd_p_ac)});
    }
    out.write(join(cols), rows, cols);
    return 0;
}

int cmd_tables(const std::string& which, std::optional<double> tol_override,
               const OutputTarget& out)
{
    std::vector<tables::Cell> cells;
    if (which == "all") {
        cells = tables::compare_all();
    } else {
        cells = tables::compare_table(which);
    }
    if (tol_override) {
        for (auto& c : cells) {
            if (c.status == tables::Status::pass || c.status == tables::Status::fail) {
                c.tolerance = *tol_override;
                c.status = std::abs(c.computed - c.reference) <= c.tolerance
                               ? tables::Status::pass
                               : tables::Status::fail;
            }
        }
    }
    const std::vector<std::string> cols = {"table",    "theta_lambda_deg", "quantity",
                                           "computed", "reference",        "abs_diff",
                                           "tolerance", "status"};
    std::vector<std::vector<std::string>> rows;
    int failed = 0;
    for (const auto& c : cells) {
        const bool gated = c.status == tables::Status::pass || c.status == tables::Status::fail;
        failed += c.status == tables::Status::fail;
        rows.push_back({c.table, fixed(c.theta_deg, 1), c.quantity, prob(c.computed),
                        prob(c.reference),
                        std::isnan(c.reference) ? "" : prob(std::abs(c.computed - c.reference)),
                        gated ? prob(c.tolerance) : "", tables::status_name(c.status)});
    }
    out.write(join(cols), rows, cols);
    if (failed > 0) {
        std::cerr << "tables: " << failed << " gated cell(s) outside tolerance\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"sequential 2->1 quantum random access code toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "output path (default: stdout)");

    ParamArgs probs_args;
    auto* probs = app.add_subcommand("probs", "success probabilities for parameter points");
    probs_args.attach(probs);

    ParamArgs opt_args;
    auto* optimize = app.add_subcommand("optimize", "maximin decoder directions");
    opt_args.attach(optimize, false);

    int region_grid = 241;
    int region_threads = 0;
    std::string dump_grid;
    auto* region = app.add_subcommand("region", "double-violation region boundary");
    region->add_option("--grid", region_grid, "grid resolution per axis")
        ->check(CLI::Range(2, 4001))
        ->capture_default_str();
    region->add_option("--threads", region_threads, "worker threads (0 = hardware)");
    region->add_option("--dump-grid", dump_grid, "also write the full per-point grid here");

    double b_pab = 0.75, b_pac = 0.75, b_eta0 = 1.0, b_eta1 = 1.0;
    std::optional<double> b_alpha;
    auto* bounds = app.add_subcommand("bounds", "certify sharpness/biasness/incompatibility");
    bounds->add_option("--p-ab", b_pab, "observed P_AB")->required();
    bounds->add_option("--p-ac", b_pac, "observed P_AC")->required();
    bounds->add_option("--eta0", b_eta0, "sharpness estimate for y=0")->required();
    bounds->add_option("--eta1", b_eta1, "sharpness estimate for y=1")->required();
    bounds->add_option("--alpha", b_alpha,
                       "Bob angle in degrees for the conditional-state distance "
                       "(default: arccos(s_up)/2)");

    ParamArgs entropy_args;
    auto* entropy = app.add_subcommand("entropy", "CHSH values and min-entropy");
    entropy_args.attach(entropy);

    ParamArgs mc_args;
    std::uint64_t mc_seed = 1;
    double mc_counts = 4.0e5;
    double mc_duration = 4.0;
    auto* mc = app.add_subcommand("mc", "finite-statistics coincidence emulation");
    mc_args.attach(mc);
    mc->add_option("--seed", mc_seed, "simulation seed")->capture_default_str();
    mc->add_option("--counts", mc_counts, "expected total coincidences")
        ->capture_default_str();
    mc->add_option("--duration", mc_duration, "seconds per trial")->capture_default_str();

    std::string which = "all";
    std::optional<double> table_tol;
    auto* tables_cmd = app.add_subcommand("tables", "regression against reference tables");
    tables_cmd->add_option("--which", which, "table name I..VIII or 'all'")
        ->check(CLI::IsMember({"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "all"}))
        ->capture_default_str();
    tables_cmd->add_option("--tol", table_tol, "override the gated tolerance");

    CLI11_PARSE(app, argc, argv);

    const OutputTarget out{out_path, format};
    try {
        if (probs->parsed()) {
            return cmd_probs(probs_args, out);
        }
        if (optimize->parsed()) {
            return cmd_optimize(opt_args, out);
        }
        if (region->parsed()) {
            return cmd_region(region_grid, region_threads, out, dump_grid);
        }
        if (bounds->parsed()) {
            return cmd_bounds(b_pab, b_pac, b_eta0, b_eta1, b_alpha, out);
        }
        if (entropy->parsed()) {
            return cmd_entropy(entropy_args, out);
        }
        if (mc->parsed()) {
            return cmd_mc(mc_args, mc_seed, mc_counts, mc_duration, out);
        }
        if (tables_cmd->parsed()) {
            return cmd_tables(which, table_tol, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "sqrac: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
