#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

CliResult run_cli(const std::string& args)
{
    const std::string cmd = std::string(SQRAC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) {
        r.output.append(buf, n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("probs reports the sharp unbiased point")
{
    const CliResult r = run_cli("probs --eta0 1 --eta1 1 --alpha 45 --beta 45");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.853553") != std::string::npos);
    CHECK(r.output.find("0.676777") != std::string::npos);
    CHECK(r.output.find("0.426777") != std::string::npos);
}

TEST_CASE("probs converts wave-plate angles")
{
    const CliResult r = run_cli("probs --theta-lambda 8 --eta0 0.707");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.848048") != std::string::npos);
}

TEST_CASE("probs with blind measurements")
{
    const CliResult r = run_cli("probs --eta0 0 --eta1 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.500000") != std::string::npos);
}

TEST_CASE("sweep syntax expands rows")
{
    const CliResult r = run_cli("probs --eta0 0:1 --eta1 0.5 --grid 5");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char ch : r.output) {
        lines += ch == '\n';
    }
    CHECK(lines == 6); // header + 5 rows
}

TEST_CASE("json output parses and carries the same fields")
{
    const CliResult r = run_cli("--format json probs --eta0 0.9 --eta1 0.8");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0].contains("p_ab"));
    CHECK(doc[0].contains("p_abc_brute"));
}

TEST_CASE("identical invocations produce byte-identical files")
{
    const std::string out1 = "/tmp/sqrac_test_region_1.csv";
    const std::string out2 = "/tmp/sqrac_test_region_2.csv";
    CHECK(run_cli("region --grid 15 --out " + out1).exit_code == 0);
    CHECK(run_cli("region --grid 15 --out " + out2).exit_code == 0);
    const std::string a = slurp(out1);
    const std::string b = slurp(out2);
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove(out1.c_str());
    std::remove(out2.c_str());

    const CliResult mc1 = run_cli("mc --theta-lambda 2 --seed 9");
    const CliResult mc2 = run_cli("mc --theta-lambda 2 --seed 9");
    const CliResult mc3 = run_cli("mc --theta-lambda 2 --seed 10");
    CHECK(mc1.output == mc2.output);
    CHECK(mc1.output != mc3.output);
}

TEST_CASE("region grid dump")
{
    const std::string grid_path = "/tmp/sqrac_test_grid.csv";
    const CliResult r = run_cli("region --grid 11 --dump-grid " + grid_path +
                                " --out /tmp/sqrac_test_boundary.csv");
    CHECK(r.exit_code == 0);
    const std::string grid = slurp(grid_path);
    int lines = 0;
    for (char ch : grid) {
        lines += ch == '\n';
    }
    CHECK(lines == 11 * 11 + 1);
    CHECK(grid.rfind("eta0,eta1,branch,", 0) == 0);
    std::remove(grid_path.c_str());
    std::remove("/tmp/sqrac_test_boundary.csv");
}

TEST_CASE("wave-plate angles past the quarter point are rejected")
{
    const CliResult r = run_cli("probs --theta-lambda 30");
    CHECK(r.exit_code != 0);
    CHECK(r.output.find("sharpness") != std::string::npos);
}

TEST_CASE("optimize emits the maximin point")
{
    const CliResult r = run_cli("optimize --eta0 0.99 --eta1 0.99");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("optimized") != std::string::npos);
    CHECK(r.output.find("0.752402") != std::string::npos);
}

TEST_CASE("bounds subcommand emits the full report")
{
    const CliResult r =
        run_cli("bounds --p-ab 0.7915 --p-ac 0.7685 --eta0 0.848 --eta1 0.848");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.824487") != std::string::npos); // eta_low
    CHECK(r.output.find("0.854856") != std::string::npos); // eta_up
}

TEST_CASE("entropy subcommand")
{
    const CliResult r = run_cli("entropy --theta-lambda 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.213866") != std::string::npos);
}

TEST_CASE("tables subcommand flags only the documented cells")
{
    const CliResult viii = run_cli("tables --which VIII");
    CHECK(viii.exit_code == 0);
    CHECK(viii.output.find("fail") == std::string::npos);
    CHECK(viii.output.find("excluded") != std::string::npos);

    const CliResult one = run_cli("tables --which I");
    CHECK(one.exit_code == 0);
    int fails = 0;
    std::istringstream lines(one.output);
    std::string line;
    while (std::getline(lines, line)) {
        fails += line.find(",fail") != std::string::npos;
    }
    CHECK(fails == 1);
}

TEST_CASE("error paths exit nonzero with a one-line diagnostic")
{
    const CliResult bad_eta = run_cli("probs --eta0 2.0");
    CHECK(bad_eta.exit_code != 0);
    CHECK(bad_eta.output.find("sharpness") != std::string::npos);

    const CliResult bad_out = run_cli("probs --eta0 0.5 --out /nonexistent/dir/x.csv");
    CHECK(bad_out.exit_code != 0);
    CHECK(bad_out.output.find("cannot open") != std::string::npos);

    const CliResult bad_cmd = run_cli("frobnicate");
    CHECK(bad_cmd.exit_code != 0);

    const CliResult bad_table = run_cli("tables --which IX");
    CHECK(bad_table.exit_code != 0);
}

TEST_SUITE_END();
