// End-to-end checks of the command-line tool: spawns the real binary and
// inspects bytes and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path() / "degenstir-cli-tests";
    fs::create_directories(dir);
    const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = env_prefix + std::string(DEGENSTIR_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int raw = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

std::string golden(const std::string& name) {
    return slurp(fs::path(DEGENSTIR_GOLDEN_DIR) / name);
}

}  // namespace

TEST_CASE("table defaults to json") {
    const auto r = run_cli("table --n-max 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"algorithm\": \"recurrence\"") != std::string::npos);
    CHECK(r.out.find("\"N_max\": 3") != std::string::npos);
    // row 3 is [0, 1-3l+2l^2, 3-3l, 1]; spot the middle entries as csv
    const auto csv = run_cli("table --n-max 3 --format csv");
    CHECK(csv.out.find("3,1,1 - 3*l + 2*l^2\n") != std::string::npos);
    CHECK(csv.out.find("3,2,3 - 3*l\n") != std::string::npos);
    CHECK(csv.out.find("3,0,0\n") != std::string::npos);
    CHECK(csv.out.find("3,3,1\n") != std::string::npos);
}

TEST_CASE("minimal table") {
    const auto r = run_cli("table --n-max 0");
    CHECK(r.exit_code == 0);
    const auto compact = run_cli("table --n-max 0 --format csv");
    CHECK(compact.out == "n,k,value\n0,0,1\n");
}

TEST_CASE("classical-limit golden files") {
    const auto tri = run_cli("table --n-max 12 --lambda 0 --format csv");
    CHECK(tri.exit_code == 0);
    CHECK(tri.out == golden("triangle_lambda0_n12.csv"));

    const auto bern = run_cli("bernoulli --alpha 1 --n-max 12 --lambda 0");
    CHECK(bern.exit_code == 0);
    CHECK(bern.out == golden("bernoulli_lambda0_n12.json"));
}

TEST_CASE("identical invocations are byte-identical") {
    const auto a = run_cli("table --n-max 6 --algorithm euler-sum");
    const auto b = run_cli("table --n-max 6 --algorithm euler-sum");
    CHECK(a.out == b.out);
    const auto v1 = run_cli("verify --n-max 3 --r-max 3 --order 8 --sample-points 2");
    const auto v2 = run_cli("verify --n-max 3 --r-max 3 --order 8 --sample-points 2");
    CHECK(v1.out == v2.out);
}

TEST_CASE("eval subcommand") {
    CHECK(run_cli("eval --family T --n 2 --r 0 --x 1").out == "4\n");
    CHECK(run_cli("eval --family S --n 3 --r 0 --x 5").out == "-4\n");
    CHECK(run_cli("eval --bernoulli --alpha 1 --n 1 --lambda 1/3").out == "-1/3\n");
    CHECK(run_cli("eval --family S --n 2 --r 1").exit_code == 0);
    CHECK(run_cli("eval --n 2").exit_code == 2);
    CHECK(run_cli("eval --bernoulli --n 2").exit_code == 2);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("table --n-max 3 --lambda nonsense").exit_code == 2);
    CHECK(run_cli("table --n-max 3 --lambda 1/0").exit_code == 2);
    CHECK(run_cli("table --n-max -2").exit_code == 2);
    CHECK(run_cli("nonexistent-subcommand").exit_code == 2);
    CHECK(run_cli("verify --only no-such-id").exit_code == 2);
    CHECK(run_cli("verify --only thm-2.19 --alpha 1/2 --n-max 4").exit_code == 0);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("truncation order env override") {
    const auto r = run_cli("verify --only eq-45-pre --n-max 2", "DEGENSTIR_ORDER=12 ");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"order\": 12") != std::string::npos);
    // an explicit flag wins over the environment
    const auto flagged = run_cli("verify --only eq-45-pre --n-max 2 --order 10", "DEGENSTIR_ORDER=12 ");
    CHECK(flagged.out.find("\"order\": 10") != std::string::npos);
}

TEST_CASE("verify reports on a small sweep") {
    const auto r = run_cli("verify --n-max 2 --r-max 2 --order 8 --sample-points 2 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"seed\": 7") != std::string::npos);
    CHECK(r.out.find("\"status\": \"fail\"") == std::string::npos);
    CHECK(r.out.find("millis") == std::string::npos);

    const auto timed =
        run_cli("verify --only remark --timing --format markdown");
    CHECK(timed.exit_code == 0);
    CHECK(timed.out.find("millis") != std::string::npos);

    const auto listed = run_cli("verify --list");
    CHECK(listed.exit_code == 0);
    CHECK(listed.out.find("lemma-1.1a\n") != std::string::npos);
}

TEST_CASE("trig emits a json record") {
    const auto r = run_cli("trig --r 3 --x 0.7 --lambda 1/3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"abs_err\"") != std::string::npos);
    const auto bad = run_cli("trig --r 3 --x 0.7 --lambda bogus");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("output flag writes a file") {
    const fs::path target = fs::temp_directory_path() / "degenstir-cli-tests" / "table.json";
    fs::remove(target);
    const auto r = run_cli("--output " + target.string() + " table --n-max 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(target).find("\"N_max\": 2") != std::string::npos);
}

TEST_CASE("stdout carries data only") {
    const auto bad = run_cli("table --n-max 3 --lambda 1/0");
    CHECK(bad.out.empty());
    CHECK(!bad.err.empty());
}
