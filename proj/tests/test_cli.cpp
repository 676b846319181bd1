// End-to-end checks that drive the installed binary on golden inputs.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto out = dir / ("grasscode_cli_out_" + std::to_string(counter) + ".txt");
    const auto err = dir / ("grasscode_cli_err_" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd =
        g_cli + " " + args + " 1>" + out.string() + " 2>" + err.string();
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return r;
}

std::string data_path(const std::string& name) {
    return std::string(GRASSCODE_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("tables level lookup prints the verbatim constant") {
    RunResult r = run("tables --level 128");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "131072\n");
    CHECK(r.err.find("grasscode") != std::string::npos);  // provenance header

    CHECK(run("tables --level 1024").out == "67108864\n");

    RunResult all = run("tables");
    CHECK(all.exit_code == 0);
    auto j = nlohmann::json::parse(all.out);
    CHECK(j["decomposition_operations"]["256"] == 1048576);
    CHECK(j["parameters"].back()["n"] == 110);
}

TEST_CASE("bounds evaluation and listing") {
    RunResult r = run("bounds --bound gaussian_decomposition_cost --param n=10 --param k=4");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exact"] == 48);

    r = run("bounds --list");
    CHECK(r.exit_code == 0);
    auto list = nlohmann::json::parse(r.out);
    CHECK(list.size() == 16);

    r = run("bounds --bound nonsense");
    CHECK(r.exit_code == 1);
    auto err = nlohmann::json::parse(r.out);
    CHECK(err["code"] == "invalid-argument");

    // csv variant stays machine-readable
    r = run("--format csv bounds --bound simple_code_failure --param q=2 --param m=18 --param w=12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("bound,exact,log2,log_only") == 0);
    CHECK(r.out.find("1/128") != std::string::npos);
}

TEST_CASE("graph emission matches the golden binarizations") {
    RunResult r = run("graph --file " + data_path("fig1.plabic") + " --emit binarized");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"] == 2);
    CHECK(j["entries"][0] == "1 0 0 0");
    CHECK(j["entries"][1] == "0 1 1 1");

    r = run("--format csv graph --file " + data_path("fig2.plabic") + " --emit binarized");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1,1,0,0,0,0\n1,0,0,0,1,1\n");

    r = run("graph --file " + data_path("fig1.plabic") + " --emit measurement");
    CHECK(r.exit_code == 0);
    auto m = nlohmann::json::parse(r.out);
    CHECK(m["k"] == 2);

    // interior source columns flip minor signs, so the raw measurement ends
    // up with a negative 2x2 minor and a witness
    r = run("graph --file " + data_path("fig2.plabic") + " --emit tnn");
    CHECK(r.exit_code == 0);
    auto tnn = nlohmann::json::parse(r.out);
    CHECK(tnn["totally_nonnegative"] == false);
    CHECK(tnn["witness"].size() == 2);

    // a single-source fan is trivially nonnegative
    const auto dir = std::filesystem::temp_directory_path();
    const std::string fan = (dir / "cli_fan.plabic").string();
    {
        std::ofstream f(fan);
        f << "3 1\n"
             "vertex b1 boundary 1\nvertex b2 boundary 2\nvertex b3 boundary 3\n"
             "vertex u white\nvertex v black\nvertex w black\n"
             "edge b1 u\nedge u v 2\nedge v b2\nedge u w 1/3\nedge w b3\n";
    }
    r = run("graph --file " + fan + " --emit tnn");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["totally_nonnegative"] == true);
    std::filesystem::remove(fan);
}

TEST_CASE("code build, inspect, oracle, and decode round trip") {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string bundle = (dir / "cli_fig1.code.json").string();

    RunResult r = run("code build --kind plabic --graph " + data_path("fig1.plabic") +
                      " --w 1 --out " + bundle);
    CHECK(r.exit_code == 0);

    r = run("code inspect --code " + bundle);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["metric"] == "grassmann");

    r = run("oracle --code " + bundle);
    CHECK(r.exit_code == 0);
    auto mw = nlohmann::json::parse(r.out);
    CHECK(mw["min_weight"] == 1);

    // syndrome of the weight-1 error at column 3 under the kernel parity check
    r = run("code oracle --code " + bundle + " --syndrome 1,0");
    CHECK(r.exit_code == 0);

    for (const std::string algo : {"prange", "birthday", "plucker"}) {
        r = run("decode --code " + bundle + " --syndrome 1,0 --w 2 --algo " + algo +
                " --T 2000 --l 1 --p 1 --seed 9");
        CHECK(r.exit_code == 0);
        auto out = nlohmann::json::parse(r.out);
        CHECK(out["success"] == true);
        CHECK(out["weight_found"].get<int>() <= 2);
    }

    std::filesystem::remove(bundle);
}

TEST_CASE("usage errors exit with code 2") {
    RunResult r = run("decode --w 1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());  // stdout stays clean on usage errors

    r = run("definitely-not-a-subcommand");
    CHECK(r.exit_code == 2);
}

TEST_CASE("bench runs a tiny spec deterministically") {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string spec_path = (dir / "cli_bench_spec.json").string();
    {
        std::ofstream f(spec_path);
        f << R"({"experiment":"failure_curve","n":16,"k":8,"ldpc_col_weight":2,
                 "ldpc_row_weight":4,"w":3,"sigma_grid":[0.4,0.6],"trials_per_point":30,
                 "iterations_override":16,"l":1})";
    }
    RunResult a = run("--seed 11 --format csv bench failure --spec " + spec_path);
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("series,x,value,lo95,hi95,trials") == 0);
    RunResult b = run("--seed 11 --format csv bench failure --spec " + spec_path);
    CHECK(a.out == b.out);
    RunResult c = run("--seed 12 --format csv bench failure --spec " + spec_path);
    CHECK(c.exit_code == 0);

    RunResult rc = run("--seed 3 bench rowcost --spec " + spec_path + " --trials 5");
    CHECK(rc.exit_code == 0);
    auto j = nlohmann::json::parse(rc.out);
    CHECK(j["points"].size() >= 2);

    std::filesystem::remove(spec_path);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli>\n");
        return 1;
    }
    g_cli = argv[1];
    doctest::Context ctx;
    return ctx.run();
}
