#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string capture = "cli_out_" + std::to_string(counter++) + ".txt";
    const std::string cmd = g_cli_path + " " + args + " > " + capture + " 2>&1";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = (rc == -1) ? -1 : WEXITSTATUS(rc);
    std::ifstream in(capture, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    std::remove(capture.c_str());
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify emits the structured record and exit 0") {
    const RunResult r = run_cli("classify --m 2 --n 1 --t 1 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "m=2"));
    CHECK(contains(r.output, "n=1"));
    CHECK(contains(r.output, "t_re=1"));
    CHECK(contains(r.output, "t_im=0"));
    CHECK(contains(r.output, "class=BothEscape"));
    CHECK(contains(r.output, "level_or_period="));
    CHECK(contains(r.output, "iterations="));
    CHECK(contains(r.output, "alpha_outcome=zero:"));
    CHECK(contains(r.output, "beta_outcome=inf:"));
}

TEST_CASE("classify --record emits the one-line machine record") {
    const RunResult r = run_cli("classify --m 2 --n 1 --t 0.01 0 --record");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "record classify m=2 n=1"));
    CHECK(contains(r.output, "class=AlphaResidual"));
}

TEST_CASE("verify subcommands") {
    SUBCASE("resultants passes and prints the curves") {
        const RunResult r = run_cli("verify resultants");
        CHECK(r.exit_code == 0);
        CHECK(contains(r.output, "lambda"));
        CHECK(contains(r.output, "all checks passed"));
    }
    SUBCASE("critical and qkorder pass") {
        CHECK(run_cli("verify critical").exit_code == 0);
        CHECK(run_cli("verify qkorder").exit_code == 0);
    }
    SUBCASE("unknown suite fails with nonzero exit") {
        CHECK(run_cli("verify bogus").exit_code == 1);
    }
}

TEST_CASE("render-param determinism across runs") {
    const std::string flags = "render-param --m 2 --n 1 --px 32 --budget 300";
    const RunResult a = run_cli(flags + " --out cli_render_a.ppm");
    const RunResult b = run_cli(flags + " --out cli_render_b.ppm");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(contains(a.output, "wrote cli_render_a.ppm"));
    const std::string da = slurp("cli_render_a.ppm");
    CHECK(da == slurp("cli_render_b.ppm"));
    CHECK(da.substr(0, 12) == "P6\n32 32\n255");
    std::remove("cli_render_a.ppm");
    std::remove("cli_render_b.ppm");
}

TEST_CASE("render-param honors RENDER_THREADS") {
    const std::string flags = "render-param --m 2 --n 1 --px 24 --budget 200";
    run_cli(flags + " --out cli_rt_a.ppm");
    const std::string cmd = "RENDER_THREADS=1 " + g_cli_path + " " + flags +
                            " --out cli_rt_b.ppm > /dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(slurp("cli_rt_a.ppm") == slurp("cli_rt_b.ppm"));
    std::remove("cli_rt_a.ppm");
    std::remove("cli_rt_b.ppm");
}

TEST_CASE("orbit subcommand reports the outcome and points") {
    const RunResult r = run_cli("orbit --m 2 --n 1 --t 1 0 --z 1 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "outcome=zero:1"));
    CHECK(contains(r.output, "first_trap_entry=1"));
    CHECK(contains(r.output, "z0=(1,0)"));
}

TEST_CASE("boettcher subcommand") {
    const RunResult r = run_cli("boettcher --m 2 --n 1 --t 0.9 0 --z 0.05 0 --e0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "green="));
    CHECK(contains(r.output, "phi="));
    CHECK(contains(r.output, "functional_residual="));
    CHECK(contains(r.output, "E0="));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("classify --m 2 --n 1 --t 0 0").exit_code == 2);  // t = 0 invalid
    CHECK(run_cli("render-dyn --m 2 --n 1 --t 1 0 --px 0").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("help exits 0 and documents defaults") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "render-param"));
    CHECK(contains(r.output, "verify"));
    const RunResult rc = run_cli("classify --help");
    CHECK(rc.exit_code == 0);
    CHECK(contains(rc.output, "--budget"));
    CHECK(contains(rc.output, "2000"));  // documented default
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    std::vector<char*> pass;
    for (int i = 0; i < argc; ++i) {
        const std::string a = argv[i];
        if (a.rfind("--cli=", 0) == 0)
            g_cli_path = a.substr(6);
        else
            pass.push_back(argv[i]);
    }
    if (g_cli_path.empty()) {
        if (const char* env = std::getenv("TWOCRIT_CLI")) g_cli_path = env;
    }
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "usage: %s --cli=/path/to/twocrit\n", argv[0]);
        return 2;
    }
    ctx.applyCommandLine((int)pass.size(), pass.data());
    return ctx.run();
}
