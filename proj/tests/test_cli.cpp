#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "vwq/partition.hpp"
#include "vwq/series.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

const char* cli_path() {
    const char* p = std::getenv("VWQ_CLI");
    REQUIRE_MESSAGE(p != nullptr, "VWQ_CLI must point at the vwq binary");
    return p;
}

// Run the binary with the given argument string; stderr is discarded.
RunResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + "\"" + cli_path() + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("invariants command") {
    RunResult r = run("invariants");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "g_C=6\np_g=4\nh0K2=10\n");

    RunResult j = run("invariants --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"p_g\": 4") != std::string::npos);
    CHECK(j.out.find("\"g_C\": 6") != std::string::npos);
    CHECK(j.out.find("\"h0K2\": 10") != std::string::npos);
}

TEST_CASE("hurwitz table command") {
    RunResult r = run("hurwitz --max 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("disc,value\n") == 0);
    CHECK(r.out.find("\n0,-1/12\n") != std::string::npos);
    CHECK(r.out.find("\n3,1/3\n") != std::string::npos);
    CHECK(r.out.find("\n4,1/2\n") != std::string::npos);
    CHECK(r.out.find("\n11,1\n") != std::string::npos);
    CHECK(r.out.find("\n12,4/3\n") != std::string::npos);
}

TEST_CASE("theta command emits the canonical forms") {
    RunResult csv = run("theta --n 1 --order 10 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "0,1,1,1\n1,1,-1,1\n4,1,-1,1\n9,1,2,1\n");

    RunResult json = run("theta --n 2 --order 5");
    CHECK(json.exit_code == 0);
    // Byte-identical to the library's canonical emitter (plus final newline).
    CHECK(json.out == vwq::to_canonical_json(vwq::theta_block(2, 5)) + "\n");

    // Repeat runs are byte-stable.
    CHECK(run("theta --n 2 --order 5").out == json.out);

    CHECK(run("theta --n 0 --order 5").exit_code == 2);
}

TEST_CASE("partition command covers every surface") {
    RunResult p2 = run("partition --surface p2 --c1 1 --order 6");
    CHECK(p2.exit_code == 0);
    CHECK(p2.out == vwq::to_canonical_json(vwq::z_vb_p2(1, 6)) + "\n");

    RunResult hat = run("partition --surface p2 --c1 1 --order 8 --hat");
    CHECK(hat.exit_code == 0);
    CHECK(hat.out == vwq::to_canonical_json(vwq::z_hat_p2(1, 8)) + "\n");

    RunResult drop = run("partition --surface p2 --c1 0 --order 8 --drop-divisor-term");
    CHECK(drop.exit_code == 0);
    CHECK(drop.out == vwq::to_canonical_json(vwq::z_vb_p2(0, 8, true)) + "\n");

    RunResult so3 = run("partition --surface p2 --so3 --order 8");
    CHECK(so3.exit_code == 0);
    CHECK(so3.out == vwq::to_canonical_json(vwq::z_so3_p2(8)) + "\n");

    RunResult p122 = run("partition --surface p122 --c1 2 --order 8 --format csv");
    CHECK(p122.exit_code == 0);
    CHECK(p122.out == vwq::to_csv(vwq::z_vb_p122(2, 8)));

    RunResult p222 = run("partition --surface p222 --c1 2 --lambda 1 --order 8");
    CHECK(p222.exit_code == 0);
    CHECK(p222.out == vwq::to_canonical_json(vwq::z_vb_p2(2, 8)) + "\n");

    // Misuse maps onto the domain-error exit code.
    CHECK(run("partition --surface p222 --c1 1 --order 8").exit_code == 2);
    CHECK(run("partition --surface p122 --c1 1 --order 8 --hat").exit_code == 2);
    CHECK(run("partition --surface p2 --c1 0 --lambda 1 --order 8").exit_code == 2);
    CHECK(run("partition --surface nope --order 8").exit_code == 2);
    CHECK(run("partition --order 8").exit_code == 2);  // --surface is required
}

TEST_CASE("verify command exit codes track the reports") {
    RunResult ok = run("verify --identity p122-p2 --c1 0 --order 12");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"pass\": true") != std::string::npos);

    CHECK(run("verify --identity p122-p2 --c1 2 --order 10").exit_code == 2);
    CHECK(run("verify --identity p222-shift --order 10").exit_code == 0);
    CHECK(run("verify --identity so3-assembly --order 10").exit_code == 0);
    CHECK(run("verify --identity monopole-closed-form --genus 2 --order 8").exit_code == 0);
    CHECK(run("verify --identity bogus").exit_code == 2);
}

TEST_CASE("monopole command reports both routes") {
    RunResult r = run("monopole --genus 1 --order 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"identical\": true") != std::string::npos);
    CHECK(r.out.find("\"computed\": {\"denominator\":") != std::string::npos);
    CHECK(r.out.find("\"closed_form\": {\"denominator\":") != std::string::npos);
}

TEST_CASE("toda command") {
    RunResult csv = run("toda --chi 9 --ade 1 --order 4 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "-3,8,1,1\n5,8,8,1\n13,8,45,1\n21,8,201,1\n29,8,779,1\n");

    RunResult empty = run("toda --chi 9 --order 6");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out ==
          vwq::to_canonical_json(vwq::toda_series({9, {}}, 6)) + "\n");

    CHECK(run("toda --order 4").exit_code == 2);          // --chi is required
    CHECK(run("toda --chi 9 --ade 1,x --order 4").exit_code == 2);
}

TEST_CASE("sduality command") {
    RunResult r = run("sduality --tau 0.25,1.3 --tol 1e-6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
    CHECK(r.out.find("\"sign\": -1") != std::string::npos);

    CHECK(run("sduality --tau 0,1 --tol 1e-30").exit_code == 1);
    CHECK(run("sduality --tau 0.3,0.05").exit_code == 2);   // below accuracy floor
    CHECK(run("sduality --tau 0.3,-1").exit_code == 2);     // not in the half plane
    CHECK(run("sduality --tau nonsense").exit_code == 2);
    CHECK(run("sduality --tol -3").exit_code == 2);
}

TEST_CASE("global command behavior") {
    CHECK(run("").exit_code == 2);          // a subcommand is required
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("theta --help").exit_code == 0);

    // Default order obeys the environment override.
    RunResult via_env = run("partition --surface p2 --c1 1 --format csv",
                            "VWQ_DEFAULT_ORDER=7 ");
    RunResult direct = run("partition --surface p2 --c1 1 --order 7 --format csv");
    CHECK(via_env.exit_code == 0);
    CHECK(via_env.out == direct.out);
    CHECK(run("invariants", "VWQ_DEFAULT_ORDER=frog ").exit_code == 2);

    // --out writes the payload to a file instead of stdout.
    std::string path = "/tmp/vwq_cli_test_out.csv";
    std::remove(path.c_str());
    RunResult filed = run("hurwitz --max 8 --out " + path);
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == run("hurwitz --max 8").out);
    std::remove(path.c_str());
}
