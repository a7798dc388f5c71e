#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rbx/model_io.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

// RBX_CLI_PATH and RBX_FIXTURE_DIR are injected by the build system.

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

/* Run the CLI binary with the given argument string, capturing stdout bytes
   and the process exit code.  stderr is discarded (error-path tests only
   assert on the exit code). */
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(RBX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(RBX_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "cli_tmp_" + name;
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
    return path;
}

}  // namespace

TEST_CASE("validate accepts every shipped fixture") {
    CHECK(run_cli("validate \"" + fixture("aff1.json") + "\"").exit_code == 0);
    CHECK(run_cli("validate \"" + fixture("dim2.json") + "\"").exit_code == 0);
    CHECK(run_cli("validate \"" + fixture("action1.json") + "\"").exit_code == 0);
}

TEST_CASE("rb-check verdicts and exit codes") {
    const std::string f = "\"" + fixture("aff1.json") + "\"";

    CliResult ok = run_cli("rb-check " + f + " --operator T0");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("pass") != std::string::npos);

    CliResult zero = run_cli("rb-check " + f + " --operator Z");
    CHECK(zero.exit_code == 0);

    CliResult bad = run_cli("rb-check " + f + " --operator Id");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);

    // Unknown operator name is an input error, not a failed verdict.
    CHECK(run_cli("rb-check " + f + " --operator missing").exit_code == 2);
    // Missing flag altogether is likewise an input error.
    CHECK(run_cli("rb-check " + f).exit_code == 2);
}

TEST_CASE("JSON reports are byte-stable against recorded outputs") {
    const CliResult rb = run_cli(
        "rb-check \"" + fixture("aff1.json") + "\" --operator T0 --json");
    CHECK(rb.exit_code == 0);
    CHECK(rb.out == read_file(fixture("golden_rb_check.json")));

    const CliResult coh = run_cli(
        "cohomology \"" + fixture("aff1.json") +
        "\" --operator T0 --degrees 0:0 --json");
    CHECK(coh.exit_code == 0);
    CHECK(coh.out == read_file(fixture("golden_cohomology.json")));
    CHECK(coh.out.find("\"k\": 0") != std::string::npos);
    CHECK(coh.out.find("\"dim\": 1") != std::string::npos);

    const CliResult kv = run_cli(
        "kv check \"" + fixture("dim2.json") + "\" --tensor Hid --json");
    CHECK(kv.exit_code == 1);
    CHECK(kv.out == read_file(fixture("golden_kv_check.json")));
}

TEST_CASE("cohomology degree handling") {
    const std::string f = "\"" + fixture("aff1.json") + "\"";
    CHECK(run_cli("cohomology " + f + " --operator T0 --degrees 0:2").exit_code == 0);
    CHECK(run_cli("cohomology " + f + " --operator T0 --degrees 2:1").exit_code == 2);
    CHECK(run_cli("cohomology " + f + " --operator T0 --degrees nope").exit_code == 2);
    // A defective operator is rejected before any cohomology is computed.
    CHECK(run_cli("cohomology " + f + " --operator Id --degrees 0:1").exit_code == 1);
}

TEST_CASE("deformation subcommands on a straightenable order-1 series") {
    const std::string f = "\"" + fixture("aff1.json") + "\"";
    CHECK(run_cli("deform check " + f + " --operator T0 --terms D1").exit_code == 0);

    CliResult ob = run_cli("deform obstruction " + f + " --operator T0 --terms D1 --json");
    CHECK(ob.exit_code == 0);
    CHECK(ob.out.find("\"extendable\": true") != std::string::npos);

    CliResult ex = run_cli("deform extend " + f + " --operator T0 --terms D1 --json");
    CHECK(ex.exit_code == 0);
    CHECK(ex.out.find("next_term") != std::string::npos);

    // N1 (e1 -> e0) is not a 1-cocycle for T0, so the series fails.
    CHECK(run_cli("deform check " + f + " --operator T0 --terms N1").exit_code == 1);
}

TEST_CASE("gauge straightens a trivial infinitesimal deformation") {
    const std::string f = "\"" + fixture("aff1.json") + "\"";
    CliResult g = run_cli("gauge " + f + " --operator T0 --series S1 --order 2 --json");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("\"order1_trivial\": true") != std::string::npos);
    CHECK(g.out.find("\"straightened\": true") != std::string::npos);
    CHECK(g.out.find("gauge_vector") != std::string::npos);
}

TEST_CASE("pre-Lie subcommands") {
    const std::string f = "\"" + fixture("dim2.json") + "\"";
    CHECK(run_cli("prelie validate " + f).exit_code == 0);

    CliResult coh = run_cli("prelie cohomology " + f + " --json");
    CHECK(coh.exit_code == 0);
    CHECK(coh.out.find("\"k\": 1") != std::string::npos);
    CHECK(coh.out.find("\"k\": 2") != std::string::npos);
}

TEST_CASE("Koszul-Vinberg subcommands") {
    const std::string f = "\"" + fixture("dim2.json") + "\"";
    CHECK(run_cli("kv check " + f + " --tensor Hgood").exit_code == 0);
    CHECK(run_cli("kv check " + f + " --tensor Hid").exit_code == 1);
    CHECK(run_cli("kv check " + f + " --tensor nope").exit_code == 2);
    CHECK(run_cli("kv cohomology " + f + " --tensor Hgood").exit_code == 0);
    CHECK(run_cli("kv cohomology " + f + " --tensor Hgood --restricted").exit_code == 0);
    CHECK(run_cli("kv obstruction " + f + " --tensor Hgood --terms Hgood").exit_code == 0);
    CHECK(run_cli("kv extend " + f + " --tensor Hgood --terms Hgood").exit_code == 0);
    CHECK(run_cli("hessian-check " + f + " --form B").exit_code == 0);
}

TEST_CASE("action model verification") {
    CHECK(run_cli("action verify \"" + fixture("action1.json") + "\"").exit_code == 0);
    // A pure Lie-algebra model has no action section to verify.
    CHECK(run_cli("action verify \"" + fixture("aff1.json") + "\"").exit_code == 2);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("validate /no/such/file.json").exit_code == 2);

    const std::string malformed = write_temp("malformed.json", "{ not json");
    CHECK(run_cli("validate " + malformed).exit_code == 2);

    const std::string nodim = write_temp(
        "nodim.json", "{\"lie_algebra\": {\"bracket\": []}}\n");
    CHECK(run_cli("validate " + nodim).exit_code == 2);

    const std::string badrat = write_temp(
        "badrat.json",
        "{\"lie_algebra\": {\"dim\": 1, \"bracket\": [[[\"x\"]]]}}\n");
    CHECK(run_cli("validate " + badrat).exit_code == 2);

    // Unknown subcommands are argument-parse errors.
    CHECK(run_cli("frobnicate foo.json").exit_code == 2);

    std::remove(malformed.c_str());
    std::remove(nodim.c_str());
    std::remove(badrat.c_str());
}

TEST_CASE("serialize(parse(file)) round-trips to an identical model") {
    for (const char* name : {"aff1.json", "dim2.json", "action1.json"}) {
        CAPTURE(name);
        const rbx::io::Model first = rbx::io::parse_model(fixture(name));
        const std::string text = rbx::io::serialize_model(first);
        const rbx::io::Model second = rbx::io::parse_model_text(text);
        CHECK(rbx::io::models_equal(first, second));
        // Serialization itself is a fixed point after one pass.
        CHECK(rbx::io::serialize_model(second) == text);
    }
}
