#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "maxcert/instance.hpp"
#include "maxcert/instance_io.hpp"
#include "testutil.hpp"

// Drives the installed binary exactly as a user would: through the shell,
// checking exit codes, stdout bytes and stderr text.

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace maxcert;

namespace {

struct CmdResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "maxcert_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

CmdResult run(const std::string& args) {
    static int counter = 0;
    fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(MAXCERT_CLI_PATH) + " " + args + " > \"" + out.string() +
                      "\" 2> \"" + err.string() + "\"";
    int raw = std::system(cmd.c_str());
    int code = raw == -1 ? -1 : WEXITSTATUS(raw);
    return {code, slurp(out), slurp(err)};
}

std::string fixture(const char* name) {
    return std::string("\"") + FIXTURES_DIR + "/" + name + "\"";
}

}  // namespace

TEST_CASE("solving the blocked pair prints the balanced witness, byte for byte") {
    CmdResult r = run("solve --input " + fixture("counterexample.json"));
    CHECK(r.code == 1);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "{\n"
          "  \"status\": \"infeasible\",\n"
          "  \"witness\": {\n"
          "    \"kind\": \"minimax\",\n"
          "    \"t\": [\n"
          "      \"1/2\",\n"
          "      \"1/2\"\n"
          "    ],\n"
          "    \"value\": \"-1/2\"\n"
          "  }\n"
          "}\n");
    // a second run is bit-identical
    CmdResult again = run("solve --input " + fixture("counterexample.json"));
    CHECK(again.out == r.out);
    CHECK(again.code == 1);
}

TEST_CASE("the three solve methods agree on the chain fixture") {
    for (const char* method : {"lp", "recursive", "two"}) {
        CmdResult r = run("solve --input " + fixture("max3.json") + " --method " + method);
        CAPTURE(method);
        CHECK(r.code == 0);
        json doc = json::parse(r.out);
        CHECK(doc["status"] == "feasible");
        CHECK(doc["lambda"] == json::array({"0", "1"}));
        CHECK(doc["margin"] == "0");
    }
}

TEST_CASE("the human rendering of a certificate is a short sentence block") {
    CmdResult r = run("solve --input " + fixture("max3.json") + " --human");
    CHECK(r.code == 0);
    CHECK(r.out == "status: feasible\nlambda: (0, 1)\nmargin: 0\n");
}

TEST_CASE("an unknown method is rejected by the option parser") {
    CmdResult r = run("solve --input " + fixture("max3.json") + " --method newton");
    CHECK(r.code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("the two-function method refuses larger families") {
    CmdResult r = run("solve --input " + fixture("zmod.json") + " --method two");
    CHECK(r.code == 2);
    CHECK(r.err == "error: the two-function method needs exactly 2 functions, got 3\n");
}

TEST_CASE("checking a convex family succeeds in both renderings") {
    CmdResult human = run("check --input " + fixture("zmod.json") + " --human");
    CHECK(human.code == 0);
    CHECK(human.out == "f1: convex\nf2: convex\nf3: convex\nall functions convex\n");

    CmdResult r = run("check --input " + fixture("zmod.json"));
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["all_convex"] == true);
    REQUIRE(doc["functions"].size() == 3);
    CHECK(doc["functions"][0]["name"] == "f1");
    CHECK(doc["functions"][0]["convex"] == true);
    CHECK(doc["functions"][0]["violations"].empty());
}

TEST_CASE("checking a family with a violation exits nonzero and lists the pairs") {
    fs::path bad = scratch_dir() / "bad_check.json";
    Instance inst(Magma(testutil::max_table(3)),
                  ConvexityParams(Rational(1, 2), Rational(1, 2)),
                  {testutil::fn("up", {0, 1, 2}), testutil::fn("down", {2, 1, 0})});
    save_instance(inst, bad.string());

    CmdResult r = run("check --input \"" + bad.string() + "\"");
    CHECK(r.code == 1);
    json doc = json::parse(r.out);
    CHECK(doc["all_convex"] == false);
    CHECK(doc["functions"][0]["convex"] == false);
    const auto& v = doc["functions"][0]["violations"][0];
    CHECK(v["x"] == 0);
    CHECK(v["y"] == 1);
    CHECK(v["lhs"] == "1");
    CHECK(v["rhs"] == "1/2");
    CHECK(doc["functions"][1]["convex"] == true);
}

TEST_CASE("diagnose reports the tuple, the subset and the per-element constraints") {
    CmdResult r = run("diagnose --input " + fixture("counterexample.json"));
    CHECK(r.code == 1);
    json doc = json::parse(r.out);
    CHECK(doc["nf"]["ok"] == false);
    CHECK(doc["nf"]["tuple"] == json::array({0, 1}));
    CHECK(doc["nf"]["t"] == json::array({"1/2", "1/2"}));
    CHECK(doc["nf"]["value"] == "-1/2");
    CHECK(doc["helly"]["ok"] == false);
    CHECK(doc["helly"]["subset"] == json::array({0, 1}));
    REQUIRE(doc["polytopes"].size() == 2);
    CHECK(doc["polytopes"][0]["element"] == 0);
    CHECK(doc["polytopes"][0]["coeffs"] == json::array({"0", "-1"}));
    CHECK(doc["polytopes"][0]["empty"] == false);

    CmdResult ok = run("diagnose --input " + fixture("zmod.json"));
    CHECK(ok.code == 0);
    json okdoc = json::parse(ok.out);
    CHECK(okdoc["nf"]["ok"] == true);
    CHECK(okdoc["helly"]["ok"] == true);
}

TEST_CASE("term synthesis reproduces the six ninth-powers answer") {
    CmdResult r = run("opcalc synth --p 1 --q 2 --lo 2/5 --hi 1/2");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["a"] == "262144");
    CHECK(doc["b"] == "269297");
    CHECK(doc["ratio"] == "262144/531441");
    CHECK(doc["depth"] == 8);
}

TEST_CASE("the depth guard surfaces as a clean error") {
    CmdResult r = run("opcalc synth --p 1 --q 1 --lo 1/7 --hi 1/7 --depth-guard 16");
    CHECK(r.code == 2);
    CHECK(r.err ==
          "error: ratio synthesis for [1/7, 1/7] exceeded depth guard 16\n");
}

TEST_CASE("term evaluation prints the exact coefficients") {
    CmdResult r = run("opcalc eval --term \"compose(swap(base),base)\" --p 2 --q 3");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\n"
          "  \"term\": \"compose(swap(base),base)\",\n"
          "  \"a\": \"6\",\n"
          "  \"b\": \"19\",\n"
          "  \"ratio\": \"6/25\",\n"
          "  \"depth\": 3\n"
          "}\n");
}

TEST_CASE("realizing a composite on the cyclic five table gives the shifted sums") {
    CmdResult r = run("opcalc realize --term \"compose(base,base)\" --input " +
                      fixture("zmod.json"));
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["a"] == "1");
    CHECK(doc["b"] == "3");
    CHECK(doc["ratio"] == "1/4");
    json expected = json::array();
    for (int x = 0; x < 5; ++x) {
        json row = json::array();
        for (int y = 0; y < 5; ++y) row.push_back((x + 3 * y) % 5);
        expected.push_back(row);
    }
    CHECK(doc["table"] == expected);
}

TEST_CASE("a malformed term names its offset on stderr") {
    CmdResult r = run("opcalc eval --term \"swap(base\" --p 1 --q 1");
    CHECK(r.code == 2);
    CHECK(r.err == "error: term \"swap(base\" at offset 9: expected ')'\n");
}

TEST_CASE("multipliers at the chain candidate, forward and verified") {
    CmdResult fwd = run("kkt --input " + fixture("kkt3.json") + " --x0 2");
    CHECK(fwd.code == 0);
    json doc = json::parse(fwd.out);
    CHECK(doc["lambda"] == json::array({"1", "0"}));
    CHECK(doc["transversality_products"] == json::array({"0"}));
    CHECK(doc["el_margin"] == "0");
    CHECK(doc["minimizers"] == json::array({2}));

    CmdResult ver = run("kkt --input " + fixture("kkt3.json") + " --x0 2 --verify 1,0");
    CHECK(ver.code == 0);
    json vdoc = json::parse(ver.out);
    CHECK(vdoc["verified"] == true);
    CHECK(vdoc["el_margin"] == "0");

    CmdResult degenerate = run("kkt --input " + fixture("kkt3.json") + " --x0 2 --verify 0,1");
    CHECK(degenerate.code == 2);
    CHECK(degenerate.err ==
          "error: lambda_0 = 0: degenerate multiplier, the converse is inapplicable\n");
}

TEST_CASE("an objective that misses zero is refused unless shifted") {
    fs::path shifted = scratch_dir() / "shifted.json";
    Instance inst(Magma(testutil::max_table(3)),
                  ConvexityParams(Rational(1, 2), Rational(1, 2)),
                  {testutil::fn("f0", {3, 2, 1}), testutil::fn("c1", {3, 1, 0})});
    save_instance(inst, shifted.string());

    CmdResult refused = run("kkt --input \"" + shifted.string() + "\" --x0 2");
    CHECK(refused.code == 2);
    CHECK(refused.err == "error: objective value at the candidate is 1, not 0\n");

    CmdResult ok = run("kkt --input \"" + shifted.string() + "\" --x0 2 --shift-objective");
    CHECK(ok.code == 0);
    json doc = json::parse(ok.out);
    CHECK(doc["lambda"] == json::array({"1", "0"}));
    CHECK(doc["minimizers"] == json::array({2}));
}

TEST_CASE("the objective can be chosen by name") {
    CmdResult r = run("kkt --input " + fixture("kkt3.json") + " --objective f0 --x0 2");
    CHECK(r.code == 0);
    CmdResult missing = run("kkt --input " + fixture("kkt3.json") + " --objective nope --x0 2");
    CHECK(missing.code == 2);
    CHECK(missing.err.find("nope") != std::string::npos);
}

TEST_CASE("generation is reproducible and self-consistent") {
    fs::path dir1 = scratch_dir() / "gen1";
    fs::path dir2 = scratch_dir() / "gen2";
    std::string common =
        "gen --kind cyclic-addition --m 5 --p 1 --q 1 --strategy rejection --seed 42 --count 3 "
        "--n-functions 2 --out-dir ";
    CmdResult r1 = run(common + "\"" + dir1.string() + "\"");
    CmdResult r2 = run(common + "\"" + dir2.string() + "\"");
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    json doc = json::parse(r1.out);
    CHECK(doc["written"] == 3);
    REQUIRE(doc["files"].size() == 3);

    for (int i = 0; i < 3; ++i) {
        fs::path f1 = dir1 / ("instance_00" + std::to_string(i) + ".json");
        fs::path f2 = dir2 / ("instance_00" + std::to_string(i) + ".json");
        REQUIRE(fs::exists(f1));
        CHECK(slurp(f1) == slurp(f2));
        CmdResult chk = run("check --input \"" + f1.string() + "\"");
        CHECK(chk.code == 0);
    }
}

TEST_CASE("reports can be sent to a file instead of stdout") {
    fs::path outfile = scratch_dir() / "report.json";
    CmdResult direct = run("solve --input " + fixture("max3.json"));
    CmdResult filed =
        run("solve --input " + fixture("max3.json") + " --output \"" + outfile.string() + "\"");
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(outfile) == direct.out);
}

TEST_CASE("bad inputs and bad usage exit with two") {
    CmdResult missing = run("solve --input /nonexistent/instance.json");
    CHECK(missing.code == 2);
    CHECK(missing.err.find("error: ") == 0);
    CHECK(missing.err.find("cannot open file") != std::string::npos);

    fs::path broken = scratch_dir() / "broken.json";
    {
        std::ofstream out(broken);
        out << "{\"m\": 1}";
    }
    CmdResult malformed = run("solve --input \"" + broken.string() + "\"");
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("error: ") == 0);

    CHECK(run("frobnicate").code == 2);
    CHECK(run("solve").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("solve --help").code == 0);
}
