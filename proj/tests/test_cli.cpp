#include "sullivan/commands.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace sullivan;
using json = nlohmann::ordered_json;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const std::string kFlagRing =
    "dim = 6\n"
    "generator x 2\n"
    "generator y 2\n"
    "relation x^2 + x*y + y^2\n"
    "relation x^3\n";

const std::string kCp3Ring =
    "dim = 6\n"
    "generator x 2\n"
    "relation x^4\n";

}  // namespace

TEST_CASE("classify subcommand on the flag-type ring") {
    std::string path = write_temp("flag.ring", kFlagRing);
    auto res = run_command({"classify", path, "--dim", "6"});
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["result"]["verdict"] == "NotGeometricallyFormal_b2_2");
    CHECK(res.document["result"]["b2"] == 2);
    CHECK(res.document["result"].contains("normalization"));
    CHECK(res.document["result"]["normalization"]["epsilon"] == 1);
    std::remove(path.c_str());
}

TEST_CASE("classify dim 5") {
    std::string path = write_temp("s2s3.ring",
                                  "dim = 5\ngenerator x 2\ngenerator z 3\nrelation x^2\n");
    auto res = run_command({"classify", path, "--dim", "5"});
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["result"]["verdict"] == "ProductS2S3");
    std::remove(path.c_str());
}

TEST_CASE("model and ranks subcommands") {
    std::string path = write_temp("cp3.ring", kCp3Ring);
    auto res = run_command({"model", path, "--max-degree", "8"});
    REQUIRE(res.exit_code == 0);
    auto gens = res.document["result"]["generators"];
    REQUIRE(gens.size() == 2);
    CHECK(gens[0]["degree"] == 2);
    CHECK(gens[1]["degree"] == 7);
    CHECK(gens[1]["differential"] == "u2_1^4");
    CHECK(res.document["result"]["ranks"]["2"] == 1);
    CHECK(res.document["result"]["ranks"]["7"] == 1);

    auto ranks_only = run_command({"ranks", path, "--max-degree", "8"});
    REQUIRE(ranks_only.exit_code == 0);
    CHECK_FALSE(ranks_only.document["result"].contains("generators"));
    std::remove(path.c_str());
}

TEST_CASE("elliptic subcommand") {
    auto res = run_command({"elliptic", "--dim", "6", "--ranks", "3,3"});
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["result"]["elliptic"] == true);
    CHECK(res.document["result"]["even_weighted_sum"] == 6);
    CHECK(res.document["result"]["odd_weighted_sum"] == 9);

    auto bad = run_command({"elliptic", "--dim", "5", "--ranks", "2,5"});
    CHECK(bad.document["result"]["elliptic"] == false);
}

TEST_CASE("duality subcommand") {
    std::string path = write_temp("cp3b.ring", kCp3Ring);
    auto res = run_command({"duality", path, "--dim", "6"});
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["result"]["poincare_duality"] == true);
    std::remove(path.c_str());
}

TEST_CASE("biquotient subcommands") {
    auto res = run_command({"biquotient", "--matrix", "1,0,0,5,1,0,7,-3,1"});
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["result"]["free"] == true);

    auto fam = run_command({"biquotient", "--family3", "0,1,2", "--obstruction"});
    REQUIRE(fam.exit_code == 0);
    CHECK(fam.document["result"]["obstruction"]["verdict"] == "Obstructed");
    CHECK(fam.document["result"]["obstruction"]["coefficient"] == "1");

    auto usage = run_command({"biquotient"});
    CHECK(usage.exit_code == 1);
}

TEST_CASE("borel subcommand") {
    std::string path = write_temp("cp3c.ring", kCp3Ring);
    auto res = run_command({"borel", path});
    REQUIRE(res.exit_code == 0);
    CHECK(res.document["result"]["regular"] == true);
    std::remove(path.c_str());
}

TEST_CASE("exit codes follow the error contract") {
    // parse errors: 1
    std::string bad = write_temp("bad.ring", "generator x 2\nrelation x^2 + x\n");
    auto res1 = run_command({"classify", bad, "--dim", "6"});
    CHECK(res1.exit_code == 1);
    CHECK(res1.document["error"]["name"] == "InhomogeneousRelation");
    CHECK(std::string(res1.document["error"]["message"]).find("line 2") != std::string::npos);
    std::remove(bad.c_str());

    // missing file: 1
    auto res2 = run_command({"classify", "no_such_file.ring", "--dim", "6"});
    CHECK(res2.exit_code == 1);

    // precondition violations: 2
    std::string cp2 = write_temp("cp2.ring", "generator x 2\nrelation x^3\n");
    auto res3 = run_command({"classify", cp2, "--dim", "6"});
    CHECK(res3.exit_code == 2);
    CHECK(res3.document["error"]["name"] == "DualityViolation");

    auto res4 = run_command({"borel", write_temp("odd.ring", "generator u 3\n")});
    CHECK(res4.exit_code == 2);
    CHECK(res4.document["error"]["name"] == "OddGenerator");
    std::remove("cli_test_odd.ring");
    std::remove(cp2.c_str());

    // usage errors: 1
    CHECK(run_command({"classify"}).exit_code == 1);
    CHECK(run_command({"nonsense"}).exit_code == 1);
    CHECK(run_command({}).exit_code == 1);
}

TEST_CASE("documents are deterministic") {
    std::string path = write_temp("det.ring", kFlagRing);
    auto a = run_command({"classify", path, "--dim", "6"});
    auto b = run_command({"classify", path, "--dim", "6"});
    CHECK(a.document.dump(2) == b.document.dump(2));
    CHECK(a.document["input_digest"] == b.document["input_digest"]);
    std::remove(path.c_str());
}

TEST_CASE("the installed binary runs end to end") {
#ifdef SULLIVAN_CLI_BIN
    std::string cmd = std::string(SULLIVAN_CLI_BIN) +
                      " biquotient --family3 0,1,2 --obstruction > cli_out.json";
    int rc = std::system(cmd.c_str());
    CHECK(rc == 0);
    std::ifstream in("cli_out.json");
    json doc = json::parse(in);
    CHECK(doc["result"]["obstruction"]["verdict"] == "Obstructed");
    std::remove("cli_out.json");

    int rc_bad = std::system((std::string(SULLIVAN_CLI_BIN) +
                              " elliptic --dim x --ranks 1 > /dev/null 2>&1")
                                 .c_str());
    CHECK(WEXITSTATUS(rc_bad) == 1);
#endif
}
