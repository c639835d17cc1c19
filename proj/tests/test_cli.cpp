#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tight/cli.hpp"
#include "tight/report.hpp"

using namespace tight;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "tightcheck");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args)
{
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    REQUIRE(r.code == kExitOk);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("classify examples")
{
    const auto su21 = run_json({"classify", "--algebra", "su21", "--weight", "1,0"});
    CHECK(su21["command"] == "classify");
    CHECK(su21["rows"][0]["tight"] == true);
    CHECK(su21["rows"][0]["holomorphic"] == true);
    CHECK(su21["agreement"] == true);
    CHECK(su21["details"]["replayed"] == true);

    const auto sp4 = run_json({"classify", "--algebra", "sp4", "--weight", "0,2"});
    CHECK(sp4["rows"][0]["tight"] == false);
    CHECK(sp4["rows"][0]["witness"]["kind"] == "even_evaluation");
    CHECK(sp4["rows"][0]["witness"]["subalgebra"] == "a1+a2");
    CHECK(sp4["rows"][0]["witness"]["evaluation"] == "4/1");

    const auto prod = run_json({"classify", "--algebra", "sp4su11", "--weight", "1,0,0"});
    CHECK(prod["rows"][0]["tight"] == true);
    CHECK(prod["rows"][0]["holomorphic"].is_null());
}

TEST_CASE("sweep, pair and branch")
{
    const auto s = run_json({"sweep", "--algebra", "su11", "--max", "20"});
    CHECK(s["rows"].size() == 21);
    CHECK(s["details"]["tight_count"] == 10);

    const auto p = run_json({"pair", "--algebra", "su11", "--weight", "4"});
    CHECK(p["details"]["tight"] == false);
    const auto pp = run_json({"pair", "--algebra", "su11xsu11", "--weight", "1,1"});
    CHECK(pp["details"]["tight"] == false);
    CHECK(pp["details"]["structures"].size() == 2);

    const auto b = run_json({"branch", "--algebra", "sp4", "--weight", "0,1", "--sub", "a1+a2"});
    CHECK(b["details"]["dimension"] == 5);
    CHECK(b["details"]["target_kind"] == "sl2");
    CHECK(b["details"]["even_witness"]["value"] == "2/1");
}

TEST_CASE("verify targets")
{
    const auto bla = run_json({"verify", "lemma-bla", "--p-range", "4:7"});
    const auto& cases = bla["details"]["cases"];
    REQUIRE(cases.size() == 4);
    CHECK(cases[0]["status"] == "reduced");
    CHECK(cases[1]["status"] == "infeasible");
    CHECK(cases[1]["l"] == -2);
    CHECK(cases[3]["n"] == 6);

    const auto k = run_json({"verify", "kahler-lemmas", "--cases", "50"});
    CHECK(k["agreement"] == true);
    CHECK(k["details"]["fixtures"].size() == 3);
}

TEST_CASE("markdown is the default format")
{
    const auto r = run({"classify", "--algebra", "su11", "--weight", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("# tightcheck classify", 0) == 0);
}

TEST_CASE("--out writes the report to a file")
{
    const std::string path = "test_cli_out.json";
    std::remove(path.c_str());
    const auto r = run({"sweep", "--algebra", "su21", "--max", "3", "--format", "json", "--out", path});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(parse_report(text.str()).rows.size() == 10);
    std::remove(path.c_str());
}

TEST_CASE("--timing adds a timing field")
{
    const auto r = run({"classify", "--algebra", "su11", "--weight", "1", "--format", "json", "--timing"});
    CHECK(nlohmann::json::parse(r.out).contains("timing_seconds"));
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"classify", "--algebra", "su11"}).code == kExitUsage);
    CHECK(run({"classify", "--algebra", "g2", "--weight", "1"}).code == kExitUsage);
    CHECK(run({"bogus"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);

    CHECK(run({"classify", "--algebra", "sp4", "--weight", "1"}).code == kExitValidation);
    CHECK(run({"classify", "--algebra", "sp4", "--weight=-1,0"}).code == kExitValidation);
    CHECK(run({"sweep", "--algebra", "sp4", "--max", "0"}).code == kExitValidation);
    CHECK(run({"verify", "lemma-bla"}).code == kExitValidation);
    CHECK(run({"verify", "lemma-bla", "--p-range", "4:4"}).code == kExitValidation);
    CHECK(run({"verify", "lemma-bla", "--p-range", "3:3"}).code == kExitValidation);
    CHECK(run({"verify", "lemma-bla", "--p-range", "7:5"}).code == kExitValidation);

    const auto bad_sub = run({"branch", "--algebra", "sp4", "--weight", "1,0", "--sub", "a1+a2,-a1-a2"});
    CHECK(bad_sub.code == kExitValidation);
    CHECK(bad_sub.err.find("condition") != std::string::npos);
}
