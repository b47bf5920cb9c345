#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "limdens/manifest.hpp"
#include "limdens/variety.hpp"

using namespace limdens;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("classify subcommand") {
    RunResult r = run({"classify", "--family", "unary", "--identity", "f^3(a)=f^7(a)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"variant\": \"RhoShape\"") != std::string::npos);
    CHECK(r.out.find("\"chain\": 3") != std::string::npos);
    CHECK(r.out.find("\"cycle\": 4") != std::string::npos);

    r = run({"classify", "--family", "bijective", "--identity", "S^2(a)=a"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"variant\": \"Cycle\"") != std::string::npos);
    CHECK(r.out.find("\"size\": 2") != std::string::npos);

    r = run({"classify", "--family", "abelian", "--relator", "a a a"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"variant\": \"CyclicGroup\"") != std::string::npos);

    r = run({"classify", "--family", "two-id-bijective", "--identity", "S^4(a)=a", "--identity",
             "S^6(a)=a"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"size\": 2") != std::string::npos);
}

TEST_CASE("enumerate subcommand") {
    RunResult r = run({"enumerate", "--family", "bijective", "--length", "2", "--count-only"});
    CHECK(r.code == 0);
    CHECK(r.out == "count 4\n");
    r = run({"enumerate", "--family", "unary", "--length", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("f^3(a) = a") != std::string::npos);
    CHECK(r.out.find("count 4") != std::string::npos);
}

TEST_CASE("density subcommand") {
    RunResult r = run({"density", "--family", "abelian", "--sentence", "SzBeta p=3 n=0 k=1",
                       "--smax", "200", "--strategy", "aggregate"});
    CHECK(r.code == 0);
    // the last row of the CSV is close to 1/3
    size_t pos = r.out.rfind("\n200,");
    REQUIRE(pos != std::string::npos);
    std::string row = r.out.substr(pos + 1, r.out.find('\n', pos + 1) - pos - 1);
    CHECK(row.substr(row.rfind(',') + 1, 7) == "0.33333");

    r = run({"density", "--family", "bijective", "--sentence", "BijAlpha n=1 k=1", "--smax", "80"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"even_value\"") != std::string::npos);
}

TEST_CASE("two-identity density reports the oscillation") {
    RunResult r = run({"density", "--family", "two-id-bijective", "--sentence", "OneCycle",
                       "--smax", "300", "--mode", "ordered-with-rep"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"oscillation\": true") != std::string::npos);
    CHECK(r.out.find("even_reference") != std::string::npos);
}

TEST_CASE("walk subcommand") {
    RunResult r = run({"walk", "--n", "5", "--support", "0:1/2,1:1/4,-1:1/4", "--kmax", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("k,max_deviation,tv_distance\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12);
}

TEST_CASE("group subcommand") {
    RunResult r = run({"group", "--family", "bijective"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"rank\": 1") != std::string::npos);
    CHECK(r.out.find("\"S\": 1") != std::string::npos);
    CHECK(r.out.find("\"S^-1\": -1") != std::string::npos);
    CHECK(r.out.find("\"e0\": 1") != std::string::npos);
}

TEST_CASE("gaifman subcommand") {
    RunResult r = run({"gaifman", "--family", "bijective", "--identity", "S^2(a)=a", "--r", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ball_size\": 2") != std::string::npos);
    CHECK(r.out.find("\"code\": \"") != std::string::npos);
    // the Z-chain case goes through the symbolic ball
    r = run({"gaifman", "--family", "bijective", "--identity", "S(S^-1(a))=a", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ball_size\": 5") != std::string::npos);
}

TEST_CASE("deterministic outputs and manifests") {
    auto dir = std::filesystem::temp_directory_path() / "limdens_cli_test";
    std::filesystem::create_directories(dir);
    auto out1 = dir / "series1.csv";
    auto out2 = dir / "series2.csv";
    std::vector<std::string> base = {"density", "--family", "bijective", "--sentence",
                                     "BijAlpha n=2 k=1", "--smax", "40", "--strategy", "aggregate"};
    std::vector<std::string> a1 = base, a2 = base;
    a1.insert(a1.end(), {"--out", out1.string()});
    a2.insert(a2.end(), {"--out", out2.string()});
    CHECK(run(a1).code == 0);
    CHECK(run(a2).code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(!slurp(out1).empty());
    std::string man = slurp(out1.string() + ".manifest.json");
    CHECK(man.find("\"command\": \"density\"") != std::string::npos);
    CHECK(man.find("\"sentence\": \"BijAlpha n=2 k=1\"") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes") {
    CHECK(run({"classify", "--family", "nonsense", "--identity", "a=a"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"classify", "--family", "bijective"}).code == 2);  // missing identity
    CHECK(run({"verify", "--only", "mod2"}).code == 0);
    CHECK(run({"verify", "--only", "constants-like"}).code == 4);  // the documented red criterion
    RunResult r = run({"classify", "--family", "bijective", "--identity", "S^100(a)=a", "--budget",
                       "10", "--dot", "/dev/null"});
    CHECK(r.code == 3);  // materialization over budget
}

TEST_CASE("variety spec file round trip through the CLI") {
    auto dir = std::filesystem::temp_directory_path() / "limdens_cli_spec";
    std::filesystem::create_directories(dir);
    auto spec_path = dir / "fg.json";
    {
        std::ofstream f(spec_path);
        f << VarietySpec::inverse_pair().to_json_string();
    }
    RunResult r = run({"group", "--spec", spec_path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"rank\": 1") != std::string::npos);
    CHECK(r.out.find("\"f\": 1") != std::string::npos);
    r = run({"classify", "--family", "genbij", "--spec", spec_path.string(), "--identity",
             "f(f(a)) = a"});
    CHECK(r.code == 0);
    CHECK(r.out.find("LatticeQuotient") != std::string::npos);
    std::filesystem::remove_all(dir);
}
