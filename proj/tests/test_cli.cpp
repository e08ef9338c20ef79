#include <doctest.h>

#include <nlohmann/json.hpp>

#include "quadnorm/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

using u64 = std::uint64_t;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<const char*> args) {
    args.insert(args.begin(), "quadnorm");
    std::ostringstream out, err;
    const int code =
        quadnorm::cli::run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("unit rendering") {
    auto r = run_cli({"unit", "51"});
    CHECK(r.code == 0);
    CHECK(r.out == "50 + 7*sqrt(51), N=1\n");
    r = run_cli({"unit", "5"});
    CHECK(r.out == "(1 + 1*sqrt(5))/2, N=-1\n");
    r = run_cli({"--format", "json", "unit", "51"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["u"] == "100");
    CHECK(j["v"] == "14");
    CHECK(j["norm"] == 1);
}

TEST_CASE("criterion json round-trips S") {
    for (const char* m : {"10", "34", "205", "5", "2", "146"}) {
        auto r = run_cli({"criterion", m, "--json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        const u64 M = j["M"], mm = j["m"], mp = j["mp"];
        int S;
        if (M % 2 == 1)
            S = (mm == 1 && mp == 1) ? -1 : 1;
        else
            S = (mm == 2 && mp == 2) ? -1 : 1;
        CHECK(S == j["S"]);
    }
    auto r = run_cli({"criterion", "34", "--json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["S"] == 1);
    CHECK(j["m"] == 2);
    CHECK(j["mp"] == 17);
}

TEST_CASE("invalid inputs exit 2") {
    CHECK(run_cli({"criterion", "12"}).code == 2);
    CHECK(run_cli({"unit", "1"}).code == 2);
    CHECK(run_cli({"q2", "5"}).code == 2);
    CHECK(run_cli({"frobnicate", "5"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"survey", "partial", "--min", "7", "--max", "3"}).code == 2);
}

TEST_CASE("criterion text uses the survey line format") {
    auto r = run_cli({"criterion", "34"});
    CHECK(r.out.find("D=136 M=34 relations: 2,17, S=1") == 0);
    r = run_cli({"criterion", "2"});
    CHECK(r.out.find("D=8 M=2 relations:  , , S=-1, m=mp=2") == 0);
}

TEST_CASE("lattice output shape") {
    auto r = run_cli({"lattice", "34"});
    CHECK(r.out == "M=[2,17]\nL=[0,1]\nL=[1,0]\nL=[1,1]\n");
    r = run_cli({"--format", "csv", "lattice", "34"});
    CHECK(r.out == "2,17\n0,1\n1,0\n1,1\n");
}

TEST_CASE("q2 and relations") {
    auto r = run_cli({"q2", "30"});
    CHECK(r.code == 0);
    CHECK(r.out.find("non principal") != std::string::npos);
    r = run_cli({"relations", "34", "--generators"});
    CHECK(r.out.find("m=2, n=17") != std::string::npos);
    CHECK(r.out.find("alpha = 6 + 1*sqrt(34)") != std::string::npos);
    r = run_cli({"relations", "15"});
    CHECK(r.out.find("(5, 3)") != std::string::npos);
    CHECK(r.out.find("q2 non principal") != std::string::npos);
}

TEST_CASE("survey csv schemas are byte-exact") {
    auto r = run_cli({"--format", "csv", "survey", "partial", "--min", "2", "--max", "100"});
    CHECK(r.out == "bM,BM,CM,C22,C2p,Cm2,Cmp,CC11,CCmp\n2,100,20,6,1,0,0,13,0\n");
    r = run_cli({"--format", "csv", "survey", "parity", "--min", "0", "--max", "10"});
    CHECK(r.out == "bM,BM,CM,CP,CI,rho\n0,10,2,0,2,undefined\n");
    r = run_cli({"--format", "csv", "survey", "main", "--bound", "45"});
    CHECK(r.out.find("D,M,m,mp,S\n") == 0);
    CHECK(r.out.find("8,2,2,2,-1\n") != std::string::npos);
    r = run_cli({"--format", "csv", "survey", "fop", "--bound", "3"});
    CHECK(r.out == "M,sign,t\n2,-1,2\n5,-1,1\n13,-1,3\n");
}

TEST_CASE("survey text summaries") {
    auto r = run_cli({"survey", "main", "--bound", "250", "--records"});
    CHECK(r.out.find("D=8 M=2 relations:  , , S=-1, m=mp=2\n") == 0);
    CHECK(r.out.find("D=136 M=34 relations: 2,17, S=1\n") != std::string::npos);
    CHECK(r.out.find("CD=35 Cm=32 Cp=3 C22=4\n") != std::string::npos);
    r = run_cli({"survey", "fop", "--bound", "100"});
    CHECK(r.out.find("#VM=") == 0);
}

TEST_CASE("constants display") {
    auto r = run_cli({"constants"});
    CHECK(r.out.find("0.554363041753") != std::string::npos);
    CHECK(r.out.find("0.580577558205") != std::string::npos);
    CHECK(r.out.find("0.464592270895") != std::string::npos);
}

TEST_CASE("--out writes the payload to a file") {
    const std::string path = "cli_out_test.csv";
    auto r = run_cli({"--format", "csv", "--out", path.c_str(), "survey", "fop", "--bound", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == "M,sign,t\n2,-1,2\n5,-1,1\n13,-1,3\n");
    std::remove(path.c_str());
}

}  // TEST_SUITE
