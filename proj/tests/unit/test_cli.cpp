#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = waring::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    auto r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

std::vector<std::string> lines_of(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(std::string const& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
    return out;
}

}  // namespace

TEST(Cli, RankOfRankTwoQuartic) {
    auto j = run_json({"rank", "x*y*(x+y)*(x+2*y)"});
    EXPECT_EQ(j["rank"], 2);
    EXPECT_EQ(j["case"], "Sylvester-d1");
    EXPECT_EQ(j["degree"], 4);
    EXPECT_EQ(j["d1"], 2);
    EXPECT_EQ(j["d2"], 4);
    EXPECT_EQ(j["witness_status"], "found");
}

TEST(Cli, RankCasesAndWitnesses) {
    auto tangential = run_json({"rank", "x^3*y"});
    EXPECT_EQ(tangential["rank"], 4);
    EXPECT_EQ(tangential["case"], "Sylvester-d2");
    auto power = run_json({"rank", "(x+2y)^5"});
    EXPECT_EQ(power["rank"], 1);
    auto golden = run_json({"rank", "coeffs:2:[1, sqrt(5), 1]"});
    EXPECT_EQ(golden["rank"], 2);
}

TEST(Cli, Invariants) {
    auto j = run_json({"invariants", "x*y*(x+y)*(x+2*y)"});
    EXPECT_EQ(j["j"], "1");
    EXPECT_EQ(j["harmonic"], true);
    EXPECT_EQ(j["rank"], 2);
    EXPECT_EQ(j["sylvester_rank"], 2);
    auto r = run({"invariants", "x^2*y^2"});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, ClassifyQuintic) {
    auto j = run_json({"classify-quintic", "--s", "2", "--t", "3"});
    EXPECT_EQ(j["rank"], 3);
    EXPECT_EQ(j["golden"], false);
    auto g = run_json({"classify-quintic", "--s", "1/2+1/2*sqrt(5)", "--t", "3/2+1/2*sqrt(5)"});
    EXPECT_EQ(g["rank"], 2);
    EXPECT_EQ(g["golden"], true);
    auto sp = run_json({"classify-quintic", "--S", "0", "--P", "1"});
    EXPECT_EQ(sp["rank"], 4);
    EXPECT_EQ(run({"classify-quintic", "--s", "2"}).code, 2);
    EXPECT_EQ(run({"classify-quintic", "--s", "2", "--t", "3", "--S", "5"}).code, 2);
    EXPECT_EQ(run({"classify-quintic", "--s", "1", "--t", "3"}).code, 2);
}

TEST(Cli, DeltaPolynomialAndPoint) {
    auto p = run_json({"delta", "--print-polynomial"});
    EXPECT_EQ(p["term_count"], 67);
    EXPECT_EQ(p["terms"].size(), 67u);
    auto d = run_json({"delta", "--S", "0", "--P", "1"});
    EXPECT_EQ(d["delta"], "0");
    EXPECT_EQ(run({"delta"}).code, 2);
}

TEST(Cli, GoldenPairs) {
    auto j = run_json({"golden-pairs"});
    EXPECT_EQ(j["count"], 12);
    for (auto const& pair : j["pairs"]) {
        EXPECT_EQ(pair["rank"], 2);
        EXPECT_EQ(pair["rank2_test"], true);
    }
}

TEST(Cli, TernaryRank) {
    auto j = run_json({"ternary-rank", "x*y*(x+y)*(x+3*y)"});
    EXPECT_EQ(j["ternary_rank"], 9);
    EXPECT_EQ(j["ann_verified"], true);
    EXPECT_EQ(j["ann_generators"].size(), 3u);
}

TEST(Cli, Decompose) {
    auto j = run_json({"decompose", "x^3+y^3", "--probe"});
    EXPECT_EQ(j["terms"].size(), 2u);
    EXPECT_LT(j["residual"].get<double>(), 1e-8);
    EXPECT_EQ(j["probe"]["fits"], true);
}

TEST(Cli, DemoCombinatorics) {
    auto r = run({"demo-combinatorics", "--degree", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "label,parameters,d1,d2,ternary_rank,lattice,ann_verified");
    EXPECT_EQ(split(lines[1])[4], "10");
    EXPECT_EQ(split(lines[2])[4], "12");
    EXPECT_EQ(split(lines[1])[5], split(lines[2])[5]);
    auto j = run_json({"demo-combinatorics", "--degree", "4", "--format", "json"});
    EXPECT_EQ(j["rows"][0]["ternary_rank"], 8);
    EXPECT_EQ(j["rows"][1]["ternary_rank"], 9);
    EXPECT_EQ(run({"demo-combinatorics", "--degree", "6"}).code, 2);
}

TEST(Cli, QuarticSweep) {
    auto r = run({"sweep", "--degree", "4", "--grid", "t=-3..3 step 1/4"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 1u + 25u - 2u);
    EXPECT_EQ(lines[0], "t,S,T,j,harmonic,j_rank,rank");
    std::vector<std::string> rank_two;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto cells = split(lines[i]);
        ASSERT_EQ(cells.size(), 7u);
        EXPECT_EQ(cells[5], cells[6]) << lines[i];
        if (cells[6] == "2") rank_two.push_back(cells[0]);
        else EXPECT_EQ(cells[6], "3") << lines[i];
    }
    EXPECT_EQ(rank_two, (std::vector<std::string>{"-1", "1/2", "2"}));
    auto skipped = lines_of(r.err);
    ASSERT_EQ(skipped.size(), 2u);
    EXPECT_EQ(skipped[0].rfind("skipped t=0", 0), 0u);
    EXPECT_EQ(skipped[1].rfind("skipped t=1", 0), 0u);
}

TEST(Cli, QuinticSweep) {
    auto r = run({"sweep", "--degree", "5", "--grid", "s=2..3 step 1", "--grid", "t=3..4 step 1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto lines = lines_of(r.out);
    EXPECT_EQ(lines[0], "s,t,S,P,golden,delta,rank");
    // (3, 3) repeats a root.
    EXPECT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines_of(r.err).size(), 1u);
    auto sp = run({"sweep", "--degree", "5", "--grid", "S=0..1 step 1;P=1..2 step 1"});
    ASSERT_EQ(sp.code, 0) << sp.err;
    EXPECT_EQ(lines_of(sp.out)[0], "S,P,golden,delta,rank");
}

TEST(Cli, SweepIsDeterministic) {
    std::vector<std::string> args{"sweep", "--degree", "5", "--grid", "s=-2..2 step 1/2", "--grid", "t=2..4 step 1/2"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
}

TEST(Cli, SweepWritesFile) {
    auto path = (std::filesystem::temp_directory_path() / "waring_cli_sweep_test.csv").string();
    auto r = run({"sweep", "--degree", "4", "--grid", "t=2..3 step 1", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("wrote 2 rows"), std::string::npos);
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    EXPECT_EQ(lines_of(buffer.str()).size(), 3u);
    std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"rank", "x^2+y"}).code, 2);
    EXPECT_EQ(run({"rank", "x^2+z^2"}).code, 2);
    EXPECT_EQ(run({"rank"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"sweep", "--degree", "4", "--grid", "t=0..1"}).code, 2);
    EXPECT_EQ(run({"sweep", "--degree", "4", "--grid", "s=0..1 step 1"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    auto bad = run({"rank", "x^2+z^2"});
    EXPECT_NE(bad.err.find("position"), std::string::npos);
}
