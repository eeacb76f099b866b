// Copyright 2026 The ctxconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ctxconc/cli.hpp"
#include "ctxconc/exclusivity_graph.hpp"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.hpp"

using namespace ctxconc;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("ctxconc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(std::vector<std::string> args) {
        args.insert(args.begin(), "ctxconc");
        out_.str("");
        err_.str("");
        return run_cli(args, out_, err_);
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }
    static std::string slurp(const std::string &p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    static nlohmann::json load(const std::string &p) { return nlohmann::json::parse(slurp(p)); }

    fs::path dir_;
    std::ostringstream out_, err_;
};

}  // namespace

TEST_F(CliTest, help_and_usage_errors) {
    EXPECT_EQ(run({"--help"}), kExitOk);
    EXPECT_EQ(run({}), kExitError);
    EXPECT_EQ(run({"frobnicate"}), kExitError);
    EXPECT_EQ(run({"mabk"}), kExitError);
    EXPECT_EQ(run({"mabk", "--n", "4", "--out", path("m")}), kExitError);
    EXPECT_NE(err_.str().find("odd"), std::string::npos);
    EXPECT_EQ(run({"mabk", "--n", "9", "--out", path("m")}), kExitError);
}

TEST_F(CliTest, mabk_three_writes_certificate) {
    ASSERT_EQ(run({"mabk", "--n", "3", "--out", path("m3")}), kExitOk) << err_.str();
    nlohmann::json c = load(path("m3/certificate.json"));
    EXPECT_EQ(c["rank"], 7);
    EXPECT_EQ(c["alpha"]["alpha"], 3);
    EXPECT_TRUE(c["alpha"]["certified"]);
    EXPECT_NEAR(c["theta"]["theta"].get<double>(), 4.0, 1e-6);
    EXPECT_EQ(c["n_edges"], 72);
    EXPECT_EQ(c["status"], "complete");
    EXPECT_EQ(c["config_hash"].get<std::string>().size(), 64u);
    EXPECT_TRUE(c["fixtures_intact"]);
    EXPECT_EQ(c["compressed_rays"].size(), 16u);
    EXPECT_EQ(c["compressed_rays"][0].size(), 7u);
    EXPECT_TRUE(fs::exists(path("m3/family.json")));

    // The written graph feeds alpha and theta.
    EXPECT_EQ(run({"alpha", "--graph", path("m3/graph.json"), "--out", path("a")}), kExitOk);
    EXPECT_EQ(load(path("a/alpha.json"))["result"]["alpha"], 3);
    EXPECT_EQ(run({"theta", "--graph", path("m3/graph.json"), "--out", path("t")}), kExitOk);
    EXPECT_NEAR(load(path("t/theta.json"))["result"]["theta"].get<double>(), 4.0, 1e-6);

    // exclusivity rebuilds the same graph, also as DIMACS.
    EXPECT_EQ(run({"exclusivity", "--family", path("m3/family.json"), "--out", path("g.json")}), kExitOk);
    EXPECT_EQ(load(path("g.json")), load(path("m3/graph.json")));
    EXPECT_EQ(run({"exclusivity", "--family", path("m3/family.json"), "--format", "dimacs", "--out", path("g.col")}),
              kExitOk);
    EXPECT_EQ(run({"alpha", "--graph", path("g.col"), "--out", path("a2")}), kExitOk);
    EXPECT_EQ(load(path("a2/alpha.json"))["result"]["alpha"], 3);
}

TEST_F(CliTest, alpha_budget_exhaustion_is_partial) {
    std::mt19937_64 rng(5);
    {
        std::ofstream f(path("dense.col"));
        write_dimacs(f, ctxconc::testing::random_graph(150, 0.5, rng));
    }
    EXPECT_EQ(run({"alpha", "--graph", path("dense.col"), "--budget", "0", "--out", path("a")}), kExitPartial);
    nlohmann::json r = load(path("a/alpha.json"));
    EXPECT_FALSE(r["result"]["certified"]);
    EXPECT_GE(r["result"]["upper_bound"].get<int>(), r["result"]["alpha"].get<int>());
}

TEST_F(CliTest, theta_builtins) {
    EXPECT_EQ(run({"theta", "--graph", "mobius:12", "--out", path("t")}), kExitOk);
    EXPECT_NEAR(load(path("t/theta.json"))["result"]["theta"].get<double>(), 5.598076211, 1e-6);
    EXPECT_EQ(run({"theta", "--graph", "mobius:x", "--out", path("t")}), kExitError);
    EXPECT_EQ(run({"theta", "--graph", path("missing.json"), "--out", path("t")}), kExitError);
}

TEST_F(CliTest, graphstate) {
    ASSERT_EQ(run({"graphstate", "--graph", "star:3", "--out", path("s")}), kExitOk) << err_.str();
    nlohmann::json r = load(path("s/paradox.json"));
    EXPECT_EQ(r["operators"].size(), 4u);
    EXPECT_FALSE(r["lhv"]["feasible"]);
    EXPECT_EQ(r["event_rank"], 7);
    EXPECT_EQ(r["event_graph"]["alpha"]["alpha"], 3);
    EXPECT_EQ(run({"graphstate", "--graph", "complete:3", "--out", path("k")}), kExitError);
    EXPECT_NE(err_.str().find("error"), std::string::npos);
    EXPECT_EQ(run({"graphstate", "--graph", "path:5", "--out", path("p")}), kExitError);
    std::ofstream(path("g.json")) << R"({"n": 3, "edges": [[0, 1], [0, 2]], "universal": 0})";
    EXPECT_EQ(run({"graphstate", "--graph", path("g.json"), "--out", path("f")}), kExitOk) << err_.str();
}

TEST_F(CliTest, analyze_fixture_is_deterministic) {
    ASSERT_EQ(run({"analyze", "--fixture", "paper", "--groups", "30", "--out", path("a")}), kExitOk) << err_.str();
    ASSERT_EQ(run({"analyze", "--fixture", "paper", "--groups", "30", "--out", path("b")}), kExitOk);
    EXPECT_EQ(slurp(path("a/report.json")), slurp(path("b/report.json")));
    EXPECT_EQ(slurp(path("a/plot.csv")), slurp(path("b/plot.csv")));
    nlohmann::json r = load(path("a/report.json"));
    EXPECT_NEAR(r["witness"]["mu"].get<double>(), 3.82137, 1e-5);
    EXPECT_EQ(r["witness"]["direction"], "symmetrized");
    // The output directory is not part of the configuration.
    EXPECT_EQ(r["config_hash"], load(path("b/report.json"))["config_hash"]);
    ASSERT_EQ(run({"analyze", "--fixture", "paper", "--groups", "30", "--seed", "1", "--out", path("c")}), kExitOk);
    EXPECT_NE(load(path("c/report.json"))["config_hash"], r["config_hash"]);
    // The written bundle can be analyzed again.
    EXPECT_EQ(run({"analyze", "--bundle", path("a/bundle.json"), "--groups", "30", "--out", path("d")}), kExitOk);
    EXPECT_NEAR(load(path("d/report.json"))["witness"]["mu"].get<double>(), 3.82137, 1e-5);
}

TEST_F(CliTest, analyze_source_errors) {
    EXPECT_EQ(run({"analyze", "--out", path("x")}), kExitError);
    EXPECT_EQ(run({"analyze", "--fixture", "other", "--out", path("x")}), kExitError);
    std::ofstream(path("bad.csv")) << "prep_id,meas_id,count_1,count_0\npsi,v0,1,2\npsi,v1,oops,2\n";
    EXPECT_EQ(run({"analyze", "--counts", path("bad.csv"), "--out", path("x")}), kExitError);
    EXPECT_NE(err_.str().find("line 3"), std::string::npos) << err_.str();
    EXPECT_EQ(run({"analyze", "--fixture", "paper", "--direction", "sideways"}), kExitError);
}

TEST_F(CliTest, simulate_then_analyze) {
    std::vector<std::string> sim = {"simulate", "--seed", "4", "--groups", "20", "--out"};
    auto a = sim, b = sim;
    a.push_back(path("s1"));
    b.push_back(path("s2"));
    ASSERT_EQ(run(a), kExitOk) << err_.str();
    ASSERT_EQ(run(b), kExitOk);
    for (const char *f : {"counts.csv", "plan.json", "report.json", "plot.csv"}) {
        EXPECT_EQ(slurp(path(std::string("s1/") + f)), slurp(path(std::string("s2/") + f))) << f;
    }
    nlohmann::json r = load(path("s1/report.json"));
    EXPECT_EQ(load(path("s1/plan.json")).size(), 304u);
    double mu = r["witness"]["mu"].get<double>();
    double se = r["witness"]["stderr"].get<double>();
    EXPECT_LT(std::abs(mu - 4), 4 * se);
    ASSERT_EQ(run({"analyze", "--counts", path("s1/counts.csv"), "--groups", "20", "--out", path("a")}), kExitOk);
    EXPECT_NEAR(load(path("a/report.json"))["witness"]["mu"].get<double>(), mu, 1e-12);

    ASSERT_EQ(run({"simulate", "--analytic", "--groups", "10", "--out", path("an")}), kExitOk);
    EXPECT_NEAR(load(path("an/report.json"))["witness"]["mu"].get<double>(), 4.0, 1e-9);
    EXPECT_EQ(run({"simulate", "--visibility", "1.5", "--out", path("bad")}), kExitError);
}

TEST_F(CliTest, output_directory_from_environment) {
    setenv("CTXCONC_OUT_DIR", path("env").c_str(), 1);
    int rc = run({"theta", "--graph", "cycle:5"});
    unsetenv("CTXCONC_OUT_DIR");
    EXPECT_EQ(rc, kExitOk);
    EXPECT_TRUE(fs::exists(path("env/theta.json")));
}
