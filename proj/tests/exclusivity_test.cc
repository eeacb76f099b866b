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

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "ctxconc/exclusivity_graph.hpp"
#include "ctxconc/fixtures.hpp"
#include "ctxconc/independence.hpp"
#include "ctxconc/mabk.hpp"
#include "ctxconc/nchv.hpp"
#include "ctxconc/sdp.hpp"
#include "ctxconc/theta.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace ctxconc;
using ctxconc::testing::brute_force_alpha;
using ctxconc::testing::random_graph;

namespace {

const std::vector<std::vector<int>> kContexts = {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}};

// Product eigenrays are orthogonal iff some qubit carries the same letter with opposite signs.
bool labels_exclusive(const std::string &a, const std::string &b) {
    for (size_t q = 0; q + 1 < a.size(); q += 2) {
        if (a[q + 1] == b[q + 1] && a[q] != b[q]) {
            return true;
        }
    }
    return false;
}

void expect_feasible_primal(const ExclusivityGraph &g, const ThetaCertificate &t) {
    const Eigen::MatrixXd &x = t.primal_psd;
    double worst = 0;
    for (auto [i, j] : g.edges()) {
        worst = std::max(worst, std::abs(x(i, j)));
    }
    EXPECT_LT(worst, 1e-8);
    EXPECT_NEAR(x.trace(), 1.0, 1e-10);
    EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(x).eigenvalues().minCoeff(), -1e-9);
    EXPECT_NEAR(x.sum(), t.theta, 1e-9);
    EXPECT_GE(t.gap, -1e-7);
}

}  // namespace

TEST(exclusivity_graph, normalizes_edges) {
    ExclusivityGraph g(4, {{2, 1}, {1, 2}, {0, 3}});
    EXPECT_EQ(g.n_edges(), 2u);
    EXPECT_EQ(g.edges()[0], std::make_pair(0, 3));
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_edge(0, 1));
    EXPECT_EQ(g.degree(1), 1);
    EXPECT_THROW(ExclusivityGraph(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(ExclusivityGraph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_EQ(g.complement().n_edges(), 4u);
    EXPECT_TRUE(g.is_independent({0, 1}));
    EXPECT_FALSE(g.is_independent({0, 3}));
}

TEST(exclusivity_graph, g3_matches_published_edge_list) {
    ExclusivityGraph built = build_graph(mu_family(3));
    std::set<std::pair<int, int>> published;
    for (auto [a, b] : load_g3_edges()) {
        published.emplace(std::min(a, b), std::max(a, b));
    }
    std::set<std::pair<int, int>> ours(built.edges().begin(), built.edges().end());
    EXPECT_EQ(published.size(), 72u);
    EXPECT_EQ(ours, published);
}

TEST(exclusivity_graph, g3_is_complement_of_shrikhande_parameters) {
    // srg(16, 6, 2, 2) complemented is srg(16, 9, 4, 6).
    ExclusivityGraph g(16, load_g3_edges());
    auto adj = g.adjacency();
    for (int v = 0; v < 16; ++v) {
        EXPECT_EQ(g.degree(v), 9);
    }
    for (int a = 0; a < 16; ++a) {
        for (int b = a + 1; b < 16; ++b) {
            int common = 0;
            for (int c = 0; c < 16; ++c) {
                common += adj[a][c] && adj[b][c];
            }
            EXPECT_EQ(common, adj[a][b] ? 4 : 6) << a << "," << b;
        }
    }
}

TEST(exclusivity_graph, g5_edges_match_label_oracle) {
    ProjectorFamily f = mu_family(5);
    ExclusivityGraph g = build_graph(f);
    size_t expected = 0;
    for (size_t a = 0; a < f.size(); ++a) {
        for (size_t b = a + 1; b < f.size(); ++b) {
            bool ex = labels_exclusive(f.labels[a], f.labels[b]);
            expected += ex;
            ASSERT_EQ(g.has_edge(a, b), ex) << f.labels[a] << " " << f.labels[b];
        }
    }
    EXPECT_EQ(g.n_edges(), expected);
}

TEST(exclusivity_graph, json_and_dimacs_round_trip) {
    ExclusivityGraph g(16, load_g3_edges());
    g.labels.assign(16, "v");
    ExclusivityGraph j = graph_from_json(nlohmann::json::parse(to_json(g).dump()));
    EXPECT_EQ(j, g);
    EXPECT_EQ(j.labels, g.labels);
    std::stringstream ss;
    write_dimacs(ss, g);
    EXPECT_EQ(read_dimacs(ss), g);
    std::istringstream bad("c x\np edge 3 1\ne 1 4\n");
    EXPECT_THROW(read_dimacs(bad), std::invalid_argument);
    std::istringstream bad_count("p edge 3 2\ne 1 2\n");
    EXPECT_THROW(read_dimacs(bad_count), std::invalid_argument);
    std::istringstream junk("p edge 3 1\nq 1 2\n");
    try {
        read_dimacs(junk);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(exclusivity_graph, verify_representation) {
    TableS1 s1 = load_table_s1();
    ExclusivityGraph g3(16, load_g3_edges());
    RepresentationReport r = verify_representation(s1.rays, g3, 1e-12);
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.max_edge_overlap, 1e-12);
    ConcentrationCertificate c = concentration_certificate(mu_family(3));
    EXPECT_TRUE(verify_representation(c.compressed_rays, g3, 1e-12).passed);
    std::vector<CVector> basis;
    for (int k = 0; k < 5; ++k) {
        basis.push_back(CVector::Unit(5, k));
    }
    EXPECT_TRUE(verify_representation(basis, complete_graph(5)).passed);
    basis[1] = (basis[0] + basis[1]).normalized();
    RepresentationReport bad = verify_representation(basis, complete_graph(5));
    EXPECT_FALSE(bad.passed);
    EXPECT_EQ(bad.worst_edge, std::make_pair(0, 1));
    EXPECT_THROW(verify_representation(basis, complete_graph(6)), std::invalid_argument);
}

TEST(independence, matches_exhaustive_search) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng() % 16;
        double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
        ExclusivityGraph g = random_graph(n, p, rng);
        AlphaCertificate a = independence_number(g);
        EXPECT_TRUE(a.certified);
        EXPECT_EQ(a.alpha, brute_force_alpha(g));
        EXPECT_EQ(a.upper_bound, a.alpha);
        EXPECT_EQ(int(a.witness_set.size()), a.alpha);
        EXPECT_TRUE(g.is_independent(a.witness_set));
    }
}

TEST(independence, known_values) {
    EXPECT_EQ(independence_number(complete_graph(7)).alpha, 1);
    EXPECT_EQ(independence_number(empty_graph(9)).alpha, 9);
    EXPECT_EQ(independence_number(cycle_graph(9)).alpha, 4);
    EXPECT_EQ(independence_number(mobius_ladder(12)).alpha, 5);
    AlphaCertificate g3 = independence_number(ExclusivityGraph(16, load_g3_edges()));
    EXPECT_EQ(g3.alpha, 3);
    EXPECT_TRUE(g3.certified);
    EXPECT_EQ(independence_number(ExclusivityGraph(0)).alpha, 0);
}

TEST(independence, deterministic_witness) {
    ExclusivityGraph g(16, load_g3_edges());
    EXPECT_EQ(independence_number(g).witness_set, independence_number(g).witness_set);
}

TEST(sdp, minimum_eigenvalue_program) {
    // min <C, X> s.t. Tr X = 1, X >= 0 equals lambda_min(C).
    std::mt19937_64 rng(41);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 6;
        Eigen::MatrixXd c(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c(i, j) = normal(rng);
        c = (c + c.transpose()).eval();
        SdpProblem p{n, c, {}};
        SdpConstraint tr;
        for (int i = 0; i < n; ++i) tr.add_symmetric(i, i, 1.0);
        tr.rhs = 1;
        p.constraints.push_back(tr);
        double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(c).eigenvalues().minCoeff();
        SdpIterate start{Eigen::MatrixXd::Identity(n, n) / n, Eigen::VectorXd::Constant(1, lmin - 1),
                         c - (lmin - 1) * Eigen::MatrixXd::Identity(n, n)};
        SdpResult r = solve_sdp(p, start);
        EXPECT_NEAR(r.primal_objective, lmin, 1e-7);
        EXPECT_NEAR(r.dual_objective, lmin, 1e-7);
    }
}

TEST(theta, closed_forms) {
    ThetaOptions tight;
    tight.tol = 1e-9;
    for (int k : {1, 2, 5, 9}) {
        EXPECT_NEAR(lovasz_theta(empty_graph(k), tight).theta, k, 1e-8) << k;
        if (k > 1) {
            EXPECT_NEAR(lovasz_theta(complete_graph(k), tight).theta, 1.0, 1e-8) << k;
        }
    }
    for (int n : {5, 7, 9, 11}) {
        double c = std::cos(std::numbers::pi / n);
        EXPECT_NEAR(lovasz_theta(cycle_graph(n)).theta, n * c / (1 + c), 1e-6) << n;
    }
    for (int m : {4, 6, 8}) {
        double expected = m / 2.0 * (1 + std::cos(std::numbers::pi / m));
        EXPECT_NEAR(lovasz_theta(mobius_ladder(2 * m)).theta, expected, 1e-6) << m;
    }
    EXPECT_NEAR(lovasz_theta(mobius_ladder(12)).theta, 3 + 1.5 * std::sqrt(3.0), 1e-6);
}

TEST(theta, petersen) {
    std::vector<std::pair<int, int>> e;
    for (int k = 0; k < 5; ++k) {
        e.emplace_back(k, (k + 1) % 5);
        e.emplace_back(k, k + 5);
        e.emplace_back(5 + k, 5 + (k + 2) % 5);
    }
    ExclusivityGraph pet(10, e);
    ThetaCertificate t = lovasz_theta(pet);
    EXPECT_NEAR(t.theta, 4.0, 1e-6);
    expect_feasible_primal(pet, t);
}

TEST(theta, sandwich_and_certificates_on_random_graphs) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + rng() % 14;
        ExclusivityGraph g = random_graph(n, std::uniform_real_distribution<double>(0.1, 0.8)(rng), rng);
        ThetaCertificate t = lovasz_theta(g);
        EXPECT_LE(brute_force_alpha(g), t.theta + 1e-6);
        EXPECT_LE(t.theta, t.dual_bound + 1e-12);
        EXPECT_LT(t.dual_bound - t.theta, 1e-7 + 1e-12);
        expect_feasible_primal(g, t);
        // Vertex-transitive or not, theta(G) theta(complement) >= n.
        EXPECT_GE(t.theta * lovasz_theta(g.complement()).theta, n - 1e-5);
    }
}

TEST(theta, g3_value) {
    ExclusivityGraph g(16, load_g3_edges());
    ThetaCertificate t = lovasz_theta(g);
    EXPECT_NEAR(t.theta, 4.0, 1e-6);
    expect_feasible_primal(g, t);
    // Vertex-transitive: theta(G) theta(complement) = n.
    EXPECT_NEAR(t.theta * lovasz_theta(g.complement()).theta, 16.0, 1e-5);
}

TEST(theta, rejects_bad_input) {
    ThetaOptions bad;
    bad.tol = 0;
    EXPECT_THROW(lovasz_theta(cycle_graph(5), bad), std::invalid_argument);
    EXPECT_THROW(lovasz_theta(empty_graph(kMaxThetaVertices + 1)), std::invalid_argument);
}

TEST(nchv, g3_hardy_implication) {
    ExclusivityGraph g(16, load_g3_edges());
    NchvReport r = nchv_enumerate(g, kContexts);
    EXPECT_EQ(r.max_total, 3);
    EXPECT_TRUE(r.hardy_implication);
    EXPECT_GT(r.saturating, 0u);
    EXPECT_EQ(r.max_last_given_saturated, 0);
    EXPECT_EQ(r.fully_saturating, 0u);
    EXPECT_EQ(int(r.max_witness.size()), 3);
    EXPECT_TRUE(g.is_independent(r.max_witness));
}

TEST(nchv, agrees_with_independence_number) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + rng() % 14;
        ExclusivityGraph g = random_graph(n, 0.4, rng);
        std::vector<int> all(n);
        for (int k = 0; k < n; ++k) all[k] = k;
        NchvReport r = nchv_enumerate(g, {all});
        EXPECT_EQ(r.max_total, independence_number(g).alpha);
    }
}

TEST(nchv, empty_graph_single_context) {
    NchvReport r = nchv_enumerate(empty_graph(5), {{0, 1, 2, 3, 4}});
    EXPECT_EQ(r.assignments, 32u);
    EXPECT_EQ(r.max_total, 5);
    // With one context the "leading" contexts are vacuous; exactly-one assignments are the five singletons.
    EXPECT_EQ(r.fully_saturating, 5u);
}

TEST(nchv, rejects_bad_input) {
    EXPECT_THROW(nchv_enumerate(empty_graph(kMaxNchvVertices + 1), {{0}}), std::invalid_argument);
    EXPECT_THROW(nchv_enumerate(empty_graph(4), {{0, 1}, {1, 2}}), std::invalid_argument);
    EXPECT_THROW(nchv_enumerate(empty_graph(4), {{0, 7}}), std::invalid_argument);
}
