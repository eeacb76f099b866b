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
#include <random>
#include <sstream>

#include "ctxconc/analysis.hpp"
#include "ctxconc/experiment.hpp"
#include "ctxconc/fixtures.hpp"
#include "ctxconc/mabk.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace ctxconc;
using ctxconc::testing::random_ket;

namespace {

ExclusivityGraph g3() { return ExclusivityGraph(16, load_g3_edges()); }

}  // namespace

TEST(luders, output_is_unit_norm_and_repeatable) {
    std::mt19937_64 rng(71);
    ExperimentModel m = paper_model();
    for (int trial = 0; trial < 50; ++trial) {
        CVector psi = random_ket(7, rng);
        const CVector &v = m.family.rays[trial % 16];
        for (int outcome : {0, 1}) {
            CVector post = luders_update_ray(psi, v, outcome);
            EXPECT_NEAR(post.norm(), 1.0, 1e-12);
            // Measuring the same projector again repeats the outcome.
            double p1 = std::norm(v.dot(post));
            EXPECT_NEAR(p1, outcome == 1 ? 1.0 : 0.0, 1e-12);
            CVector dense = luders_update(psi, v * v.adjoint(), outcome);
            EXPECT_NEAR(std::abs(dense.dot(post)), 1.0, 1e-12);
        }
    }
    CVector e0 = CVector::Unit(3, 0);
    EXPECT_THROW(luders_update_ray(e0, CVector::Unit(3, 1), 1), std::domain_error);
    EXPECT_THROW(luders_update_ray(e0, e0, 0), std::domain_error);
}

TEST(sequential, probabilities_are_complete) {
    std::mt19937_64 rng(72);
    ExperimentModel m = paper_model();
    for (int trial = 0; trial < 40; ++trial) {
        CVector psi = random_ket(7, rng);
        int i = rng() % 16, j = (i + 1 + rng() % 15) % 16;
        SequentialProbabilities s = sequential_probabilities(psi, i, j, m.family);
        EXPECT_NEAR(s.p11 + s.p10 + s.p01 + s.p00, 1.0, 1e-12);
        EXPECT_NEAR(s.p11 + s.p10, s.p1, 1e-12);
        EXPECT_NEAR(s.p1 * s.cond1, s.p11, 1e-12);
        EXPECT_NEAR((1 - s.p1) * s.cond0, s.p01, 1e-12);
    }
}

TEST(sequential, no_signaling_for_exclusive_pairs) {
    ExperimentModel m = paper_model();
    for (auto [a, b] : load_g3_edges()) {
        for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
            SequentialProbabilities s = sequential_probabilities(m.psi, i, j, m.family);
            double pj = m.family.probability(j, m.psi);
            EXPECT_NEAR(s.p1 - s.p11 - s.p10, 0.0, 1e-12);
            EXPECT_NEAR(pj - s.p11 - s.p01, 0.0, 1e-12);
            EXPECT_NEAR(s.p11, 0.0, 1e-12);
        }
    }
}

TEST(experiment, ids_and_preparations) {
    ExperimentModel m = paper_model();
    EXPECT_EQ(prep_post1(3), "post1:3");
    EXPECT_EQ(meas_id(12), "v12");
    EXPECT_EQ(m.parse_meas("v12"), 12);
    EXPECT_LT((m.prepare("psi") - m.psi).norm(), 1e-15);
    EXPECT_NEAR(std::abs(m.prepare("post1:4").dot(m.family.rays[4])), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(m.family.rays[4].dot(m.prepare("post0:4"))), 0.0, 1e-12);
    EXPECT_THROW(m.prepare("post1:16"), std::invalid_argument);
    EXPECT_THROW(m.prepare("phi"), std::invalid_argument);
    EXPECT_THROW(m.parse_meas("w1"), std::invalid_argument);
    EXPECT_THROW(m.parse_meas("v-1"), std::invalid_argument);
    EXPECT_NEAR(m.ideal_probability({"psi", "v0"}), m.family.probability(0, m.psi), 1e-15);
}

TEST(experiment, standard_plan_and_json) {
    SimulationPlan plan = standard_plan(g3());
    EXPECT_EQ(plan.size(), 16u + 4u * 72u);
    SimulationPlan back = plan_from_json(nlohmann::json::parse(to_json(plan).dump()));
    ASSERT_EQ(back.size(), plan.size());
    for (size_t k = 0; k < plan.size(); ++k) {
        EXPECT_EQ(back[k].prep, plan[k].prep);
        EXPECT_EQ(back[k].meas, plan[k].meas);
    }
}

TEST(experiment, noise_model_validation) {
    EXPECT_NO_THROW(NoiseModel::noiseless().validate());
    EXPECT_THROW((NoiseModel{1.1, 0, 0, 0}).validate(), std::invalid_argument);
    EXPECT_THROW((NoiseModel{1, -0.1, 0, 0}).validate(), std::invalid_argument);
    EXPECT_THROW((NoiseModel{1, 0, -1, 0}).validate(), std::invalid_argument);
}

TEST(experiment, poisson_draws) {
    std::mt19937_64 rng(73);
    EXPECT_EQ(poisson_draw(rng, 0.0), 0);
    EXPECT_THROW(poisson_draw(rng, -1.0), std::invalid_argument);
    const int n = 20000;
    const double mean = 7.5;
    double sum = 0;
    for (int k = 0; k < n; ++k) {
        sum += poisson_draw(rng, mean);
    }
    EXPECT_NEAR(sum / n, mean, 4 * std::sqrt(mean / n));
}

TEST(experiment, derive_seed_depends_on_every_label) {
    uint64_t a = derive_seed(1, {"count", "psi", "v0"});
    EXPECT_EQ(a, derive_seed(1, {"count", "psi", "v0"}));
    EXPECT_NE(a, derive_seed(2, {"count", "psi", "v0"}));
    EXPECT_NE(a, derive_seed(1, {"count", "psi", "v1"}));
    EXPECT_NE(derive_seed(1, {"ab", "c"}), derive_seed(1, {"a", "bc"}));
}

TEST(simulate, noiseless_vertex_frequencies_within_binomial_error) {
    ExperimentModel m = paper_model();
    SimulationPlan plan = standard_plan(g3());
    const int64_t shots = 100000;
    CountTable t = simulate_counts(m, plan, shots, NoiseModel::noiseless(5));
    for (int k = 0; k < 16; ++k) {
        const CountRecord &r = t.at(prep_psi(), meas_id(k));
        double total = double(r.count_1 + r.count_0);
        double p = m.family.probability(k, m.psi);
        double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / total);
        EXPECT_NEAR(r.count_1 / total, p, 4 * sigma + 1e-12) << k;
    }
    // Exclusive pairs never fire twice without noise.
    ExclusivityGraph g = g3();
    for (auto [i, j] : g.edges()) {
        EXPECT_EQ(t.at(prep_post1(i), meas_id(j)).count_1, 0);
    }
}

TEST(simulate, reproducible_and_stream_isolated) {
    ExperimentModel m = paper_model();
    SimulationPlan plan = standard_plan(g3());
    NoiseModel noise{0.99, 0.005, 0.01, 17};
    CountTable a = simulate_counts(m, plan, 1000, noise);
    CountTable b = simulate_counts(m, plan, 1000, noise);
    EXPECT_EQ(a, b);
    noise.seed = 18;
    EXPECT_NE(a, simulate_counts(m, plan, 1000, noise));
    noise.seed = 17;
    // A sub-plan in reversed order draws the same counts for the settings it shares.
    SimulationPlan sub(plan.rbegin(), plan.rbegin() + 50);
    CountTable c = simulate_counts(m, sub, 1000, noise);
    for (const auto &[key, rec] : c.records) {
        EXPECT_EQ(rec, a.records.at(key));
    }
}

TEST(simulate, noisy_run_degrades_but_violates) {
    ExperimentModel m = paper_model();
    ExclusivityGraph g = g3();
    CountTable t = simulate_counts(m, standard_plan(g), 100000, NoiseModel{0.99, 0.005, 0.01, 3});
    ProbabilityBundle b = counts_to_bundle(t);
    double coincidences = 0;
    for (auto [i, j] : g.edges()) {
        coincidences += b.vertex(i) * b.p_cond1.at({i, j});
    }
    EXPECT_GT(coincidences, 0.0);
    EXPECT_LT(coincidences, 2.0);
    double mu = witness_mu(b, g);
    EXPECT_LT(mu, 4.0);
    EXPECT_GT(mu, 3.0);
}

TEST(counts, csv_round_trip_and_errors) {
    CountTable t = simulate_counts(paper_model(), standard_plan(g3()), 500, NoiseModel::noiseless(1));
    std::ostringstream out;
    write_count_csv(out, t);
    CountTable back = read_count_csv(out.str());
    EXPECT_EQ(back, t);
    EXPECT_EQ(back.shots_nominal, 500);
    try {
        read_count_csv("prep_id,meas_id,count_1,count_0\npsi,v0,1,2\npsi,v1,x,2\n");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(read_count_csv("prep_id,meas_id,count_1,count_0\npsi,v0,1,2\npsi,v0,1,2\n"), std::invalid_argument);
    EXPECT_THROW(read_count_csv("prep_id,meas_id,count_1\npsi,v0,1\n"), std::invalid_argument);
    EXPECT_THROW(read_count_csv("prep_id,meas_id,count_1,count_0\npsi,v0,-1,2\n"), std::invalid_argument);
    EXPECT_THROW(t.at("psi", "v99"), std::out_of_range);
}
