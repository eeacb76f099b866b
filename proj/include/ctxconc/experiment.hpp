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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctxconc/exclusivity_graph.hpp"
#include "ctxconc/linalg.hpp"
#include "ctxconc/projector_family.hpp"
#include "json.hpp"

namespace ctxconc {

struct NoiseModel {
    double visibility = 1.0;        // projector contrast in [0, 1]
    double dark_rate = 0.0;         // spurious outcome-1 probability
    double prep_angle_jitter = 0.0; // standard deviation of the preparation tilt, radians
    uint64_t seed = 0;

    static NoiseModel noiseless(uint64_t seed = 0) { return {1.0, 0.0, 0.0, seed}; }
    void validate() const;
};

struct CountRecord {
    int64_t count_1 = 0;
    int64_t count_0 = 0;

    bool operator==(const CountRecord &) const = default;
};

/// Counts keyed by (preparation id, measurement id).
///
/// Preparation ids: "psi" for the input state, "post1:i" for the eigenray of
/// event i, "post0:i" for the input state with event i projected out. The
/// measurement id "vj" detects event j. Event indices are zero-based.
struct CountTable {
    std::map<std::pair<std::string, std::string>, CountRecord> records;
    int64_t shots_nominal = 0;

    const CountRecord &at(const std::string &prep, const std::string &meas) const;
    bool contains(const std::string &prep, const std::string &meas) const;
    bool operator==(const CountTable &) const = default;
};

/// CSV with columns prep_id, meas_id, count_1, count_0 and an optional
/// "# shots_nominal=N" comment line.
void write_count_csv(std::ostream &out, const CountTable &table);
CountTable read_count_csv(std::string_view text);

struct Setting {
    std::string prep;
    std::string meas;
};
using SimulationPlan = std::vector<Setting>;

std::string prep_psi();
std::string prep_post1(int i);
std::string prep_post0(int i);
std::string meas_id(int j);

/// One setting per vertex with the input state, plus for every edge both
/// orders of the outcome-1 and outcome-0 repreparations.
SimulationPlan standard_plan(const ExclusivityGraph &g);
nlohmann::json to_json(const SimulationPlan &plan);
SimulationPlan plan_from_json(const nlohmann::json &j);

/// Outcome 1 gives the normalized projection Pi|psi>, outcome 0 gives the
/// normalized (I - Pi)|psi>. Throws "impossible outcome" if that branch has
/// zero probability.
CVector luders_update(const CVector &state, const CMatrix &projector, int outcome);
/// Same for the rank-1 projector onto the unit ray v.
CVector luders_update_ray(const CVector &state, const CVector &ray, int outcome);

struct SequentialProbabilities {
    double p1 = 0;    // P(1|i)
    double p11 = 0;   // P(1,1|i,j)
    double p10 = 0;   // P(1,0|i,j)
    double p01 = 0;   // P(0,1|i,j)
    double p00 = 0;   // P(0,0|i,j)
    double cond1 = 0; // P(1|i=1,j), 0 when the branch is impossible
    double cond0 = 0; // P(1|i=0,j), 0 when the branch is impossible
};
SequentialProbabilities sequential_probabilities(const CVector &state, int i, int j, const ProjectorFamily &family);

/// Input state and event rays of a prepare-and-measure experiment.
struct ExperimentModel {
    CVector psi;
    ProjectorFamily family;

    /// Throws std::invalid_argument for malformed ids or impossible preparations.
    CVector prepare(const std::string &prep_id) const;
    int parse_meas(const std::string &meas) const;
    double ideal_probability(const Setting &s) const;
};

/// The seven-dimensional model: the embedded rays as the family, |psi> as input.
ExperimentModel paper_model();

/// 64-bit stream seed from SHA-256 over the seed and the given labels.
uint64_t derive_seed(uint64_t seed, std::initializer_list<std::string_view> labels);

/// Draws Poisson(mean), with mean 0 giving 0.
int64_t poisson_draw(std::mt19937_64 &rng, double mean);

/// For each setting, count_1 ~ Poisson(shots p') and count_0 ~
/// Poisson(shots (1 - p')), p' = visibility p + dark_rate (1 - p), with p
/// evaluated on a jittered preparation. Each setting draws from its own stream.
CountTable simulate_counts(const ExperimentModel &model, const SimulationPlan &plan, int64_t shots,
                           const NoiseModel &noise);

}  // namespace ctxconc
