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

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctxconc/exclusivity_graph.hpp"
#include "ctxconc/experiment.hpp"
#include "json.hpp"

namespace ctxconc {

/// Detection probabilities indexed by zero-based events. Conditional entries
/// are keyed (i, j) with i measured first.
struct ProbabilityBundle {
    std::map<int, double> p_vertex;               // P(1|k)
    std::map<std::pair<int, int>, double> p_cond1; // P(1|i=1,j)
    std::map<std::pair<int, int>, double> p_cond0; // P(1|i=0,j)
    std::string provenance = "ingested";          // fixture, simulated, analytic or ingested

    double vertex(int k) const;
    void validate() const;
};

nlohmann::json to_json(const ProbabilityBundle &b);
ProbabilityBundle bundle_from_json(const nlohmann::json &j);

/// Tables S3, S4 and S5 as a bundle; both orders of every edge are present.
ProbabilityBundle paper_bundle();
/// Exact Born-rule probabilities of the model on the vertices and both
/// orders of every edge.
ProbabilityBundle analytic_bundle(const ExperimentModel &model, const ExclusivityGraph &g);
/// P = count_1 / (count_1 + count_0) per setting; settings with no counts are skipped.
ProbabilityBundle counts_to_bundle(const CountTable &counts, const std::string &provenance = "simulated");
/// Inverse of counts_to_bundle at a nominal shot number, rounding to integers.
CountTable bundle_to_counts(const ProbabilityBundle &b, int64_t shots);

enum class EdgeDirection { Symmetrized, Forward, Backward };
std::string to_string(EdgeDirection d);
EdgeDirection edge_direction_from_string(const std::string &s);

/// Vertex sum minus the estimated exclusive-pair coincidences.
///
/// The edge (i, j), i < j, contributes P(1|i) P(1|i=1,j) forward and
/// P(1|j) P(1|j=1,i) backward. When only one order is present it is used for
/// every policy; the symmetrized policy averages the two when both exist.
struct WitnessTerms {
    double vertex_sum = 0;
    double edge_forward = 0;
    double edge_backward = 0;
    double edge_symmetrized = 0;
    int edges_both = 0;
    int edges_single = 0;

    double mu(EdgeDirection d) const;
};
/// Throws std::invalid_argument listing every missing vertex or edge.
WitnessTerms witness_terms(const ProbabilityBundle &probs, const ExclusivityGraph &g);
double witness_mu(const ProbabilityBundle &probs, const ExclusivityGraph &g,
                  EdgeDirection d = EdgeDirection::Symmetrized);

struct HardyReport {
    std::vector<double> context_sums;
    double p_success = 0;
    /// Every context but the last sums to within tol of 1.
    bool leading_saturated = false;
    /// Leading contexts saturated while the last exceeds tol, which no
    /// noncontextual assignment allows.
    bool contradicts_nchv = false;
};
HardyReport hardy_report(const ProbabilityBundle &probs, const std::vector<std::vector<int>> &contexts,
                         double tol = 0.05);

/// Both orders of an edge; the first index is measured first.
struct SignalingFactor {
    int i = 0;
    int j = 0;
    bool has_ij = false;
    bool has_ji = false;
    double eps_ij = 0;        // P(1|i) - P(1,1|i,j) - P(1,0|i,j)
    double eps_ji = 0;
    double eps_prime_ij = 0;  // P(1|j) - P(1,1|i,j) - P(0,1|i,j)
    double eps_prime_ji = 0;
};
/// Orders lacking conditional data are skipped and named in `warnings`.
std::vector<SignalingFactor> signaling_factors(const ProbabilityBundle &probs, const ExclusivityGraph &g,
                                               std::vector<std::string> *warnings = nullptr);
/// Mean of |eps'| over every available order of every edge.
double mean_abs_eps_prime(const std::vector<SignalingFactor> &factors);
double max_abs_eps(const std::vector<SignalingFactor> &factors);
double max_abs_eps_prime(const std::vector<SignalingFactor> &factors);

/// Named scalars computed from a bundle, the unit of resampling.
using Pipeline = std::function<std::map<std::string, double>(const ProbabilityBundle &)>;
/// mu_symmetrized, mu_forward, mu_backward, vertex_sum, p_vertex:k and, when
/// outcome-0 data exist, mean_abs_eps_prime and eps_prime:i:j per edge order.
Pipeline witness_pipeline(const ExclusivityGraph &g);

struct ResampleResult {
    int n_groups = 0;
    std::map<std::string, double> mean;
    std::map<std::string, double> stddev;  // sample standard deviation across groups
};
/// Redraws every count from Poisson(recorded count) once per group and
/// evaluates the pipeline on each redraw. Group g, setting s uses a stream
/// derived from (seed, g, s), so results do not depend on record order.
ResampleResult resample_errors(const CountTable &counts, const Pipeline &pipeline, int n_groups, uint64_t seed);

struct WitnessReport {
    std::string provenance;
    std::string direction;
    double mu = 0;
    double mu_forward = 0;
    double mu_backward = 0;
    double mu_symmetrized = 0;
    double vertex_sum = 0;
    double classical_bound = 0;
    double quantum_bound = 0;
    double std_error = 0;
    double sigma_deviation = 0;  // (mu - classical_bound) / std_error, 0 when std_error is 0
    double ratio = 0;            // mu / classical_bound
    double mean_abs_eps_prime = 0;
    double mean_abs_eps_prime_stderr = 0;
    double max_abs_eps = 0;
    std::vector<double> hardy_sums;
    int n_groups = 0;
    int64_t shots_nominal = 0;
};
nlohmann::json to_json(const WitnessReport &r);

struct AnalysisConfig {
    EdgeDirection direction = EdgeDirection::Symmetrized;
    double classical_bound = 3;
    double quantum_bound = 4;
    int n_groups = 100;
    uint64_t seed = 0;
    int64_t reconstruction_shots = 100000;  // used when the input has no counts
};

struct AnalysisOutput {
    WitnessReport report;
    ProbabilityBundle bundle;
    std::vector<SignalingFactor> factors;
    ResampleResult resampled;
    std::vector<std::string> warnings;
};
/// Full pipeline on a bundle; counts are reconstructed at the configured shot
/// number for resampling. Pass counts to resample the recorded data instead.
AnalysisOutput analyze(const ProbabilityBundle &bundle, const ExclusivityGraph &g,
                       const std::vector<std::vector<int>> &contexts, const AnalysisConfig &config,
                       const CountTable *counts = nullptr);

/// Rows "vertex,k,,P(1|k),stderr" and "eps_prime,i,j,value,stderr", one per
/// available edge order, for external plotting.
void write_plot_csv(std::ostream &out, const AnalysisOutput &a);

}  // namespace ctxconc
