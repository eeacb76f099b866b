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

#include <optional>
#include <vector>

#include "ctxconc/linalg.hpp"
#include "ctxconc/pauli.hpp"
#include "ctxconc/projector_family.hpp"
#include "json.hpp"

namespace ctxconc {

/// Simple undirected graph on qubits 0..n-1.
struct GraphSpec {
    int n = 0;
    std::vector<std::vector<uint8_t>> adjacency;
    std::optional<int> universal_vertex;

    static GraphSpec from_edges(int n, const std::vector<std::pair<int, int>> &edges,
                                std::optional<int> universal = std::nullopt);
    bool adjacent(int a, int b) const { return adjacency[a][b] != 0; }
    std::vector<std::pair<int, int>> edges() const;
    /// Smallest-index vertex adjacent to every other vertex, if any.
    std::optional<int> find_universal() const;
    /// Throws std::invalid_argument unless the invariants hold (n >= 3,
    /// symmetric, zero diagonal, connected, declared universal vertex valid).
    void validate() const;
};

nlohmann::json to_json(const GraphSpec &g);
GraphSpec graph_spec_from_json(const nlohmann::json &j);

GraphSpec star_graph(int n);
/// Hub 0 joined to every vertex of the cycle 1-2-...-(n-1).
GraphSpec wheel_graph(int n);
GraphSpec complete_graph_spec(int n);
GraphSpec path_graph(int n);

/// S^(j) = X on j, Z on the neighbours of j.
std::vector<PauliString> stabilizers(const GraphSpec &g);
/// Number of subsets of stabilizers whose product is +I, i.e. the dimension of
/// the joint +1 eigenspace. Exactly 1 for a graph state.
int joint_eigenspace_dimension(const std::vector<PauliString> &gens);
CVector graph_state(const GraphSpec &g);
/// Applies Z to every qubit k with flips[k] = 1.
CVector apply_z_flips(const CVector &state, const std::vector<uint8_t> &flips);

struct ParadoxOperators {
    std::vector<PauliString> operators;       // n + 1 signed strings
    std::vector<std::vector<int>> factors;    // stabilizer (original vertex) indices multiplied into each
    std::vector<int> multiplicity;            // times each stabilizer appears, by original vertex
    std::vector<int> vertex_order;            // position p plays the role of vertex p+1 in the construction
    bool relabeled = false;                   // vertex_order is not 0, 1, ..., n-1
};

/// The GHZ-type operator list S1; S1^t(n) S2; S1^t(j) Sj Sj+1 (j = 2..n-1);
/// S1^t(n) Sn, with t(j) = 1 + C[n][2] + sum_{k=2, k != j}^{n-1} C[k][k+1] mod 2
/// (one-based positions). The universal vertex takes position 1. The remaining
/// vertices keep their index order unless that leaves some stabilizer with odd
/// multiplicity, in which case orderings are searched in lexicographic order.
/// Throws std::invalid_argument (n even, no universal vertex) or
/// std::runtime_error (no ordering satisfies the parity condition).
ParadoxOperators paradox_operators(const GraphSpec &g);

/// Solves sum_{j in factors(O)} f_j = 1 (mod 2) for every paradox operator.
/// Throws std::runtime_error if the system is inconsistent.
std::vector<uint8_t> solve_flip_vector(const ParadoxOperators &ops, int n);

struct ModifiedState {
    std::vector<uint8_t> flip_vector;
    CVector state;
};
ModifiedState modified_state(const GraphSpec &g);
ModifiedState modified_state(const GraphSpec &g, const ParadoxOperators &ops);

/// Rank-1 +1-outcome events of each operator; identity qubits are resolved in
/// the Z basis, so each operator contributes 2^(n-1) events.
ProjectorFamily paradox_event_family(const GraphSpec &g);
ProjectorFamily paradox_event_family(const ParadoxOperators &ops, int n);

struct LhvSearch {
    int symbols = 0;            // distinct (qubit, letter) pairs appearing
    uint64_t assignments = 0;   // 2^symbols
    bool feasible = false;      // some +-1 assignment gives every operator value +1
    uint64_t satisfying = 0;
};
LhvSearch lhv_search(const std::vector<PauliString> &operators);

struct ParadoxBundle {
    ParadoxOperators ops;
    ModifiedState modified;
    ProjectorFamily events;
    CVector graph_state;
    std::vector<double> expect_graph;     // <G|O_k|G>
    std::vector<double> expect_modified;  // <G~|O_k|G~>
    double max_event_probability = 0;     // max_k <G~|E_k|G~>
    LhvSearch lhv;
    int event_rank = 0;
};
ParadoxBundle build_paradox(const GraphSpec &g, double rank_tol = kDefaultRankTol);

}  // namespace ctxconc
