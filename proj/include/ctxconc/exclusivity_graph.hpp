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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ctxconc/linalg.hpp"
#include "ctxconc/projector_family.hpp"
#include "json.hpp"

namespace ctxconc {

inline constexpr double kDefaultEdgeTol = 1e-8;

/// Undirected simple graph; edges are kept sorted with i < j.
class ExclusivityGraph {
   public:
    ExclusivityGraph() = default;
    explicit ExclusivityGraph(int n_vertices);
    ExclusivityGraph(int n_vertices, std::vector<std::pair<int, int>> edges);

    int n_vertices() const { return n_; }
    size_t n_edges() const { return edges_.size(); }
    const std::vector<std::pair<int, int>> &edges() const { return edges_; }
    bool has_edge(int a, int b) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::vector<uint8_t>> adjacency() const;
    ExclusivityGraph complement() const;
    bool is_independent(const std::vector<int> &vertices) const;

    std::vector<std::string> labels;  // optional, one per vertex

    bool operator==(const ExclusivityGraph &other) const { return n_ == other.n_ && edges_ == other.edges_; }

   private:
    void index();

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Edge (i, j) iff ||Pi_i Pi_j||_F = |<v_i|v_j>| < tol.
ExclusivityGraph build_graph(const ProjectorFamily &family, double tol = kDefaultEdgeTol);

ExclusivityGraph complete_graph(int n);
ExclusivityGraph empty_graph(int n);
ExclusivityGraph cycle_graph(int n);
/// Circulant C_{2m}(1, m): a 2m-cycle plus its m long diagonals.
ExclusivityGraph mobius_ladder(int two_m);

nlohmann::json to_json(const ExclusivityGraph &g);
ExclusivityGraph graph_from_json(const nlohmann::json &j);

/// DIMACS text: "p edge N M" then "e i j" lines with one-based vertices;
/// "c" lines are comments.
void write_dimacs(std::ostream &out, const ExclusivityGraph &g);
ExclusivityGraph read_dimacs(std::istream &in);

struct RepresentationReport {
    double max_edge_overlap = 0;
    std::pair<int, int> worst_edge{-1, -1};
    std::vector<std::pair<int, int>> violating_edges;  // overlap >= tol
    std::vector<std::pair<int, int>> orthogonal_non_edges;
    bool passed = false;
};
/// Checks that every edge joins orthogonal rays.
RepresentationReport verify_representation(std::span<const CVector> rays, const ExclusivityGraph &g,
                                           double tol = 1e-12);

}  // namespace ctxconc
