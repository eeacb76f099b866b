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

#include <random>
#include <utility>
#include <vector>

#include "ctxconc/exclusivity_graph.hpp"
#include "ctxconc/linalg.hpp"

namespace ctxconc::testing {

inline CVector random_ket(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    CVector v(dim);
    for (int k = 0; k < dim; ++k) {
        v(k) = Complex(normal(rng), normal(rng));
    }
    return v / v.norm();
}

inline CMatrix random_matrix(int rows, int cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    CMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            m(r, c) = Complex(normal(rng), normal(rng));
        }
    }
    return m;
}

/// Erdos-Renyi graph G(n, p).
inline ExclusivityGraph random_graph(int n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return ExclusivityGraph(n, edges);
}

/// Exhaustive independence number, for cross-checking the solvers.
inline int brute_force_alpha(const ExclusivityGraph &g) {
    const int n = g.n_vertices();
    std::vector<uint32_t> adj(n, 0);
    for (auto [a, b] : g.edges()) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    }
    int best = 0;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            ok = !((s >> v) & 1) || (adj[v] & s) == 0;
        }
        if (ok) {
            best = std::max(best, __builtin_popcount(s));
        }
    }
    return best;
}

}  // namespace ctxconc::testing
