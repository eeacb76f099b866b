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

#include <functional>
#include <map>
#include <random>

#include "ctxconc/exclusivity_graph.hpp"
#include "ctxconc/graphstate.hpp"
#include "ctxconc/independence.hpp"
#include "ctxconc/theta.hpp"
#include "gtest/gtest.h"

using namespace ctxconc;

namespace {

// |+>^n followed by CZ on every edge.
CVector cz_graph_state(const GraphSpec &g) {
    const int dim = 1 << g.n;
    CVector v(dim);
    for (int b = 0; b < dim; ++b) {
        int phase = 0;
        for (auto [i, j] : g.edges()) {
            phase ^= ((b >> (g.n - 1 - i)) & 1) & ((b >> (g.n - 1 - j)) & 1);
        }
        v(b) = phase ? -1.0 : 1.0;
    }
    return v / std::sqrt(double(dim));
}

std::vector<GraphSpec> sample_graphs() {
    return {star_graph(3), star_graph(5), wheel_graph(5), path_graph(4), complete_graph_spec(4),
            GraphSpec::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})};
}

// Random graph on n vertices with vertex 0 joined to everything.
GraphSpec random_universal_graph(int n, std::mt19937_64 &rng) {
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k < n; ++k) {
        edges.emplace_back(0, k);
    }
    std::bernoulli_distribution coin(0.4);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return GraphSpec::from_edges(n, edges, 0);
}

// Recursive search for a +-1 value per (qubit, letter) making every operator +1.
bool lhv_exists(const std::vector<PauliString> &ops) {
    std::map<std::pair<size_t, Pauli>, int> index;
    for (const auto &op : ops)
        for (size_t q = 0; q < op.size(); ++q)
            if (op[q] != Pauli::I) index.emplace(std::make_pair(q, op[q]), int(index.size()));
    std::vector<int> values;
    std::function<bool()> rec = [&]() {
        if (values.size() == index.size()) {
            for (const auto &op : ops) {
                int v = op.sign();
                for (size_t q = 0; q < op.size(); ++q)
                    if (op[q] != Pauli::I) v *= values[index.at({q, op[q]})];
                if (v != 1) return false;
            }
            return true;
        }
        for (int s : {+1, -1}) {
            values.push_back(s);
            if (rec()) return true;
            values.pop_back();
        }
        return false;
    };
    return rec();
}

int schmidt_rank(const CVector &v, int n, int cut_qubit) {
    // Rows index the cut qubit, columns the rest.
    CMatrix m = CMatrix::Zero(2, v.size() / 2);
    for (int b = 0; b < v.size(); ++b) {
        int top = (b >> (n - 1 - cut_qubit)) & 1;
        int rest = ((b >> (n - cut_qubit)) << (n - 1 - cut_qubit)) | (b & ((1 << (n - 1 - cut_qubit)) - 1));
        m(top, rest) = v(b);
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    return (svd.singularValues().array() > 1e-10).count();
}

}  // namespace

TEST(graphstate, spec_validation) {
    EXPECT_NO_THROW(star_graph(3).validate());
    EXPECT_EQ(star_graph(5).find_universal(), 0);
    EXPECT_EQ(wheel_graph(5).find_universal(), 0);
    EXPECT_EQ(path_graph(5).find_universal(), std::nullopt);
    EXPECT_EQ(path_graph(3).find_universal(), 1);
    EXPECT_THROW(GraphSpec::from_edges(4, {{0, 1}, {2, 3}}).validate(), std::invalid_argument);
    EXPECT_THROW(GraphSpec::from_edges(3, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(GraphSpec::from_edges(3, {{0, 1}, {1, 2}}, 0).validate(), std::invalid_argument);
    GraphSpec asym = star_graph(3);
    asym.adjacency[1][0] = 0;
    EXPECT_THROW(asym.validate(), std::invalid_argument);
}

TEST(graphstate, json_round_trip) {
    GraphSpec g = wheel_graph(5);
    GraphSpec h = graph_spec_from_json(nlohmann::json::parse(to_json(g).dump()));
    EXPECT_EQ(h.n, g.n);
    EXPECT_EQ(h.adjacency, g.adjacency);
    EXPECT_EQ(h.universal_vertex, g.universal_vertex);
}

TEST(graphstate, matches_cz_construction) {
    for (const auto &g : sample_graphs()) {
        CVector s = graph_state(g);
        EXPECT_NEAR(std::abs(s.dot(cz_graph_state(g))), 1.0, 1e-12);
        auto gens = stabilizers(g);
        EXPECT_EQ(joint_eigenspace_dimension(gens), 1);
        for (const auto &st : gens) {
            EXPECT_NEAR(pauli_expectation(st, s), 1.0, 1e-12);
        }
    }
}

TEST(graphstate, z_flip_inverts_exactly_one_stabilizer) {
    for (const auto &g : sample_graphs()) {
        CVector s = graph_state(g);
        auto gens = stabilizers(g);
        for (int k = 0; k < g.n; ++k) {
            std::vector<uint8_t> flips(g.n, 0);
            flips[k] = 1;
            CVector t = apply_z_flips(s, flips);
            for (int j = 0; j < g.n; ++j) {
                EXPECT_NEAR(pauli_expectation(gens[j], t), j == k ? -1.0 : 1.0, 1e-12);
            }
            EXPECT_NEAR(std::abs(apply_z_flips(t, flips).dot(s)), 1.0, 1e-12);
        }
    }
}

TEST(graphstate, star3_is_ghz_like) {
    CVector s = graph_state(star_graph(3));
    for (int q = 0; q < 3; ++q) {
        EXPECT_EQ(schmidt_rank(s, 3, q), 2);
    }
}

TEST(graphstate, star3_paradox) {
    GraphSpec g = star_graph(3);
    ParadoxOperators ops = paradox_operators(g);
    ASSERT_EQ(ops.operators.size(), 4u);
    EXPECT_FALSE(ops.relabeled);
    for (int m : ops.multiplicity) {
        EXPECT_EQ(m % 2, 0);
    }
    CVector s = graph_state(g);
    ModifiedState mod = modified_state(g, ops);
    for (const auto &op : ops.operators) {
        EXPECT_NEAR(pauli_expectation(op, s), 1.0, 1e-12) << op.str();
        EXPECT_NEAR(pauli_expectation(op, mod.state), -1.0, 1e-12) << op.str();
    }
    EXPECT_FALSE(lhv_exists(ops.operators));
    LhvSearch lhv = lhv_search(ops.operators);
    EXPECT_FALSE(lhv.feasible);
    EXPECT_EQ(lhv.satisfying, 0u);
    EXPECT_EQ(lhv.assignments, uint64_t(1) << lhv.symbols);
}

TEST(graphstate, star3_event_family) {
    GraphSpec g = star_graph(3);
    ProjectorFamily events = paradox_event_family(g);
    EXPECT_EQ(events.size(), 16u);
    EXPECT_EQ(events.contexts.size(), 4u);
    EXPECT_NO_THROW(events.validate());
    EXPECT_EQ(numeric_rank(events.rays, 1e-9), 7);
    CVector tilde = modified_state(g).state;
    for (size_t k = 0; k < events.size(); ++k) {
        EXPECT_LT(events.probability(k, tilde), 1e-12);
    }
    ExclusivityGraph eg = build_graph(events);
    AlphaCertificate a = independence_number(eg);
    EXPECT_TRUE(a.certified);
    EXPECT_EQ(a.alpha, 3);
    EXPECT_NEAR(lovasz_theta(eg).theta, 4.0, 1e-6);
}

TEST(graphstate, wheel5_bundle) {
    ParadoxBundle b = build_paradox(wheel_graph(5));
    EXPECT_EQ(b.ops.operators.size(), 6u);
    EXPECT_EQ(b.events.size(), 96u);
    EXPECT_EQ(b.events.contexts.size(), 6u);
    EXPECT_EQ(b.event_rank, 31);
    EXPECT_FALSE(b.lhv.feasible);
    EXPECT_FALSE(lhv_exists(b.ops.operators));
    EXPECT_LT(b.max_event_probability, 1e-12);
    for (size_t k = 0; k < b.expect_graph.size(); ++k) {
        EXPECT_NEAR(b.expect_graph[k], 1.0, 1e-12);
        EXPECT_NEAR(b.expect_modified[k], -1.0, 1e-12);
    }
}

TEST(graphstate, construction_property_on_random_universal_graphs) {
    std::mt19937_64 rng(21);
    int built = 0;
    for (int n : {3, 5, 7}) {
        for (int trial = 0; trial < 12; ++trial) {
            GraphSpec g = random_universal_graph(n, rng);
            ParadoxOperators ops;
            try {
                ops = paradox_operators(g);
            } catch (const std::runtime_error &) {
                continue;  // reported parity failure, checked separately below
            }
            ++built;
            ASSERT_EQ(ops.operators.size(), size_t(n + 1));
            for (int m : ops.multiplicity) {
                EXPECT_EQ(m % 2, 0);
            }
            CVector s = graph_state(g);
            CVector t = modified_state(g, ops).state;
            for (const auto &op : ops.operators) {
                EXPECT_NEAR(pauli_expectation(op, s), 1.0, 1e-12);
                EXPECT_NEAR(pauli_expectation(op, t), -1.0, 1e-12);
            }
            EXPECT_FALSE(lhv_search(ops.operators).feasible);
            if (n <= 5) {
                EXPECT_EQ(numeric_rank(paradox_event_family(ops, n).rays, 1e-9), (1 << n) - 1);
            }
        }
    }
    EXPECT_GT(built, 20);
}

TEST(graphstate, orderings) {
    for (const auto &g : {star_graph(5), star_graph(7), wheel_graph(7)}) {
        ParadoxOperators ops = paradox_operators(g);
        EXPECT_EQ(ops.vertex_order.front(), 0);
        // The index order works for stars; the 7-wheel needs the last two rim vertices swapped.
        EXPECT_EQ(ops.relabeled, g.n == 7 && g.edges().size() > 6);
        for (int m : ops.multiplicity) {
            EXPECT_EQ(m % 2, 0);
        }
        for (const auto &op : ops.operators) {
            EXPECT_NEAR(pauli_expectation(op, graph_state(g)), 1.0, 1e-12);
        }
    }
    EXPECT_EQ(paradox_operators(wheel_graph(7)).vertex_order, (std::vector<int>{0, 1, 2, 3, 4, 6, 5}));
}

TEST(graphstate, parity_failures_are_reported) {
    // Every ordering of a complete graph leaves a stabilizer with odd multiplicity.
    EXPECT_THROW(paradox_operators(complete_graph_spec(3)), std::runtime_error);
    EXPECT_THROW(paradox_operators(complete_graph_spec(5)), std::runtime_error);
    EXPECT_THROW(paradox_operators(path_graph(5)), std::invalid_argument);
    EXPECT_THROW(paradox_operators(star_graph(4)), std::invalid_argument);
}
