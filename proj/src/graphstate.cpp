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

#include "ctxconc/graphstate.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "ctxconc/mabk.hpp"

namespace ctxconc {

GraphSpec GraphSpec::from_edges(int n, const std::vector<std::pair<int, int>> &edges, std::optional<int> universal) {
    if (n < 1) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    GraphSpec g;
    g.n = n;
    g.adjacency.assign(n, std::vector<uint8_t>(n, 0));
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        }
        if (a == b) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        }
        g.adjacency[a][b] = g.adjacency[b][a] = 1;
    }
    g.universal_vertex = universal;
    return g;
}

std::vector<std::pair<int, int>> GraphSpec::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (adjacent(a, b)) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

std::optional<int> GraphSpec::find_universal() const {
    for (int v = 0; v < n; ++v) {
        bool all = true;
        for (int k = 0; k < n && all; ++k) {
            all = k == v || adjacent(v, k);
        }
        if (all) {
            return v;
        }
    }
    return std::nullopt;
}

void GraphSpec::validate() const {
    if (n < 3) {
        throw std::invalid_argument("graph states here need at least 3 qubits");
    }
    if (static_cast<int>(adjacency.size()) != n) {
        throw std::invalid_argument("adjacency matrix has the wrong size");
    }
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(adjacency[a].size()) != n) {
            throw std::invalid_argument("adjacency matrix has the wrong size");
        }
        if (adjacency[a][a] != 0) {
            throw std::invalid_argument("adjacency matrix has a nonzero diagonal");
        }
        for (int b = 0; b < n; ++b) {
            if (adjacency[a][b] != adjacency[b][a] || adjacency[a][b] > 1) {
                throw std::invalid_argument("adjacency matrix must be symmetric 0/1");
            }
        }
    }
    std::vector<bool> reached(n, false);
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int k = 0; k < n; ++k) {
            if (adjacent(v, k) && !reached[k]) {
                reached[k] = true;
                stack.push_back(k);
            }
        }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
        throw std::invalid_argument("graph is not connected");
    }
    if (universal_vertex) {
        int u = *universal_vertex;
        if (u < 0 || u >= n) {
            throw std::invalid_argument("universal vertex out of range");
        }
        for (int k = 0; k < n; ++k) {
            if (k != u && !adjacent(u, k)) {
                throw std::invalid_argument("vertex " + std::to_string(u) + " is not adjacent to vertex " +
                                            std::to_string(k) + " and cannot be universal");
            }
        }
    }
}

nlohmann::json to_json(const GraphSpec &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    nlohmann::json j = {{"n", g.n}, {"edges", edges}};
    if (g.universal_vertex) {
        j["universal"] = *g.universal_vertex;
    }
    return j;
}

GraphSpec graph_spec_from_json(const nlohmann::json &j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto &e : j.at("edges")) {
        if (e.size() != 2) {
            throw std::invalid_argument("edges must be [i, j] pairs");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::optional<int> universal;
    if (j.contains("universal") && !j.at("universal").is_null()) {
        universal = j.at("universal").get<int>();
    }
    GraphSpec g = GraphSpec::from_edges(j.at("n").get<int>(), edges, universal);
    g.validate();
    return g;
}

GraphSpec star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k < n; ++k) {
        edges.emplace_back(0, k);
    }
    return GraphSpec::from_edges(n, edges, 0);
}

GraphSpec wheel_graph(int n) {
    if (n < 4) {
        throw std::invalid_argument("a wheel needs a hub and a cycle of at least 3");
    }
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k < n; ++k) {
        edges.emplace_back(0, k);
        edges.emplace_back(k, k + 1 < n ? k + 1 : 1);
    }
    return GraphSpec::from_edges(n, edges, 0);
}

GraphSpec complete_graph_spec(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            edges.emplace_back(a, b);
        }
    }
    return GraphSpec::from_edges(n, edges);
}

GraphSpec path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k + 1 < n; ++k) {
        edges.emplace_back(k, k + 1);
    }
    return GraphSpec::from_edges(n, edges);
}

std::vector<PauliString> stabilizers(const GraphSpec &g) {
    g.validate();
    std::vector<PauliString> out;
    for (int j = 0; j < g.n; ++j) {
        std::vector<Pauli> letters(g.n, Pauli::I);
        letters[j] = Pauli::X;
        for (int k = 0; k < g.n; ++k) {
            if (g.adjacent(j, k)) {
                letters[k] = Pauli::Z;
            }
        }
        out.emplace_back(std::move(letters));
    }
    return out;
}

int joint_eigenspace_dimension(const std::vector<PauliString> &gens) {
    if (gens.empty() || gens.size() > 20) {
        throw std::invalid_argument("joint eigenspace check supports 1..20 generators");
    }
    const size_t n = gens[0].size();
    // Tr prod_j (I + S_j)/2 = 2^(n-m) #{T : prod_{j in T} S_j = +I}.
    int plus_identity = 0;
    for (uint32_t subset = 0; subset < (1u << gens.size()); ++subset) {
        PhasedPauli acc{PauliString::identity(n), 0};
        for (size_t j = 0; j < gens.size(); ++j) {
            if ((subset >> j) & 1) {
                PhasedPauli next = multiply_phased(acc.letters, gens[j]);
                next.quarter_turns = (next.quarter_turns + acc.quarter_turns) % 4;
                acc = next;
            }
        }
        if (acc.letters.is_identity() && acc.quarter_turns == 0) {
            ++plus_identity;
        }
    }
    const int shift = static_cast<int>(n) - static_cast<int>(gens.size());
    return shift >= 0 ? plus_identity << shift : plus_identity >> -shift;
}

CVector graph_state(const GraphSpec &g) {
    if (g.n > 10) {
        throw std::invalid_argument("dense graph states are limited to 10 qubits");
    }
    std::vector<PauliString> gens = stabilizers(g);
    if (joint_eigenspace_dimension(gens) != 1) {
        throw std::logic_error("stabilizers do not fix a unique state");
    }
    const Eigen::Index dim = Eigen::Index{1} << g.n;
    for (Eigen::Index b = 0; b < dim; ++b) {
        CVector v = CVector::Zero(dim);
        v(b) = 1;
        for (const auto &s : gens) {
            v = (v + apply_pauli(s, v)) / 2.0;
        }
        if (v.norm() > 1e-6) {
            return fix_global_phase(v.normalized());
        }
    }
    throw std::logic_error("projection onto the stabilized subspace vanished");
}

CVector apply_z_flips(const CVector &state, const std::vector<uint8_t> &flips) {
    std::vector<Pauli> letters;
    for (uint8_t f : flips) {
        letters.push_back(f ? Pauli::Z : Pauli::I);
    }
    return apply_pauli(PauliString(std::move(letters)), state);
}

namespace {

// Builds the operator list for a fixed vertex order; returns false if the
// parity condition fails.
bool try_order(const GraphSpec &g, const std::vector<int> &order, const std::vector<PauliString> &stabs,
               ParadoxOperators &out) {
    const int n = g.n;
    // One-based positions as in the construction.
    auto C = [&](int a, int b) { return g.adjacent(order[a - 1], order[b - 1]) ? 1 : 0; };
    auto theta = [&](int j) {
        int t = 1 + C(n, 2);
        for (int k = 2; k <= n - 1; ++k) {
            if (k != j) {
                t += C(k, k + 1);
            }
        }
        return t % 2;
    };
    auto S = [&](int pos) { return order[pos - 1]; };

    std::vector<std::vector<int>> factors;
    factors.push_back({S(1)});
    {
        std::vector<int> f;
        if (theta(n)) {
            f.push_back(S(1));
        }
        f.push_back(S(2));
        factors.push_back(f);
    }
    for (int j = 2; j <= n - 1; ++j) {
        std::vector<int> f;
        if (theta(j)) {
            f.push_back(S(1));
        }
        f.push_back(S(j));
        f.push_back(S(j + 1));
        factors.push_back(f);
    }
    {
        std::vector<int> f;
        if (theta(n)) {
            f.push_back(S(1));
        }
        f.push_back(S(n));
        factors.push_back(f);
    }

    std::vector<int> mult(n, 0);
    for (const auto &f : factors) {
        for (int v : f) {
            ++mult[v];
        }
    }
    for (int m : mult) {
        if (m % 2 != 0) {
            return false;
        }
    }

    out.operators.clear();
    for (const auto &f : factors) {
        PhasedPauli acc{PauliString::identity(n), 0};
        for (int v : f) {
            PhasedPauli next = multiply_phased(acc.letters, stabs[v]);
            next.quarter_turns = (next.quarter_turns + acc.quarter_turns) % 4;
            acc = next;
        }
        if (acc.quarter_turns % 2 != 0) {
            throw std::logic_error("paradox operator picked up an imaginary phase");
        }
        out.operators.emplace_back(acc.letters.letters(), acc.quarter_turns == 0 ? +1 : -1);
    }
    out.factors = std::move(factors);
    out.multiplicity = std::move(mult);
    out.vertex_order = order;
    return true;
}

}  // namespace

ParadoxOperators paradox_operators(const GraphSpec &g) {
    g.validate();
    if (g.n % 2 == 0) {
        throw std::invalid_argument("the GHZ-type paradox needs an odd number of qubits, got " + std::to_string(g.n));
    }
    std::vector<int> hubs;
    if (g.universal_vertex) {
        hubs.push_back(*g.universal_vertex);
    } else {
        for (int v = 0; v < g.n; ++v) {
            bool all = true;
            for (int k = 0; k < g.n && all; ++k) {
                all = k == v || g.adjacent(v, k);
            }
            if (all) {
                hubs.push_back(v);
            }
        }
    }
    if (hubs.empty()) {
        throw std::invalid_argument("graph has no universal vertex; the paradox construction needs one");
    }
    std::vector<PauliString> stabs = stabilizers(g);
    for (int hub : hubs) {
        std::vector<int> rest;
        for (int v = 0; v < g.n; ++v) {
            if (v != hub) {
                rest.push_back(v);
            }
        }
        do {
            std::vector<int> order{hub};
            order.insert(order.end(), rest.begin(), rest.end());
            ParadoxOperators out;
            if (try_order(g, order, stabs, out)) {
                out.relabeled = !std::is_sorted(order.begin(), order.end());
                return out;
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    throw std::runtime_error(
        "no vertex ordering gives every stabilizer an even multiplicity in the operator list");
}

std::vector<uint8_t> solve_flip_vector(const ParadoxOperators &ops, int n) {
    // Augmented rows over GF(2): variable bits then the right-hand side.
    std::vector<std::vector<uint8_t>> rows;
    for (const auto &f : ops.factors) {
        std::vector<uint8_t> row(n + 1, 0);
        for (int v : f) {
            row[v] ^= 1;
        }
        row[n] = 1;
        rows.push_back(std::move(row));
    }
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int c = 0; c < n && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && !rows[p][c]) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        for (size_t q = 0; q < rows.size(); ++q) {
            if (q != r && rows[q][c]) {
                for (int t = 0; t <= n; ++t) {
                    rows[q][t] ^= rows[r][t];
                }
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t q = r; q < rows.size(); ++q) {
        if (rows[q][n]) {
            throw std::runtime_error("flip-vector elimination is infeasible; the operator list is malformed");
        }
    }
    std::vector<uint8_t> f(n, 0);
    for (size_t q = 0; q < r; ++q) {
        f[pivot_col[q]] = rows[q][n];
    }
    return f;
}

ModifiedState modified_state(const GraphSpec &g, const ParadoxOperators &ops) {
    ModifiedState out;
    out.flip_vector = solve_flip_vector(ops, g.n);
    out.state = apply_z_flips(graph_state(g), out.flip_vector);
    return out;
}

ModifiedState modified_state(const GraphSpec &g) {
    return modified_state(g, paradox_operators(g));
}

ProjectorFamily paradox_event_family(const ParadoxOperators &ops, int n) {
    if (n < 1 || n > 12) {
        throw std::invalid_argument("event families are limited to 12 qubits");
    }
    ProjectorFamily fam;
    fam.ambient_dim = 1 << n;
    for (const auto &op : ops.operators) {
        std::vector<Pauli> letters(op.letters());
        for (auto &p : letters) {
            if (p == Pauli::I) {
                p = Pauli::Z;
            }
        }
        std::vector<int> ctx;
        for (uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
            std::vector<int> signs(n);
            int product = op.sign();
            std::string label;
            for (int q = 0; q < n; ++q) {
                signs[q] = ((pattern >> (n - 1 - q)) & 1) ? -1 : +1;
                if (op[q] != Pauli::I) {
                    product *= signs[q];
                }
                label += signs[q] > 0 ? '+' : '-';
                label += static_cast<char>(std::tolower(pauli_char(op[q])));
            }
            if (product == +1) {
                ctx.push_back(static_cast<int>(fam.rays.size()));
                fam.rays.push_back(sign_ray(letters, signs));
                fam.labels.push_back(label);
            }
        }
        fam.contexts.push_back(std::move(ctx));
    }
    return fam;
}

ProjectorFamily paradox_event_family(const GraphSpec &g) {
    return paradox_event_family(paradox_operators(g), g.n);
}

LhvSearch lhv_search(const std::vector<PauliString> &operators) {
    std::map<std::pair<size_t, Pauli>, int> symbol;
    std::vector<uint64_t> masks;
    std::vector<int> parity;
    for (const auto &op : operators) {
        uint64_t mask = 0;
        for (size_t q = 0; q < op.size(); ++q) {
            if (op[q] == Pauli::I) {
                continue;
            }
            auto [it, inserted] = symbol.try_emplace({q, op[q]}, static_cast<int>(symbol.size()));
            mask |= uint64_t{1} << it->second;
        }
        masks.push_back(mask);
        parity.push_back(op.sign() < 0 ? 1 : 0);
    }
    LhvSearch out;
    out.symbols = static_cast<int>(symbol.size());
    if (out.symbols > 30) {
        throw std::invalid_argument("too many local symbols for exhaustive search");
    }
    out.assignments = uint64_t{1} << out.symbols;
    // Bit s of x set means symbol s takes the value -1.
    for (uint64_t x = 0; x < out.assignments; ++x) {
        bool ok = true;
        for (size_t k = 0; k < masks.size() && ok; ++k) {
            ok = (std::popcount(x & masks[k]) & 1) == parity[k];
        }
        if (ok) {
            ++out.satisfying;
        }
    }
    out.feasible = out.satisfying > 0;
    return out;
}

ParadoxBundle build_paradox(const GraphSpec &g, double rank_tol) {
    ParadoxBundle b;
    b.ops = paradox_operators(g);
    b.graph_state = graph_state(g);
    b.modified = modified_state(g, b.ops);
    b.events = paradox_event_family(b.ops, g.n);
    for (const auto &op : b.ops.operators) {
        b.expect_graph.push_back(pauli_expectation(op, b.graph_state));
        b.expect_modified.push_back(pauli_expectation(op, b.modified.state));
    }
    for (size_t k = 0; k < b.events.size(); ++k) {
        b.max_event_probability = std::max(b.max_event_probability, b.events.probability(k, b.modified.state));
    }
    b.lhv = lhv_search(b.ops.operators);
    b.event_rank = numeric_rank(b.events.rays, rank_tol);
    return b;
}

}  // namespace ctxconc
