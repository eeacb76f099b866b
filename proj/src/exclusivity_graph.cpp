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

#include "ctxconc/exclusivity_graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ctxconc {

ExclusivityGraph::ExclusivityGraph(int n_vertices) : ExclusivityGraph(n_vertices, {}) {
}

ExclusivityGraph::ExclusivityGraph(int n_vertices, std::vector<std::pair<int, int>> edges) : n_(n_vertices) {
    if (n_vertices < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    for (auto &[a, b] : edges) {
        if (a == b) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        }
        if (a < 0 || b < 0 || a >= n_ || b >= n_) {
            throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        }
        if (a > b) {
            std::swap(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    index();
}

void ExclusivityGraph::index() {
    adj_.assign(n_, {});
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto &row : adj_) {
        std::sort(row.begin(), row.end());
    }
}

bool ExclusivityGraph::has_edge(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
        return false;
    }
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int ExclusivityGraph::degree(int v) const {
    return static_cast<int>(adj_.at(v).size());
}

std::vector<int> ExclusivityGraph::neighbors(int v) const {
    return adj_.at(v);
}

std::vector<std::vector<uint8_t>> ExclusivityGraph::adjacency() const {
    std::vector<std::vector<uint8_t>> out(n_, std::vector<uint8_t>(n_, 0));
    for (auto [a, b] : edges_) {
        out[a][b] = out[b][a] = 1;
    }
    return out;
}

ExclusivityGraph ExclusivityGraph::complement() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
        for (int b = a + 1; b < n_; ++b) {
            if (!has_edge(a, b)) {
                out.emplace_back(a, b);
            }
        }
    }
    return ExclusivityGraph(n_, std::move(out));
}

bool ExclusivityGraph::is_independent(const std::vector<int> &vertices) const {
    for (size_t a = 0; a < vertices.size(); ++a) {
        if (vertices[a] < 0 || vertices[a] >= n_) {
            return false;
        }
        for (size_t b = a + 1; b < vertices.size(); ++b) {
            if (vertices[a] == vertices[b] || has_edge(vertices[a], vertices[b])) {
                return false;
            }
        }
    }
    return true;
}

ExclusivityGraph build_graph(const ProjectorFamily &family, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (family.size() == 0) {
        throw std::invalid_argument("empty projector family");
    }
    const int n = static_cast<int>(family.size());
    CMatrix stacked = stack_columns(family.rays);
    Eigen::MatrixXd overlap = (stacked.adjoint() * stacked).cwiseAbs();
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (overlap(a, b) < tol) {
                edges.emplace_back(a, b);
            }
        }
    }
    ExclusivityGraph g(n, std::move(edges));
    g.labels = family.labels;
    return g;
}

ExclusivityGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            edges.emplace_back(a, b);
        }
    }
    return ExclusivityGraph(n, std::move(edges));
}

ExclusivityGraph empty_graph(int n) {
    return ExclusivityGraph(n);
}

ExclusivityGraph cycle_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    }
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < n; ++k) {
        edges.emplace_back(k, (k + 1) % n);
    }
    return ExclusivityGraph(n, std::move(edges));
}

ExclusivityGraph mobius_ladder(int two_m) {
    if (two_m < 6 || two_m % 2 != 0) {
        throw std::invalid_argument("a Mobius ladder needs an even vertex count of at least 6");
    }
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < two_m; ++k) {
        edges.emplace_back(k, (k + 1) % two_m);
        if (k < two_m / 2) {
            edges.emplace_back(k, k + two_m / 2);
        }
    }
    return ExclusivityGraph(two_m, std::move(edges));
}

nlohmann::json to_json(const ExclusivityGraph &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    nlohmann::json j = {{"n_vertices", g.n_vertices()}, {"edges", edges}};
    if (!g.labels.empty()) {
        j["labels"] = g.labels;
    }
    return j;
}

ExclusivityGraph graph_from_json(const nlohmann::json &j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("edges must be [i, j] pairs");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    ExclusivityGraph g(j.at("n_vertices").get<int>(), std::move(edges));
    if (j.contains("labels")) {
        g.labels = j.at("labels").get<std::vector<std::string>>();
        if (g.labels.size() != static_cast<size_t>(g.n_vertices())) {
            throw std::invalid_argument("labels must have one entry per vertex");
        }
    }
    return g;
}

void write_dimacs(std::ostream &out, const ExclusivityGraph &g) {
    out << "p edge " << g.n_vertices() << " " << g.n_edges() << "\n";
    for (auto [a, b] : g.edges()) {
        out << "e " << a + 1 << " " << b + 1 << "\n";
    }
}

ExclusivityGraph read_dimacs(std::istream &in) {
    std::string line;
    int n = -1;
    size_t declared = 0;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") {
            continue;
        }
        if (tag == "p") {
            std::string kind;
            if (!(ss >> kind >> n >> declared) || n < 0) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed problem line");
            }
        } else if (tag == "e") {
            int a, b;
            if (n < 0 || !(ss >> a >> b)) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed edge line");
            }
            edges.emplace_back(a - 1, b - 1);
        } else {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
        }
    }
    if (n < 0) {
        throw std::invalid_argument("missing problem line");
    }
    ExclusivityGraph g(n, std::move(edges));
    if (g.n_edges() != declared) {
        throw std::invalid_argument("edge count does not match the problem line");
    }
    return g;
}

RepresentationReport verify_representation(std::span<const CVector> rays, const ExclusivityGraph &g, double tol) {
    if (rays.size() != static_cast<size_t>(g.n_vertices())) {
        throw std::invalid_argument("need one ray per vertex");
    }
    RepresentationReport r;
    if (rays.empty()) {
        r.passed = true;
        return r;
    }
    CMatrix stacked = stack_columns(rays);
    Eigen::MatrixXd overlap = (stacked.adjoint() * stacked).cwiseAbs();
    for (int a = 0; a < g.n_vertices(); ++a) {
        for (int b = a + 1; b < g.n_vertices(); ++b) {
            double o = overlap(a, b);
            if (g.has_edge(a, b)) {
                if (o >= r.max_edge_overlap) {
                    if (o > r.max_edge_overlap || r.worst_edge.first < 0) {
                        r.worst_edge = {a, b};
                    }
                    r.max_edge_overlap = o;
                }
                if (o >= tol) {
                    r.violating_edges.emplace_back(a, b);
                }
            } else if (o < tol) {
                r.orthogonal_non_edges.emplace_back(a, b);
            }
        }
    }
    r.passed = r.violating_edges.empty();
    return r;
}

}  // namespace ctxconc
