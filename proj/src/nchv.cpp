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

#include "ctxconc/nchv.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ctxconc {

namespace {

struct Enumerator {
    int n;
    std::vector<uint32_t> nbr;
    std::vector<uint32_t> ctx_mask;
    NchvReport report;

    void visit(uint32_t chosen) {
        ++report.assignments;
        int total = std::popcount(chosen);
        if (total > report.max_total) {
            report.max_total = total;
            report.max_witness.clear();
            for (int v = 0; v < n; ++v) {
                if ((chosen >> v) & 1) {
                    report.max_witness.push_back(v);
                }
            }
        }
        bool leading = true;
        bool all = true;
        for (size_t c = 0; c < ctx_mask.size(); ++c) {
            bool one = std::popcount(chosen & ctx_mask[c]) == 1;
            all = all && one;
            if (c + 1 < ctx_mask.size()) {
                leading = leading && one;
            }
        }
        if (leading) {
            ++report.saturating;
            int last = std::popcount(chosen & ctx_mask.back());
            report.max_last_given_saturated = std::max(report.max_last_given_saturated, last);
        }
        if (all) {
            ++report.fully_saturating;
        }
    }

    // Every independent set is visited once, built by increasing vertex index.
    void recurse(int v, uint32_t chosen, uint32_t blocked) {
        if (v == n) {
            visit(chosen);
            return;
        }
        recurse(v + 1, chosen, blocked);
        if (!((blocked >> v) & 1)) {
            recurse(v + 1, chosen | (uint32_t{1} << v), blocked | nbr[v]);
        }
    }
};

}  // namespace

NchvReport nchv_enumerate(const ExclusivityGraph &g, const std::vector<std::vector<int>> &contexts) {
    const int n = g.n_vertices();
    if (n > kMaxNchvVertices) {
        throw std::invalid_argument("NCHV enumeration is limited to " + std::to_string(kMaxNchvVertices) +
                                    " vertices, got " + std::to_string(n));
    }
    if (contexts.empty()) {
        throw std::invalid_argument("at least one context is required");
    }
    Enumerator e;
    e.n = n;
    e.nbr.assign(n, 0);
    for (auto [a, b] : g.edges()) {
        e.nbr[a] |= uint32_t{1} << b;
        e.nbr[b] |= uint32_t{1} << a;
    }
    uint32_t used = 0;
    for (const auto &ctx : contexts) {
        uint32_t mask = 0;
        for (int v : ctx) {
            if (v < 0 || v >= n) {
                throw std::invalid_argument("context vertex out of range: " + std::to_string(v));
            }
            if ((used >> v) & 1) {
                throw std::invalid_argument("contexts are not disjoint at vertex " + std::to_string(v));
            }
            used |= uint32_t{1} << v;
            mask |= uint32_t{1} << v;
        }
        e.ctx_mask.push_back(mask);
    }
    e.recurse(0, 0, 0);
    e.report.hardy_implication = e.report.saturating > 0 && e.report.max_last_given_saturated == 0;
    return e.report;
}

}  // namespace ctxconc
