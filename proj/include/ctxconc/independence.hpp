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
#include <vector>

#include "ctxconc/exclusivity_graph.hpp"

namespace ctxconc {

struct AlphaOptions {
    double budget_seconds = 60.0;
};

struct AlphaCertificate {
    int alpha = 0;                // size of the best independent set found
    std::vector<int> witness_set; // sorted vertex list
    bool certified = false;       // search completed within budget
    int upper_bound = 0;          // equals alpha when certified
    uint64_t nodes = 0;
    double seconds = 0;
};

/// Maximum independent set, found as a maximum clique of the complement by
/// bitset branch and bound with a greedy colouring bound. Vertices are
/// processed in non-increasing complement degree, ties by index, so the
/// witness is deterministic.
AlphaCertificate independence_number(const ExclusivityGraph &g, const AlphaOptions &options = {});

}  // namespace ctxconc
