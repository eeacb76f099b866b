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

inline constexpr int kMaxNchvVertices = 24;

/// Exhaustive search over deterministic noncontextual assignments: 0/1 values
/// per event with no edge carrying two 1s.
struct NchvReport {
    uint64_t assignments = 0;      // exclusivity-respecting assignments
    int max_total = 0;             // equals the independence number
    std::vector<int> max_witness;  // first assignment reaching max_total
    /// Assignments in which every context except the last sums to exactly 1.
    uint64_t saturating = 0;
    /// Largest last-context sum over the saturating assignments.
    int max_last_given_saturated = 0;
    /// True when saturation of the leading contexts forces the last context to 0.
    bool hardy_implication = false;
    /// Assignments in which every context sums to exactly 1.
    uint64_t fully_saturating = 0;
};

NchvReport nchv_enumerate(const ExclusivityGraph &g, const std::vector<std::vector<int>> &contexts);

}  // namespace ctxconc
