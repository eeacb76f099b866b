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

#include <string>
#include <vector>

#include "ctxconc/linalg.hpp"
#include "json.hpp"

namespace ctxconc {

/// An indexed set of rank-1 projectors |v_k><v_k| grouped into contexts of
/// mutually exclusive events.
///
/// Only the unit rays are stored. A 4096-member family in dimension 128 would
/// need a gigabyte as dense matrices, and every consumer only needs overlaps.
struct ProjectorFamily {
    int ambient_dim = 0;
    std::vector<CVector> rays;
    std::vector<std::vector<int>> contexts;
    std::vector<std::string> labels;  // empty or one per ray

    size_t size() const { return rays.size(); }
    CMatrix projector(size_t k) const;
    /// <psi|Pi_k|psi> = |<v_k|psi>|^2.
    double probability(size_t k, const CVector &psi) const;

    /// Checks the documented invariants and throws std::invalid_argument on
    /// the first violation: unit rays of the ambient dimension, contexts
    /// partitioning a subset of indices, orthogonality inside each context.
    void validate(double tol = kProjectorTol) const;
};

nlohmann::json to_json(const ProjectorFamily &family);
ProjectorFamily family_from_json(const nlohmann::json &j);

}  // namespace ctxconc
