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

#include "ctxconc/projector_family.hpp"

#include <stdexcept>

namespace ctxconc {

CMatrix ProjectorFamily::projector(size_t k) const {
    const CVector &v = rays.at(k);
    return v * v.adjoint();
}

double ProjectorFamily::probability(size_t k, const CVector &psi) const {
    const CVector &v = rays.at(k);
    if (v.size() != psi.size()) {
        throw std::invalid_argument("state dimension does not match the family");
    }
    return std::norm(v.dot(psi));
}

void ProjectorFamily::validate(double tol) const {
    if (ambient_dim < 1) {
        throw std::invalid_argument("ambient_dim must be positive");
    }
    if (!labels.empty() && labels.size() != rays.size()) {
        throw std::invalid_argument("labels must be empty or one per projector");
    }
    for (size_t k = 0; k < rays.size(); ++k) {
        if (rays[k].size() != ambient_dim) {
            throw std::invalid_argument("projector " + std::to_string(k) + " has the wrong dimension");
        }
        if (std::abs(rays[k].squaredNorm() - 1.0) > tol) {
            throw std::invalid_argument("projector " + std::to_string(k) + " ray is not normalized");
        }
    }
    std::vector<bool> seen(rays.size(), false);
    for (const auto &ctx : contexts) {
        for (int k : ctx) {
            if (k < 0 || static_cast<size_t>(k) >= rays.size()) {
                throw std::invalid_argument("context index out of range: " + std::to_string(k));
            }
            if (seen[k]) {
                throw std::invalid_argument("index " + std::to_string(k) + " appears in two contexts");
            }
            seen[k] = true;
        }
        for (size_t a = 0; a < ctx.size(); ++a) {
            for (size_t b = a + 1; b < ctx.size(); ++b) {
                if (std::abs(rays[ctx[a]].dot(rays[ctx[b]])) > tol) {
                    throw std::invalid_argument("projectors " + std::to_string(ctx[a]) + " and " +
                                                std::to_string(ctx[b]) + " share a context but are not exclusive");
                }
            }
        }
    }
}

nlohmann::json to_json(const ProjectorFamily &family) {
    nlohmann::json projectors = nlohmann::json::array();
    for (size_t k = 0; k < family.rays.size(); ++k) {
        nlohmann::json ray = nlohmann::json::array();
        for (Eigen::Index e = 0; e < family.rays[k].size(); ++e) {
            ray.push_back({family.rays[k](e).real(), family.rays[k](e).imag()});
        }
        nlohmann::json entry = {{"ray", ray}};
        if (!family.labels.empty()) {
            entry["label"] = family.labels[k];
        }
        projectors.push_back(std::move(entry));
    }
    return {{"ambient_dim", family.ambient_dim}, {"contexts", family.contexts}, {"projectors", projectors}};
}

ProjectorFamily family_from_json(const nlohmann::json &j) {
    ProjectorFamily f;
    f.ambient_dim = j.at("ambient_dim").get<int>();
    if (j.contains("contexts")) {
        f.contexts = j.at("contexts").get<std::vector<std::vector<int>>>();
    }
    bool any_label = false;
    for (const auto &p : j.at("projectors")) {
        const auto &ray = p.at("ray");
        CVector v(static_cast<Eigen::Index>(ray.size()));
        for (size_t e = 0; e < ray.size(); ++e) {
            const auto &entry = ray[e];
            if (entry.is_number()) {
                v(e) = entry.get<double>();
            } else {
                if (entry.size() != 2) {
                    throw std::invalid_argument("ray entries must be numbers or [re, im] pairs");
                }
                v(e) = Complex(entry[0].get<double>(), entry[1].get<double>());
            }
        }
        f.rays.push_back(std::move(v));
        f.labels.push_back(p.value("label", std::string()));
        any_label = any_label || p.contains("label");
    }
    if (!any_label) {
        f.labels.clear();
    }
    f.validate();
    return f;
}

}  // namespace ctxconc
