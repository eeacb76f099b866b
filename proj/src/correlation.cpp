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

#include "ctxconc/correlation.hpp"

#include <cmath>
#include <stdexcept>

namespace ctxconc {

CorrelationInequality kcbs6_inequality() {
    CorrelationInequality q;
    q.terms = {{"A1", "A2", 1}, {"A2", "A3", 1}, {"A3", "A4", 1}, {"A4", "A5", 1}, {"A5", "A1'", 1}, {"A1'", "A1", -1}};
    q.bound = -4;
    return q;
}

std::string PairEvent::str() const {
    return a + "=" + (value_a > 0 ? "+1" : "-1") + "," + b + "=" + (value_b > 0 ? "+1" : "-1");
}

ProbabilityForm correlation_to_probability(const CorrelationInequality &ineq) {
    if (ineq.terms.empty()) {
        throw std::invalid_argument("inequality has no terms");
    }
    ProbabilityForm f;
    double abs_sum = 0;
    for (const auto &t : ineq.terms) {
        if (t.coefficient == 0 || t.a == t.b) {
            throw std::invalid_argument("terms need a nonzero coefficient and two distinct observables");
        }
        abs_sum += std::abs(t.coefficient);
    }
    for (int lead : {+1, -1}) {
        for (size_t k = 0; k < ineq.terms.size(); ++k) {
            const auto &t = ineq.terms[k];
            int other = t.coefficient > 0 ? -lead : lead;
            f.events.push_back({t.a, lead, t.b, other, static_cast<int>(k)});
            f.weights.push_back(std::abs(t.coefficient));
        }
    }
    f.bound = (abs_sum - ineq.bound) / 2;

    auto value_of = [](const PairEvent &e, const std::string &obs, int &v) {
        if (e.a == obs) {
            v = e.value_a;
            return true;
        }
        if (e.b == obs) {
            v = e.value_b;
            return true;
        }
        return false;
    };
    std::vector<std::pair<int, int>> edges;
    const int n = static_cast<int>(f.events.size());
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            bool exclusive = false;
            for (const std::string &obs : {f.events[x].a, f.events[x].b}) {
                int vx = 0, vy = 0;
                value_of(f.events[x], obs, vx);
                if (value_of(f.events[y], obs, vy) && vx != vy) {
                    exclusive = true;
                }
            }
            if (exclusive) {
                edges.emplace_back(x, y);
            }
        }
    }
    f.graph = ExclusivityGraph(n, std::move(edges));
    for (const auto &e : f.events) {
        f.graph.labels.push_back(e.str());
    }
    return f;
}

std::vector<double> mapped_term_probabilities(const CorrelationInequality &ineq, const std::vector<double> &correlations) {
    if (correlations.size() != ineq.terms.size()) {
        throw std::invalid_argument("need one correlation per term");
    }
    std::vector<double> out;
    for (size_t k = 0; k < correlations.size(); ++k) {
        const double e = correlations[k];
        if (!(e >= -1 && e <= 1)) {
            throw std::invalid_argument("correlation " + std::to_string(e) + " outside [-1, 1]");
        }
        out.push_back(ineq.terms[k].coefficient > 0 ? (1 - e) / 2 : (1 + e) / 2);
    }
    return out;
}

double probability_lhs(const CorrelationInequality &ineq, const std::vector<double> &correlations) {
    std::vector<double> p = mapped_term_probabilities(ineq, correlations);
    double lhs = 0;
    for (size_t k = 0; k < p.size(); ++k) {
        lhs += std::abs(ineq.terms[k].coefficient) * p[k];
    }
    return lhs;
}

double correlation_sum_from_lhs(const CorrelationInequality &ineq, double lhs) {
    double abs_sum = 0;
    for (const auto &t : ineq.terms) {
        abs_sum += std::abs(t.coefficient);
    }
    return abs_sum - 2 * lhs;
}

double violation_ratio(const ProbabilityForm &form, double lhs) {
    if (form.bound == 0) {
        throw std::invalid_argument("zero classical bound");
    }
    return (lhs - form.bound) / form.bound;
}

}  // namespace ctxconc
