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

#include <map>
#include <string>
#include <vector>

#include "ctxconc/exclusivity_graph.hpp"

namespace ctxconc {

/// coefficient * <A B> for two-outcome (+1/-1) observables named a and b.
struct CorrelationTerm {
    std::string a;
    std::string b;
    double coefficient = 1;
};

/// sum_k c_k <A_k B_k> >= bound in every noncontextual model.
struct CorrelationInequality {
    std::vector<CorrelationTerm> terms;
    double bound = 0;
};

/// The six-term inequality <A1A2> + <A2A3> + <A3A4> + <A4A5> + <A5A1'> - <A1A1'> >= -4.
CorrelationInequality kcbs6_inequality();

struct PairEvent {
    std::string a;
    int value_a = 1;
    std::string b;
    int value_b = 1;
    int term = 0;  // index of the correlation term it came from

    std::string str() const;
};

/// sum_e weight_e P(e) <= bound. Each term contributes the two outcome pairs
/// that lower c <AB>: anticorrelated pairs for c > 0, correlated for c < 0.
/// Events are listed with the (+1 first) pair of every term, then the (-1
/// first) pair of every term.
struct ProbabilityForm {
    std::vector<PairEvent> events;
    std::vector<double> weights;
    double bound = 0;  // (sum |c| - inequality bound) / 2
    /// Events are exclusive when they assign different values to a shared observable.
    ExclusivityGraph graph;
};

ProbabilityForm correlation_to_probability(const CorrelationInequality &ineq);

/// Per-term probability of the retained outcome pairs given measured
/// correlations: (1 - E)/2 for c > 0, (1 + E)/2 for c < 0. Throws
/// std::invalid_argument for a correlation outside [-1, 1] or a missing term.
std::vector<double> mapped_term_probabilities(const CorrelationInequality &ineq, const std::vector<double> &correlations);
/// sum_k |c_k| P_k, the probability-form left-hand side.
double probability_lhs(const CorrelationInequality &ineq, const std::vector<double> &correlations);
/// sum_k c_k E_k recovered from a probability-form left-hand side.
double correlation_sum_from_lhs(const CorrelationInequality &ineq, double lhs);
/// (lhs - bound) / bound for the probability form.
double violation_ratio(const ProbabilityForm &form, double lhs);

}  // namespace ctxconc
