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

#include <Eigen/Dense>

#include "ctxconc/exclusivity_graph.hpp"
#include "ctxconc/sdp.hpp"

namespace ctxconc {

inline constexpr int kMaxThetaVertices = 512;

struct ThetaOptions {
    /// Required width of the certified bracket [<J,X>, dual_bound].
    double tol = 1e-7;
    int max_iterations = 100;
};

struct ThetaCertificate {
    double theta = 0;            // <J, X> of the feasible primal matrix
    Eigen::MatrixXd primal_psd;  // X with X_ij = 0 on edges, Tr X = 1, X >= 0
    double dual_bound = 0;       // value of an exactly feasible dual point
    double gap = 0;              // dual_bound - theta
    int iterations = 0;
    std::string formulation;     // "edges" or "complement"
};

class ThetaNonConvergence : public std::runtime_error {
   public:
    ThetaNonConvergence(const std::string &what, double lower, double upper)
        : std::runtime_error(what), lower_bound(lower), upper_bound(upper) {}
    double lower_bound;
    double upper_bound;
};

/// Lovasz theta, max <J,X> over X >= 0 with Tr X = 1 and X_ij = 0 on edges.
///
/// Two equivalent programs are available: the one above with a constraint per
/// edge, and min { t : W >= 0, W_ii = t - 1, W_ij = -1 off the edges }, whose
/// dual slack is a feasible X. The one with fewer constraints is solved. Both
/// start from strictly feasible points, and each iterate is rounded to exactly
/// feasible primal and dual points so the returned bracket is certified.
ThetaCertificate lovasz_theta(const ExclusivityGraph &g, const ThetaOptions &options = {});

/// Smallest feasible-dual value obtainable from a matrix W with W_ij = -1
/// forced on non-edges: 1 + max_i W_ii + max(0, -lambda_min) after the fix-up.
double theta_upper_from_w(const ExclusivityGraph &g, Eigen::MatrixXd W);
/// Projects X onto {X_ij = 0 on edges, Tr X = 1, X >= 0} and returns <J, X>.
double theta_lower_from_x(const ExclusivityGraph &g, Eigen::MatrixXd &X);

}  // namespace ctxconc
