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

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace ctxconc {

/// One nonzero of a symmetric constraint matrix. Off-diagonal entries must be
/// listed in both orientations.
struct SdpEntry {
    int row;
    int col;
    double value;
};

struct SdpConstraint {
    std::vector<SdpEntry> entries;
    double rhs = 0;

    /// Adds w at (i, j) and (j, i), or w at (i, i).
    void add_symmetric(int i, int j, double w);
    double dot(const Eigen::MatrixXd &X) const;
};

/// min <C, X> subject to <A_p, X> = b_p, X >= 0; dual
/// max b'y subject to Z = C - sum_p y_p A_p >= 0.
struct SdpProblem {
    int n = 0;
    Eigen::MatrixXd C;
    std::vector<SdpConstraint> constraints;
};

struct SdpIterate {
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
    Eigen::MatrixXd Z;
};

struct SdpOptions {
    int max_iterations = 100;
    double step_fraction = 0.95;
    /// Stops when |primal - dual objective| falls below this and both
    /// residuals are below feasibility_tol, unless a custom test is supplied.
    double gap_tol = 1e-8;
    double feasibility_tol = 1e-9;
    /// Returns true once the caller is satisfied with the iterate.
    std::function<bool(const SdpIterate &)> converged;
};

struct SdpResult {
    SdpIterate iterate;
    double primal_objective = 0;
    double dual_objective = 0;
    double primal_residual = 0;
    double dual_residual = 0;
    int iterations = 0;
};

class SdpNonConvergence : public std::runtime_error {
   public:
    SdpNonConvergence(const std::string &what, SdpIterate last, int iterations)
        : std::runtime_error(what), last_iterate(std::move(last)), iterations(iterations) {}
    SdpIterate last_iterate;
    int iterations;
};

/// Primal-dual interior-point method with the HKM direction and a Mehrotra
/// predictor-corrector step. `start` must be strictly positive definite in X
/// and Z; residuals of an infeasible start are driven to zero.
SdpResult solve_sdp(const SdpProblem &problem, const SdpIterate &start, const SdpOptions &options = {});

}  // namespace ctxconc
