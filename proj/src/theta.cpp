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

#include "ctxconc/theta.hpp"

#include <limits>

namespace ctxconc {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

double lambda_min(const MatrixXd &M) {
    return Eigen::SelfAdjointEigenSolver<MatrixXd>(M, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

double lambda_max(const MatrixXd &M) {
    VectorXd ev = Eigen::SelfAdjointEigenSolver<MatrixXd>(M, Eigen::EigenvaluesOnly).eigenvalues();
    return ev(ev.size() - 1);
}

struct Bracket {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    MatrixXd X;

    void offer_lower(double v, const MatrixXd &x) {
        if (v > lower) {
            lower = v;
            X = x;
        }
    }
    void offer_upper(double v) { upper = std::min(upper, v); }
};

}  // namespace

double theta_lower_from_x(const ExclusivityGraph &g, MatrixXd &X) {
    X = (X + X.transpose()) / 2;
    for (auto [a, b] : g.edges()) {
        X(a, b) = X(b, a) = 0;
    }
    double lmin = lambda_min(X);
    if (lmin < 0) {
        X.diagonal().array() -= lmin;
    }
    double tr = X.trace();
    if (!(tr > 0)) {
        return -std::numeric_limits<double>::infinity();
    }
    X /= tr;
    return X.sum();
}

double theta_upper_from_w(const ExclusivityGraph &g, MatrixXd W) {
    const int n = g.n_vertices();
    W = (W + W.transpose()) / 2;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) {
                W(a, b) = W(b, a) = -1;
            }
        }
    }
    double d = W.diagonal().maxCoeff();
    W.diagonal().setConstant(d);
    double lmin = lambda_min(W);
    return 1 + d + std::max(0.0, -lmin);
}

ThetaCertificate lovasz_theta(const ExclusivityGraph &g, const ThetaOptions &options) {
    const int n = g.n_vertices();
    if (n > kMaxThetaVertices) {
        throw std::invalid_argument("theta is limited to " + std::to_string(kMaxThetaVertices) + " vertices");
    }
    if (!(options.tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    ThetaCertificate cert;
    if (n == 0) {
        return cert;
    }
    if (n == 1) {
        cert.theta = cert.dual_bound = 1;
        cert.primal_psd = MatrixXd::Ones(1, 1);
        cert.formulation = "trivial";
        return cert;
    }

    const size_t non_edges = static_cast<size_t>(n) * (n - 1) / 2 - g.n_edges();
    const bool use_edges = g.n_edges() + 1 <= static_cast<size_t>(n - 1) + non_edges;

    SdpProblem prob;
    prob.n = n;
    SdpIterate start;
    Bracket bracket;
    std::function<bool(const SdpIterate &)> test;

    if (use_edges) {
        cert.formulation = "edges";
        prob.C = -MatrixXd::Ones(n, n);
        for (auto [a, b] : g.edges()) {
            SdpConstraint c;
            c.add_symmetric(a, b, 0.5);
            c.rhs = 0;
            prob.constraints.push_back(std::move(c));
        }
        SdpConstraint trace;
        for (int i = 0; i < n; ++i) {
            trace.add_symmetric(i, i, 1.0);
        }
        trace.rhs = 1;
        prob.constraints.push_back(std::move(trace));

        start.X = MatrixXd::Identity(n, n) / n;
        start.y = VectorXd::Zero(prob.constraints.size());
        start.y(start.y.size() - 1) = -(n + 1.0);
        start.Z = (n + 1.0) * MatrixXd::Identity(n, n) - MatrixXd::Ones(n, n);

        test = [&](const SdpIterate &it) {
            MatrixXd X = it.X;
            bracket.offer_lower(theta_lower_from_x(g, X), X);
            // For any edge multipliers, theta <= lambda_max(J + sum y_e A_e).
            MatrixXd M = MatrixXd::Ones(n, n);
            for (size_t e = 0; e < g.n_edges(); ++e) {
                auto [a, b] = g.edges()[e];
                M(a, b) += it.y(e) / 2;
                M(b, a) += it.y(e) / 2;
            }
            bracket.offer_upper(lambda_max(M));
            return bracket.upper - bracket.lower < options.tol;
        };
    } else {
        cert.formulation = "complement";
        prob.C = MatrixXd::Zero(n, n);
        prob.C(0, 0) = 1;
        for (int i = 1; i < n; ++i) {
            SdpConstraint c;
            c.add_symmetric(i, i, 1.0);
            c.add_symmetric(0, 0, -1.0);
            c.rhs = 0;
            prob.constraints.push_back(std::move(c));
        }
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (!g.has_edge(a, b)) {
                    SdpConstraint c;
                    c.add_symmetric(a, b, 0.5);
                    c.rhs = -1;
                    prob.constraints.push_back(std::move(c));
                }
            }
        }
        start.X = (n + 1.0) * MatrixXd::Identity(n, n) - MatrixXd::Ones(n, n);
        start.y = VectorXd::Zero(prob.constraints.size());
        start.y.head(n - 1).setConstant(-1.0 / n);
        start.Z = MatrixXd::Identity(n, n) / n;

        test = [&](const SdpIterate &it) {
            MatrixXd X = it.Z;
            bracket.offer_lower(theta_lower_from_x(g, X), X);
            bracket.offer_upper(theta_upper_from_w(g, it.X));
            return bracket.upper - bracket.lower < options.tol;
        };
    }

    SdpOptions sdp_options;
    sdp_options.max_iterations = options.max_iterations;
    sdp_options.converged = test;
    try {
        SdpResult r = solve_sdp(prob, start, sdp_options);
        cert.iterations = r.iterations;
    } catch (const SdpNonConvergence &e) {
        throw ThetaNonConvergence(std::string("theta did not converge: ") + e.what(), bracket.lower,
                                  bracket.upper);
    }
    cert.theta = bracket.lower;
    cert.dual_bound = bracket.upper;
    cert.gap = bracket.upper - bracket.lower;
    cert.primal_psd = std::move(bracket.X);
    return cert;
}

}  // namespace ctxconc
