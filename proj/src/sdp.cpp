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

#include "ctxconc/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ctxconc {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void SdpConstraint::add_symmetric(int i, int j, double w) {
    entries.push_back({i, j, w});
    if (i != j) {
        entries.push_back({j, i, w});
    }
}

double SdpConstraint::dot(const MatrixXd &X) const {
    double s = 0;
    for (const auto &e : entries) {
        s += e.value * X(e.row, e.col);
    }
    return s;
}

namespace {

MatrixXd apply_adjoint(const SdpProblem &p, const VectorXd &y) {
    MatrixXd out = MatrixXd::Zero(p.n, p.n);
    for (size_t k = 0; k < p.constraints.size(); ++k) {
        for (const auto &e : p.constraints[k].entries) {
            out(e.row, e.col) += y(k) * e.value;
        }
    }
    return out;
}

// sum_{(a,b,w) in A_p} w M(a,b) for every constraint, with M not necessarily symmetric.
VectorXd apply_operator(const SdpProblem &p, const MatrixXd &M) {
    VectorXd out(p.constraints.size());
    for (size_t k = 0; k < p.constraints.size(); ++k) {
        // <A, M> = Tr(A M) = sum A(a,b) M(b,a).
        double s = 0;
        for (const auto &e : p.constraints[k].entries) {
            s += e.value * M(e.col, e.row);
        }
        out(k) = s;
    }
    return out;
}

// Largest step in [0, 1] keeping M + t dM positive definite, scaled by fraction.
double step_length(const Eigen::LLT<MatrixXd> &chol, const MatrixXd &dM, double fraction) {
    MatrixXd tmp = chol.matrixL().solve(dM);
    MatrixXd S = chol.matrixL().solve(tmp.transpose()).transpose();
    S = (S + S.transpose()) / 2;
    double lmin = Eigen::SelfAdjointEigenSolver<MatrixXd>(S, Eigen::EigenvaluesOnly).eigenvalues()(0);
    if (lmin >= 0) {
        return 1.0;
    }
    return std::min(1.0, fraction * (-1.0 / lmin));
}

}  // namespace

SdpResult solve_sdp(const SdpProblem &problem, const SdpIterate &start, const SdpOptions &options) {
    const int n = problem.n;
    const Eigen::Index m = static_cast<Eigen::Index>(problem.constraints.size());
    if (problem.C.rows() != n || problem.C.cols() != n) {
        throw std::invalid_argument("cost matrix has the wrong size");
    }
    VectorXd b(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        b(k) = problem.constraints[k].rhs;
    }

    MatrixXd X = start.X;
    VectorXd y = start.y;
    MatrixXd Z = start.Z;
    MatrixXd schur(m, m);

    SdpResult result;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        Eigen::LLT<MatrixXd> cholX(X);
        Eigen::LLT<MatrixXd> cholZ(Z);
        if (cholX.info() != Eigen::Success || cholZ.info() != Eigen::Success) {
            throw SdpNonConvergence("iterate lost positive definiteness", {X, y, Z}, iter);
        }
        MatrixXd Zi = cholZ.solve(MatrixXd::Identity(n, n));
        Zi = (Zi + Zi.transpose()) / 2;

        VectorXd rp = b;
        for (Eigen::Index k = 0; k < m; ++k) {
            rp(k) -= problem.constraints[k].dot(X);
        }
        MatrixXd Rd = problem.C - Z - apply_adjoint(problem, y);

        result.primal_objective = (problem.C.cwiseProduct(X)).sum();
        result.dual_objective = b.dot(y);
        result.primal_residual = rp.lpNorm<Eigen::Infinity>();
        result.dual_residual = Rd.cwiseAbs().maxCoeff();
        result.iterations = iter;
        SdpIterate current{X, y, Z};
        bool done = options.converged
                        ? options.converged(current)
                        : std::abs(result.primal_objective - result.dual_objective) < options.gap_tol &&
                              result.primal_residual < options.feasibility_tol &&
                              result.dual_residual < options.feasibility_tol;
        if (done) {
            result.iterate = std::move(current);
            return result;
        }

        // Schur complement M_pq = Tr(A_p X A_q Z^-1), lower triangle only.
        for (Eigen::Index p = 0; p < m; ++p) {
            const auto &ep = problem.constraints[p].entries;
            for (Eigen::Index q = 0; q <= p; ++q) {
                double s = 0;
                for (const auto &e : ep) {
                    for (const auto &f : problem.constraints[q].entries) {
                        s += e.value * f.value * X(e.col, f.row) * Zi(f.col, e.row);
                    }
                }
                schur(p, q) = s;
            }
        }
        Eigen::LLT<Eigen::Ref<MatrixXd>> cholM(schur);
        if (cholM.info() != Eigen::Success) {
            throw SdpNonConvergence("Schur complement is not positive definite", {X, y, Z}, iter);
        }

        const double mu = X.cwiseProduct(Z).sum() / n;
        MatrixXd XRdZi = X * Rd * Zi;

        // One HKM solve for a given centring target and second-order term.
        auto direction = [&](double sigma_mu, const MatrixXd *second, MatrixXd &dX, VectorXd &dy, MatrixXd &dZ) {
            MatrixXd extra = XRdZi;
            if (second) {
                extra += *second;
            }
            VectorXd rhs = b - sigma_mu * apply_operator(problem, Zi) + apply_operator(problem, extra);
            dy = cholM.solve(rhs);
            dZ = Rd - apply_adjoint(problem, dy);
            MatrixXd hat = sigma_mu * Zi - X - X * dZ * Zi;
            if (second) {
                hat -= *second;
            }
            dX = (hat + hat.transpose()) / 2;
        };

        MatrixXd dXa, dZa;
        VectorXd dya;
        direction(0.0, nullptr, dXa, dya, dZa);
        double ap = step_length(cholX, dXa, 1.0);
        double ad = step_length(cholZ, dZa, 1.0);
        double mu_aff = (X + ap * dXa).cwiseProduct(Z + ad * dZa).sum() / n;
        double sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3);

        MatrixXd second = dXa * dZa * Zi;
        MatrixXd dX, dZ;
        VectorXd dy;
        direction(sigma * mu, &second, dX, dy, dZ);
        ap = step_length(cholX, dX, options.step_fraction);
        ad = step_length(cholZ, dZ, options.step_fraction);

        X += ap * dX;
        y += ad * dy;
        Z += ad * dZ;
        X = (X + X.transpose()) / 2;
        Z = (Z + Z.transpose()) / 2;
    }
    throw SdpNonConvergence("no convergence after " + std::to_string(options.max_iterations) + " iterations",
                            {X, y, Z}, options.max_iterations);
}

}  // namespace ctxconc
