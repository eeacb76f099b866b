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

#include "ctxconc/linalg.hpp"

#include <stdexcept>

namespace ctxconc {

namespace {

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void require_positive_tol(double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
}

}  // namespace

CMatrix tensor(std::span<const CMatrix> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("empty tensor product");
    }
    for (const auto &f : factors) {
        if (f.rows() != f.cols() || f.rows() == 0) {
            throw std::invalid_argument("tensor factors must be square and nonempty");
        }
    }
    CMatrix out = factors[0];
    for (size_t k = 1; k < factors.size(); ++k) {
        out = kron(out, factors[k]);
    }
    return out;
}

CMatrix tensor(std::initializer_list<CMatrix> factors) {
    return tensor(std::span<const CMatrix>(factors.begin(), factors.size()));
}

CVector tensor_vectors(std::span<const CVector> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("empty tensor product");
    }
    CVector out = factors[0];
    for (size_t k = 1; k < factors.size(); ++k) {
        const CVector &f = factors[k];
        CVector next(out.size() * f.size());
        for (Eigen::Index i = 0; i < out.size(); ++i) {
            next.segment(i * f.size(), f.size()) = out(i) * f;
        }
        out = std::move(next);
    }
    return out;
}

double max_abs(const CMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix &m, double tol) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) < tol;
}

bool is_projector(const CMatrix &m, double tol) {
    return is_hermitian(m, tol) && max_abs(m * m - m) < tol;
}

bool is_ket(const CVector &v, double tol) {
    return v.size() >= 1 && std::abs(v.norm() - 1.0) < tol;
}

double expectation(const CVector &v, const CMatrix &m) {
    if (m.rows() != v.size() || m.cols() != v.size()) {
        throw std::invalid_argument("dimension mismatch in expectation");
    }
    return v.dot(m * v).real();
}

CMatrix stack_columns(std::span<const CVector> vectors) {
    if (vectors.empty()) {
        throw std::invalid_argument("no vectors given");
    }
    const Eigen::Index dim = vectors[0].size();
    CMatrix out(dim, static_cast<Eigen::Index>(vectors.size()));
    for (size_t k = 0; k < vectors.size(); ++k) {
        if (vectors[k].size() != dim) {
            throw std::invalid_argument("vectors do not share a common dimension");
        }
        out.col(static_cast<Eigen::Index>(k)) = vectors[k];
    }
    return out;
}

SpanDecomposition span_decomposition(std::span<const CVector> vectors, double tol) {
    require_positive_tol(tol);
    CMatrix stacked = stack_columns(vectors);
    const Eigen::Index dim = stacked.rows();

    Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeFullU);
    const Eigen::VectorXd &sv = svd.singularValues();

    SpanDecomposition out;
    out.singular_values.assign(sv.data(), sv.data() + sv.size());
    const double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > cutoff) {
            ++rank;
        }
    }
    out.rank = rank;
    out.span_basis = svd.matrixU().leftCols(rank);
    out.kernel_basis = svd.matrixU().rightCols(dim - rank);
    return out;
}

int numeric_rank(std::span<const CVector> vectors, double tol) {
    return span_decomposition(vectors, tol).rank;
}

std::vector<CVector> nullspace(std::span<const CVector> vectors, double tol) {
    SpanDecomposition d = span_decomposition(vectors, tol);
    std::vector<CVector> out;
    for (Eigen::Index k = 0; k < d.kernel_basis.cols(); ++k) {
        out.push_back(fix_global_phase(d.kernel_basis.col(k)));
    }
    return out;
}

CVector fix_global_phase(const CVector &v) {
    if (v.size() == 0) {
        return v;
    }
    Eigen::Index best = 0;
    v.cwiseAbs().maxCoeff(&best);
    const double mag = std::abs(v(best));
    if (mag == 0) {
        return v;
    }
    return v * (std::conj(v(best)) / mag);
}

}  // namespace ctxconc
