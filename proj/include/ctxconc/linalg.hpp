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

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ctxconc {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kKetNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kProjectorTol = 1e-10;
/// Default relative cutoff for numeric rank (singular values below tol * sigma_max are dropped).
inline constexpr double kDefaultRankTol = 1e-9;

/// Kronecker product of square factors, first factor most significant.
CMatrix tensor(std::span<const CMatrix> factors);
CMatrix tensor(std::initializer_list<CMatrix> factors);
/// Kronecker product of column vectors.
CVector tensor_vectors(std::span<const CVector> factors);

double max_abs(const CMatrix &m);
bool is_hermitian(const CMatrix &m, double tol = kHermitianTol);
bool is_projector(const CMatrix &m, double tol = kProjectorTol);
bool is_ket(const CVector &v, double tol = kKetNormTol);

/// Expectation <v|M|v>; M is assumed Hermitian so the imaginary part is dropped.
double expectation(const CVector &v, const CMatrix &m);

/// Orthogonal split of C^dim into span(vectors) and its complement, from one SVD.
struct SpanDecomposition {
    int rank = 0;
    std::vector<double> singular_values;
    CMatrix span_basis;    // dim x rank, orthonormal columns
    CMatrix kernel_basis;  // dim x (dim - rank), orthonormal columns
};

/// Columns of the result are the given vectors; all must share a dimension.
CMatrix stack_columns(std::span<const CVector> vectors);
SpanDecomposition span_decomposition(std::span<const CVector> vectors, double tol = kDefaultRankTol);

/// Number of singular values of the stacked matrix above tol * sigma_max.
int numeric_rank(std::span<const CVector> vectors, double tol = kDefaultRankTol);
/// Orthonormal basis of {x : <v|x> = 0 for every v}; size is dim - numeric_rank.
std::vector<CVector> nullspace(std::span<const CVector> vectors, double tol = kDefaultRankTol);

/// Multiplies by a unit phase so the largest-magnitude entry is real and positive.
CVector fix_global_phase(const CVector &v);

}  // namespace ctxconc
