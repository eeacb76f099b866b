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

#include <vector>

#include "ctxconc/linalg.hpp"
#include "ctxconc/pauli.hpp"
#include "ctxconc/projector_family.hpp"

namespace ctxconc {

inline constexpr int kDefaultMaxMabkQubits = 7;

/// The n-qubit MABK Bell operator with A_1 = X, A_2 = Y on every qubit.
struct MabkInstance {
    int n = 0;
    CMatrix op;
    std::vector<PauliString> terms;  // signed; the operator is their sum
    double classical_bound = 0;      // 2^((n-1)/2)
    double quantum_bound = 0;        // 2^(n-1)
};

/// The signed terms of the operator. Terms with 2k+1 Y letters carry sign
/// (-1)^k; they are listed by increasing k, Y positions in lexicographic order.
std::vector<PauliString> mabk_terms(int n, int max_n = kDefaultMaxMabkQubits);
MabkInstance build_mabk(int n, int max_n = kDefaultMaxMabkQubits);

/// (|0...0> + i|1...1>)/sqrt(2), or with -i when flipped.
CVector ghz_state(int n, bool flipped = false);

/// Context terms in the order used by mu_family. For n = 3 this is
/// -YYY, YXX, XYX, XXY; otherwise it is mabk_terms(n).
std::vector<PauliString> mu_context_terms(int n, int max_n = kDefaultMaxMabkQubits);

/// Every positive-sign product eigenprojector of every operator term. One
/// context per term; inside a context the sign patterns run in binary order
/// with +1 as 0 and qubit 0 as the most significant bit. n = 3 uses the
/// conventional 16-event ordering, which the published tables rely on.
ProjectorFamily mu_family(int n, int max_n = kDefaultMaxMabkQubits);

double mu_value(const CVector &state, const ProjectorFamily &family);
/// <M>/2 + 2^(n-2), the same quantity evaluated from the operator.
double mu_from_operator(const CVector &state, const MabkInstance &inst);

struct HardyProbabilities {
    std::vector<double> context_sums;
    double p_success = 0;  // last context's sum
};
HardyProbabilities hardy_probabilities(const CVector &state, const ProjectorFamily &family);

/// The eigenrays span a proper subspace; compressed rays re-express every
/// event in that subspace with identical inner products.
struct ConcentrationCertificate {
    int rank = 0;
    int ambient_dim = 0;
    CVector null_ket;                   // first kernel vector (empty when rank is full)
    std::vector<CVector> kernel_basis;  // all kernel vectors
    CMatrix isometry;                   // rank x ambient_dim, orthonormal rows
    std::vector<CVector> compressed_rays;
    double max_gram_deviation = 0;      // max | |<u_i|u_j>| - |<v_i|v_j>| |
};
ConcentrationCertificate concentration_certificate(const ProjectorFamily &family, double tol = kDefaultRankTol);

}  // namespace ctxconc
