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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctxconc/linalg.hpp"

namespace ctxconc {

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// A signed tensor product of single-qubit Paulis. Qubit 0 is the most
/// significant tensor factor.
class PauliString {
   public:
    PauliString() = default;
    PauliString(std::vector<Pauli> letters, int sign = +1);

    /// Parses "XYZ", "+XZZ", "-XYY" (also accepts the unicode minus).
    static PauliString parse(std::string_view text);
    static PauliString identity(size_t n);
    /// Identity except for `p` on `qubit`.
    static PauliString single(size_t n, size_t qubit, Pauli p);

    size_t size() const { return letters_.size(); }
    int sign() const { return sign_; }
    Pauli operator[](size_t q) const { return letters_[q]; }
    const std::vector<Pauli> &letters() const { return letters_; }
    bool is_identity() const;

    PauliString negated() const { return PauliString(letters_, -sign_); }
    std::string str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    std::vector<Pauli> letters_;
    int sign_ = +1;
};

/// Product a * b as an unsigned letter string plus a phase i^quarter_turns
/// (the signs of a and b are folded into the phase).
struct PhasedPauli {
    PauliString letters;  // sign always +1
    int quarter_turns = 0;  // 0..3
};
PhasedPauli multiply_phased(const PauliString &a, const PauliString &b);

/// Product a * b. Throws std::domain_error if the phase is imaginary, which
/// only happens for anticommuting factors.
PauliString operator*(const PauliString &a, const PauliString &b);

bool commutes(const PauliString &a, const PauliString &b);

CMatrix single_qubit_matrix(Pauli p);
/// Dense 2^n x 2^n matrix of the signed string.
CMatrix pauli_matrix(const PauliString &ps);
/// Applies the string to a state vector without forming the matrix.
CVector apply_pauli(const PauliString &ps, const CVector &v);
double pauli_expectation(const PauliString &ps, const CVector &v);

/// Eigenvector of the single-qubit Pauli p with eigenvalue sign.
CVector single_qubit_eigenvector(Pauli p, int sign);
/// Product eigenray |s_1 L_1> (x) ... (x) |s_n L_n>.
CVector sign_ray(std::span<const Pauli> letters, std::span<const int> signs);
/// Rank-1 projector Pi_{s_1 L_1} (x) ... (x) Pi_{s_n L_n}.
CMatrix sign_projector(std::span<const Pauli> letters, std::span<const int> signs);

}  // namespace ctxconc
