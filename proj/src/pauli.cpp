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

#include "ctxconc/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace ctxconc {

namespace {

const Complex kI{0.0, 1.0};

Complex phase_of(int quarter_turns) {
    switch (((quarter_turns % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

// Single-qubit product a*b = i^turns * c.
std::pair<Pauli, int> multiply_letters(Pauli a, Pauli b) {
    if (a == Pauli::I) {
        return {b, 0};
    }
    if (b == Pauli::I) {
        return {a, 0};
    }
    if (a == b) {
        return {Pauli::I, 0};
    }
    // X*Y = iZ, Y*Z = iX, Z*X = iY; reversed order picks up -i.
    auto ia = static_cast<int>(a);
    auto ib = static_cast<int>(b);
    auto c = static_cast<Pauli>(6 - ia - ib);
    bool cyclic = (ia % 3) + 1 == ib;
    return {c, cyclic ? 1 : 3};
}

}  // namespace

char pauli_char(Pauli p) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case 'i':
        case '_':
            return Pauli::I;
        case 'X':
        case 'x':
            return Pauli::X;
        case 'Y':
        case 'y':
            return Pauli::Y;
        case 'Z':
        case 'z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

PauliString::PauliString(std::vector<Pauli> letters, int sign) : letters_(std::move(letters)), sign_(sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("Pauli string sign must be +1 or -1");
    }
}

PauliString PauliString::parse(std::string_view text) {
    int sign = +1;
    if (text.starts_with("−")) {
        sign = -1;
        text.remove_prefix(3);
    } else if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        sign = text[0] == '-' ? -1 : +1;
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    std::vector<Pauli> letters;
    for (char c : text) {
        letters.push_back(pauli_from_char(c));
    }
    return PauliString(std::move(letters), sign);
}

PauliString PauliString::identity(size_t n) {
    return PauliString(std::vector<Pauli>(n, Pauli::I));
}

PauliString PauliString::single(size_t n, size_t qubit, Pauli p) {
    std::vector<Pauli> letters(n, Pauli::I);
    letters.at(qubit) = p;
    return PauliString(std::move(letters));
}

bool PauliString::is_identity() const {
    for (Pauli p : letters_) {
        if (p != Pauli::I) {
            return false;
        }
    }
    return true;
}

std::string PauliString::str() const {
    std::string out(1, sign_ < 0 ? '-' : '+');
    for (Pauli p : letters_) {
        out += pauli_char(p);
    }
    return out;
}

PhasedPauli multiply_phased(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("Pauli strings of different lengths");
    }
    std::vector<Pauli> letters(a.size());
    int turns = (a.sign() * b.sign() < 0) ? 2 : 0;
    for (size_t q = 0; q < a.size(); ++q) {
        auto [c, t] = multiply_letters(a[q], b[q]);
        letters[q] = c;
        turns += t;
    }
    return {PauliString(std::move(letters)), turns % 4};
}

PauliString operator*(const PauliString &a, const PauliString &b) {
    PhasedPauli p = multiply_phased(a, b);
    if (p.quarter_turns % 2 != 0) {
        throw std::domain_error("product " + a.str() + " * " + b.str() + " has an imaginary phase");
    }
    return PauliString(p.letters.letters(), p.quarter_turns == 0 ? +1 : -1);
}

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("Pauli strings of different lengths");
    }
    int anti = 0;
    for (size_t q = 0; q < a.size(); ++q) {
        if (a[q] != Pauli::I && b[q] != Pauli::I && a[q] != b[q]) {
            ++anti;
        }
    }
    return anti % 2 == 0;
}

CMatrix single_qubit_matrix(Pauli p) {
    CMatrix m(2, 2);
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, -kI, kI, 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

CMatrix pauli_matrix(const PauliString &ps) {
    if (ps.size() == 0) {
        throw std::invalid_argument("empty Pauli string");
    }
    std::vector<CMatrix> factors;
    for (Pauli p : ps.letters()) {
        factors.push_back(single_qubit_matrix(p));
    }
    CMatrix out = tensor(factors);
    if (ps.sign() < 0) {
        out = -out;
    }
    return out;
}

CVector apply_pauli(const PauliString &ps, const CVector &v) {
    const size_t n = ps.size();
    if (n == 0 || n >= 63 || v.size() != (Eigen::Index{1} << n)) {
        throw std::invalid_argument("state dimension does not match Pauli string length");
    }
    uint64_t flip = 0;
    for (size_t q = 0; q < n; ++q) {
        if (ps[q] == Pauli::X || ps[q] == Pauli::Y) {
            flip |= uint64_t{1} << (n - 1 - q);
        }
    }
    CVector out(v.size());
    for (uint64_t b = 0; b < static_cast<uint64_t>(v.size()); ++b) {
        // P|b> = phase(b) |b ^ flip>.
        int turns = ps.sign() < 0 ? 2 : 0;
        for (size_t q = 0; q < n; ++q) {
            bool bit = (b >> (n - 1 - q)) & 1;
            if (ps[q] == Pauli::Z && bit) {
                turns += 2;
            } else if (ps[q] == Pauli::Y) {
                turns += bit ? 3 : 1;  // Y|0> = i|1>, Y|1> = -i|0>
            }
        }
        out(static_cast<Eigen::Index>(b ^ flip)) = phase_of(turns) * v(static_cast<Eigen::Index>(b));
    }
    return out;
}

double pauli_expectation(const PauliString &ps, const CVector &v) {
    return v.dot(apply_pauli(ps, v)).real();
}

CVector single_qubit_eigenvector(Pauli p, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("eigenvalue sign must be +1 or -1");
    }
    const double r = 1.0 / std::sqrt(2.0);
    CVector v(2);
    switch (p) {
        case Pauli::X:
            v << r, sign * r;
            break;
        case Pauli::Y:
            v << r, Complex(0, sign * r);
            break;
        case Pauli::Z:
            if (sign > 0) {
                v << 1, 0;
            } else {
                v << 0, 1;
            }
            break;
        case Pauli::I:
            throw std::invalid_argument("identity has no distinguished eigenvector");
    }
    return v;
}

CVector sign_ray(std::span<const Pauli> letters, std::span<const int> signs) {
    if (letters.size() != signs.size()) {
        throw std::invalid_argument("letters and signs have mismatched lengths");
    }
    if (letters.empty()) {
        throw std::invalid_argument("empty sign pattern");
    }
    std::vector<CVector> factors;
    for (size_t q = 0; q < letters.size(); ++q) {
        factors.push_back(single_qubit_eigenvector(letters[q], signs[q]));
    }
    return tensor_vectors(factors);
}

CMatrix sign_projector(std::span<const Pauli> letters, std::span<const int> signs) {
    CVector ray = sign_ray(letters, signs);
    return ray * ray.adjoint();
}

}  // namespace ctxconc
