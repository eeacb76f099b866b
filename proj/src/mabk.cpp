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

#include "ctxconc/mabk.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ctxconc {

namespace {

void check_n(int n, int max_n) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("MABK qubit count must be odd and at least 3, got " + std::to_string(n));
    }
    if (n > max_n) {
        throw std::invalid_argument("MABK qubit count " + std::to_string(n) + " exceeds the configured cap " +
                                    std::to_string(max_n));
    }
}

// Calls f(positions) for every size-k subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F &&f) {
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) {
        pos[i] = i;
    }
    while (true) {
        f(pos);
        int i = k - 1;
        while (i >= 0 && pos[i] == n - k + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++pos[i];
        for (int t = i + 1; t < k; ++t) {
            pos[t] = pos[t - 1] + 1;
        }
    }
}

std::string event_label(const PauliString &term, const std::vector<int> &signs) {
    std::string out;
    for (size_t q = 0; q < term.size(); ++q) {
        out += signs[q] > 0 ? '+' : '-';
        out += static_cast<char>(std::tolower(pauli_char(term[q])));
    }
    return out;
}

}  // namespace

std::vector<PauliString> mabk_terms(int n, int max_n) {
    check_n(n, max_n);
    std::vector<PauliString> terms;
    for (int k = 0; 2 * k + 1 <= n; ++k) {
        int sign = k % 2 == 0 ? +1 : -1;
        for_each_combination(n, 2 * k + 1, [&](const std::vector<int> &ys) {
            std::vector<Pauli> letters(n, Pauli::X);
            for (int q : ys) {
                letters[q] = Pauli::Y;
            }
            terms.emplace_back(std::move(letters), sign);
        });
    }
    return terms;
}

MabkInstance build_mabk(int n, int max_n) {
    MabkInstance inst;
    inst.n = n;
    inst.terms = mabk_terms(n, max_n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    inst.op = CMatrix::Zero(dim, dim);
    for (const auto &t : inst.terms) {
        inst.op += pauli_matrix(t);
    }
    inst.classical_bound = std::pow(2.0, (n - 1) / 2.0);
    inst.quantum_bound = std::pow(2.0, n - 1);
    return inst;
}

CVector ghz_state(int n, bool flipped) {
    if (n < 1 || n > 30) {
        throw std::invalid_argument("GHZ qubit count out of range");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    CVector v = CVector::Zero(dim);
    const double r = 1.0 / std::sqrt(2.0);
    v(0) = r;
    v(dim - 1) = Complex(0, flipped ? -r : r);
    return v;
}

std::vector<PauliString> mu_context_terms(int n, int max_n) {
    std::vector<PauliString> terms = mabk_terms(n, max_n);
    if (n == 3) {
        // -YYY first, then the single-Y terms.
        std::vector<PauliString> out{terms[3], terms[0], terms[1], terms[2]};
        return out;
    }
    return terms;
}

ProjectorFamily mu_family(int n, int max_n) {
    std::vector<PauliString> terms = mu_context_terms(n, max_n);
    ProjectorFamily fam;
    fam.ambient_dim = 1 << n;

    auto add_event = [&](const PauliString &term, const std::vector<int> &signs, std::vector<int> &ctx) {
        ctx.push_back(static_cast<int>(fam.rays.size()));
        fam.rays.push_back(sign_ray(term.letters(), signs));
        fam.labels.push_back(event_label(term, signs));
    };

    if (n == 3) {
        // Sign patterns of the conventional ordering, one row per context.
        static const int kSigns[4][4][3] = {
            {{-1, +1, +1}, {-1, -1, -1}, {+1, +1, -1}, {+1, -1, +1}},
            {{+1, +1, +1}, {+1, -1, -1}, {-1, +1, -1}, {-1, -1, +1}},
            {{-1, +1, -1}, {-1, -1, +1}, {+1, +1, +1}, {+1, -1, -1}},
            {{+1, +1, +1}, {+1, -1, -1}, {-1, +1, -1}, {-1, -1, +1}},
        };
        for (int c = 0; c < 4; ++c) {
            std::vector<int> ctx;
            for (const auto &s : kSigns[c]) {
                add_event(terms[c], std::vector<int>(s, s + 3), ctx);
            }
            fam.contexts.push_back(std::move(ctx));
        }
        return fam;
    }

    for (const auto &term : terms) {
        std::vector<int> ctx;
        for (uint32_t pattern = 0; pattern < (1u << n); ++pattern) {
            std::vector<int> signs(n);
            int product = 1;
            for (int q = 0; q < n; ++q) {
                signs[q] = ((pattern >> (n - 1 - q)) & 1) ? -1 : +1;
                product *= signs[q];
            }
            if (product * term.sign() == +1) {
                add_event(term, signs, ctx);
            }
        }
        fam.contexts.push_back(std::move(ctx));
    }
    return fam;
}

double mu_value(const CVector &state, const ProjectorFamily &family) {
    double total = 0;
    for (size_t k = 0; k < family.size(); ++k) {
        total += family.probability(k, state);
    }
    return total;
}

double mu_from_operator(const CVector &state, const MabkInstance &inst) {
    return expectation(state, inst.op) / 2.0 + std::pow(2.0, inst.n - 2);
}

HardyProbabilities hardy_probabilities(const CVector &state, const ProjectorFamily &family) {
    if (family.contexts.size() < 2) {
        throw std::invalid_argument("a Hardy test needs at least two contexts");
    }
    HardyProbabilities out;
    for (const auto &ctx : family.contexts) {
        double sum = 0;
        for (int k : ctx) {
            sum += family.probability(k, state);
        }
        out.context_sums.push_back(sum);
    }
    out.p_success = out.context_sums.back();
    return out;
}

ConcentrationCertificate concentration_certificate(const ProjectorFamily &family, double tol) {
    if (family.size() == 0) {
        throw std::invalid_argument("empty projector family");
    }
    SpanDecomposition d = span_decomposition(family.rays, tol);
    ConcentrationCertificate cert;
    cert.rank = d.rank;
    cert.ambient_dim = family.ambient_dim;
    for (Eigen::Index k = 0; k < d.kernel_basis.cols(); ++k) {
        cert.kernel_basis.push_back(fix_global_phase(d.kernel_basis.col(k)));
    }
    if (!cert.kernel_basis.empty()) {
        cert.null_ket = cert.kernel_basis.front();
    }
    cert.isometry = d.span_basis.adjoint();
    for (const auto &v : family.rays) {
        cert.compressed_rays.push_back(fix_global_phase(cert.isometry * v));
    }
    // Gram preservation, compared on moduli because the phases of individual rays are a convention.
    const size_t m = family.size();
    CMatrix original = stack_columns(family.rays);
    CMatrix compressed = stack_columns(cert.compressed_rays);
    Eigen::MatrixXd g0 = (original.adjoint() * original).cwiseAbs();
    Eigen::MatrixXd g1 = (compressed.adjoint() * compressed).cwiseAbs();
    cert.max_gram_deviation = m == 0 ? 0.0 : (g0 - g1).cwiseAbs().maxCoeff();
    return cert;
}

}  // namespace ctxconc
