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

#include "ctxconc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "ctxconc/fixtures.hpp"

namespace ctxconc {

namespace {

std::string edge_key(int i, int j) {
    return std::to_string(i) + ":" + std::to_string(j);
}

bool parse_setting_index(const std::string &id, const std::string &prefix, int &out) {
    if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) {
        return false;
    }
    try {
        size_t used = 0;
        out = std::stoi(id.substr(prefix.size()), &used);
        return used == id.size() - prefix.size() && out >= 0;
    } catch (const std::exception &) {
        return false;
    }
}

nlohmann::json pair_map_json(const std::map<std::pair<int, int>, double> &m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &[k, p] : m) {
        out.push_back({{"i", k.first}, {"j", k.second}, {"p", p}});
    }
    return out;
}

std::map<std::pair<int, int>, double> pair_map_from_json(const nlohmann::json &j) {
    std::map<std::pair<int, int>, double> out;
    for (const auto &e : j) {
        out[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("p").get<double>();
    }
    return out;
}

}  // namespace

double ProbabilityBundle::vertex(int k) const {
    auto it = p_vertex.find(k);
    if (it == p_vertex.end()) {
        throw std::out_of_range("no probability for vertex " + std::to_string(k));
    }
    return it->second;
}

void ProbabilityBundle::validate() const {
    auto check = [](double p, const std::string &what) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument(what + " = " + std::to_string(p) + " is not a probability");
        }
    };
    for (const auto &[k, p] : p_vertex) {
        check(p, "P(1|" + std::to_string(k) + ")");
    }
    for (const auto &[k, p] : p_cond1) {
        check(p, "P(1|" + std::to_string(k.first) + "=1," + std::to_string(k.second) + ")");
    }
    for (const auto &[k, p] : p_cond0) {
        check(p, "P(1|" + std::to_string(k.first) + "=0," + std::to_string(k.second) + ")");
    }
}

nlohmann::json to_json(const ProbabilityBundle &b) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto &[k, p] : b.p_vertex) {
        vertices.push_back({{"vertex", k}, {"p", p}});
    }
    return {{"provenance", b.provenance},
            {"p_vertex", vertices},
            {"p_cond1", pair_map_json(b.p_cond1)},
            {"p_cond0", pair_map_json(b.p_cond0)}};
}

ProbabilityBundle bundle_from_json(const nlohmann::json &j) {
    ProbabilityBundle b;
    b.provenance = j.value("provenance", std::string("ingested"));
    for (const auto &e : j.at("p_vertex")) {
        b.p_vertex[e.at("vertex").get<int>()] = e.at("p").get<double>();
    }
    if (j.contains("p_cond1")) {
        b.p_cond1 = pair_map_from_json(j.at("p_cond1"));
    }
    if (j.contains("p_cond0")) {
        b.p_cond0 = pair_map_from_json(j.at("p_cond0"));
    }
    b.validate();
    return b;
}

ProbabilityBundle paper_bundle() {
    ProbabilityBundle b;
    b.provenance = "fixture";
    for (const auto &r : load_table_s3()) {
        b.p_vertex[r.vertex] = r.probability;
    }
    for (const auto &e : load_table_s4()) {
        b.p_cond1[{e.i, e.j}] = e.forward;
        b.p_cond1[{e.j, e.i}] = e.backward;
    }
    for (const auto &e : load_table_s5()) {
        b.p_cond0[{e.i, e.j}] = e.forward;
        b.p_cond0[{e.j, e.i}] = e.backward;
    }
    b.validate();
    return b;
}

ProbabilityBundle analytic_bundle(const ExperimentModel &model, const ExclusivityGraph &g) {
    ProbabilityBundle b;
    b.provenance = "analytic";
    for (int k = 0; k < g.n_vertices(); ++k) {
        b.p_vertex[k] = model.family.probability(k, model.psi);
    }
    for (auto [i, j] : g.edges()) {
        for (auto [a, c] : {std::pair{i, j}, std::pair{j, i}}) {
            SequentialProbabilities s = sequential_probabilities(model.psi, a, c, model.family);
            b.p_cond1[{a, c}] = s.cond1;
            b.p_cond0[{a, c}] = s.cond0;
        }
    }
    return b;
}

ProbabilityBundle counts_to_bundle(const CountTable &counts, const std::string &provenance) {
    ProbabilityBundle b;
    b.provenance = provenance;
    for (const auto &[key, rec] : counts.records) {
        const int64_t total = rec.count_1 + rec.count_0;
        if (total <= 0) {
            continue;
        }
        const double p = static_cast<double>(rec.count_1) / static_cast<double>(total);
        int j = -1;
        if (!parse_setting_index(key.second, "v", j)) {
            throw std::invalid_argument("unrecognized measurement id '" + key.second + "'");
        }
        int i = -1;
        if (key.first == "psi") {
            b.p_vertex[j] = p;
        } else if (parse_setting_index(key.first, "post1:", i)) {
            b.p_cond1[{i, j}] = p;
        } else if (parse_setting_index(key.first, "post0:", i)) {
            b.p_cond0[{i, j}] = p;
        } else {
            throw std::invalid_argument("unrecognized preparation id '" + key.first + "'");
        }
    }
    return b;
}

CountTable bundle_to_counts(const ProbabilityBundle &b, int64_t shots) {
    if (shots <= 0) {
        throw std::invalid_argument("shots must be positive");
    }
    CountTable t;
    t.shots_nominal = shots;
    auto put = [&](const std::string &prep, int j, double p) {
        const double s = static_cast<double>(shots);
        t.records[{prep, meas_id(j)}] = {std::llround(p * s), std::llround((1 - p) * s)};
    };
    for (const auto &[k, p] : b.p_vertex) {
        put(prep_psi(), k, p);
    }
    for (const auto &[k, p] : b.p_cond1) {
        put(prep_post1(k.first), k.second, p);
    }
    for (const auto &[k, p] : b.p_cond0) {
        put(prep_post0(k.first), k.second, p);
    }
    return t;
}

std::string to_string(EdgeDirection d) {
    switch (d) {
        case EdgeDirection::Symmetrized:
            return "symmetrized";
        case EdgeDirection::Forward:
            return "forward";
        case EdgeDirection::Backward:
            return "backward";
    }
    return "unknown";
}

EdgeDirection edge_direction_from_string(const std::string &s) {
    if (s == "symmetrized" || s == "both") {
        return EdgeDirection::Symmetrized;
    }
    if (s == "forward") {
        return EdgeDirection::Forward;
    }
    if (s == "backward") {
        return EdgeDirection::Backward;
    }
    throw std::invalid_argument("unknown edge direction '" + s + "'");
}

double WitnessTerms::mu(EdgeDirection d) const {
    switch (d) {
        case EdgeDirection::Forward:
            return vertex_sum - edge_forward;
        case EdgeDirection::Backward:
            return vertex_sum - edge_backward;
        case EdgeDirection::Symmetrized:
            break;
    }
    return vertex_sum - edge_symmetrized;
}

WitnessTerms witness_terms(const ProbabilityBundle &probs, const ExclusivityGraph &g) {
    std::vector<std::string> missing;
    WitnessTerms t;
    for (int k = 0; k < g.n_vertices(); ++k) {
        auto it = probs.p_vertex.find(k);
        if (it == probs.p_vertex.end()) {
            missing.push_back("P(1|" + std::to_string(k) + ")");
        } else {
            t.vertex_sum += it->second;
        }
    }
    if (missing.empty()) {
        for (auto [i, j] : g.edges()) {
            auto f = probs.p_cond1.find({i, j});
            auto b = probs.p_cond1.find({j, i});
            const bool hf = f != probs.p_cond1.end();
            const bool hb = b != probs.p_cond1.end();
            if (!hf && !hb) {
                missing.push_back("P(1|" + std::to_string(i) + "=1," + std::to_string(j) + ")");
                continue;
            }
            const double fwd = hf ? probs.vertex(i) * f->second : 0;
            const double bwd = hb ? probs.vertex(j) * b->second : 0;
            if (hf && hb) {
                ++t.edges_both;
                t.edge_forward += fwd;
                t.edge_backward += bwd;
                t.edge_symmetrized += (fwd + bwd) / 2;
            } else {
                ++t.edges_single;
                const double only = hf ? fwd : bwd;
                t.edge_forward += only;
                t.edge_backward += only;
                t.edge_symmetrized += only;
            }
        }
    }
    if (!missing.empty()) {
        std::string msg = "missing probabilities:";
        for (const auto &m : missing) {
            msg += " " + m;
        }
        throw std::invalid_argument(msg);
    }
    return t;
}

double witness_mu(const ProbabilityBundle &probs, const ExclusivityGraph &g, EdgeDirection d) {
    return witness_terms(probs, g).mu(d);
}

HardyReport hardy_report(const ProbabilityBundle &probs, const std::vector<std::vector<int>> &contexts, double tol) {
    HardyReport r;
    for (const auto &ctx : contexts) {
        double s = 0;
        for (int k : ctx) {
            auto it = probs.p_vertex.find(k);
            s += it == probs.p_vertex.end() ? 0.0 : it->second;
        }
        r.context_sums.push_back(s);
    }
    if (r.context_sums.empty()) {
        return r;
    }
    r.p_success = r.context_sums.back();
    r.leading_saturated = true;
    for (size_t c = 0; c + 1 < r.context_sums.size(); ++c) {
        r.leading_saturated = r.leading_saturated && std::abs(r.context_sums[c] - 1) <= tol;
    }
    r.contradicts_nchv = r.leading_saturated && r.p_success > tol;
    return r;
}

std::vector<SignalingFactor> signaling_factors(const ProbabilityBundle &probs, const ExclusivityGraph &g,
                                               std::vector<std::string> *warnings) {
    std::vector<SignalingFactor> out;
    // Order (a then c): eps = P(1|a) - P(1|a)[P(1|a=1,c) + P(0|a=1,c)],
    // eps' = P(1|c) - P(1|a) P(1|a=1,c) - (1 - P(1|a)) P(1|a=0,c).
    auto order = [&](int a, int c, double &eps, double &eps_prime) {
        auto c1 = probs.p_cond1.find({a, c});
        auto c0 = probs.p_cond0.find({a, c});
        auto pa = probs.p_vertex.find(a);
        auto pc = probs.p_vertex.find(c);
        if (c1 == probs.p_cond1.end() || c0 == probs.p_cond0.end() || pa == probs.p_vertex.end() ||
            pc == probs.p_vertex.end()) {
            if (warnings) {
                warnings->push_back("edge order " + std::to_string(a) + "->" + std::to_string(c) +
                                    " lacks conditional data; skipped");
            }
            return false;
        }
        const double p11 = pa->second * c1->second;
        const double p10 = pa->second * (1 - c1->second);
        const double p01 = (1 - pa->second) * c0->second;
        eps = pa->second - p11 - p10;
        eps_prime = pc->second - p11 - p01;
        return true;
    };
    for (auto [i, j] : g.edges()) {
        SignalingFactor f;
        f.i = i;
        f.j = j;
        f.has_ij = order(i, j, f.eps_ij, f.eps_prime_ij);
        f.has_ji = order(j, i, f.eps_ji, f.eps_prime_ji);
        if (f.has_ij || f.has_ji) {
            out.push_back(f);
        }
    }
    return out;
}

double mean_abs_eps_prime(const std::vector<SignalingFactor> &factors) {
    double sum = 0;
    int count = 0;
    for (const auto &f : factors) {
        if (f.has_ij) {
            sum += std::abs(f.eps_prime_ij);
            ++count;
        }
        if (f.has_ji) {
            sum += std::abs(f.eps_prime_ji);
            ++count;
        }
    }
    return count ? sum / count : 0.0;
}

double max_abs_eps(const std::vector<SignalingFactor> &factors) {
    double m = 0;
    for (const auto &f : factors) {
        m = std::max({m, f.has_ij ? std::abs(f.eps_ij) : 0.0, f.has_ji ? std::abs(f.eps_ji) : 0.0});
    }
    return m;
}

double max_abs_eps_prime(const std::vector<SignalingFactor> &factors) {
    double m = 0;
    for (const auto &f : factors) {
        m = std::max({m, f.has_ij ? std::abs(f.eps_prime_ij) : 0.0, f.has_ji ? std::abs(f.eps_prime_ji) : 0.0});
    }
    return m;
}

Pipeline witness_pipeline(const ExclusivityGraph &g) {
    return [g](const ProbabilityBundle &b) {
        std::map<std::string, double> q;
        WitnessTerms t = witness_terms(b, g);
        q["mu_symmetrized"] = t.mu(EdgeDirection::Symmetrized);
        q["mu_forward"] = t.mu(EdgeDirection::Forward);
        q["mu_backward"] = t.mu(EdgeDirection::Backward);
        q["vertex_sum"] = t.vertex_sum;
        for (const auto &[k, p] : b.p_vertex) {
            q["p_vertex:" + std::to_string(k)] = p;
        }
        if (!b.p_cond0.empty()) {
            std::vector<SignalingFactor> f = signaling_factors(b, g);
            q["mean_abs_eps_prime"] = mean_abs_eps_prime(f);
            for (const auto &s : f) {
                if (s.has_ij) {
                    q["eps_prime:" + edge_key(s.i, s.j)] = s.eps_prime_ij;
                }
                if (s.has_ji) {
                    q["eps_prime:" + edge_key(s.j, s.i)] = s.eps_prime_ji;
                }
            }
        }
        return q;
    };
}

ResampleResult resample_errors(const CountTable &counts, const Pipeline &pipeline, int n_groups, uint64_t seed) {
    if (n_groups < 2) {
        throw std::invalid_argument("resampling needs at least two groups");
    }
    ResampleResult r;
    r.n_groups = n_groups;
    std::map<std::string, double> sum, sum_sq;
    std::map<std::string, std::vector<double>> samples;
    for (int grp = 0; grp < n_groups; ++grp) {
        CountTable redraw;
        redraw.shots_nominal = counts.shots_nominal;
        const std::string group = std::to_string(grp);
        for (const auto &[key, rec] : counts.records) {
            std::mt19937_64 rng(derive_seed(seed, {"resample", group, key.first, key.second}));
            CountRecord c;
            c.count_1 = poisson_draw(rng, static_cast<double>(rec.count_1));
            c.count_0 = poisson_draw(rng, static_cast<double>(rec.count_0));
            redraw.records[key] = c;
        }
        for (const auto &[name, v] : pipeline(counts_to_bundle(redraw, "resampled"))) {
            samples[name].push_back(v);
        }
    }
    for (const auto &[name, xs] : samples) {
        double mean = 0;
        for (double x : xs) {
            mean += x;
        }
        mean /= static_cast<double>(xs.size());
        double var = 0;
        for (double x : xs) {
            var += (x - mean) * (x - mean);
        }
        r.mean[name] = mean;
        r.stddev[name] = xs.size() > 1 ? std::sqrt(var / static_cast<double>(xs.size() - 1)) : 0.0;
    }
    return r;
}

nlohmann::json to_json(const WitnessReport &r) {
    return {{"provenance", r.provenance},
            {"direction", r.direction},
            {"mu", r.mu},
            {"mu_forward", r.mu_forward},
            {"mu_backward", r.mu_backward},
            {"mu_symmetrized", r.mu_symmetrized},
            {"vertex_sum", r.vertex_sum},
            {"classical_bound", r.classical_bound},
            {"quantum_bound", r.quantum_bound},
            {"stderr", r.std_error},
            {"sigma_deviation", r.sigma_deviation},
            {"ratio", r.ratio},
            {"mean_abs_eps_prime", r.mean_abs_eps_prime},
            {"mean_abs_eps_prime_stderr", r.mean_abs_eps_prime_stderr},
            {"max_abs_eps", r.max_abs_eps},
            {"hardy_sums", r.hardy_sums},
            {"n_groups", r.n_groups},
            {"shots_nominal", r.shots_nominal}};
}

AnalysisOutput analyze(const ProbabilityBundle &bundle, const ExclusivityGraph &g,
                       const std::vector<std::vector<int>> &contexts, const AnalysisConfig &config,
                       const CountTable *counts) {
    bundle.validate();
    AnalysisOutput a;
    a.bundle = bundle;
    WitnessTerms t = witness_terms(bundle, g);
    a.factors = signaling_factors(bundle, g, &a.warnings);

    WitnessReport &r = a.report;
    r.provenance = bundle.provenance;
    r.direction = to_string(config.direction);
    r.mu = t.mu(config.direction);
    r.mu_forward = t.mu(EdgeDirection::Forward);
    r.mu_backward = t.mu(EdgeDirection::Backward);
    r.mu_symmetrized = t.mu(EdgeDirection::Symmetrized);
    r.vertex_sum = t.vertex_sum;
    r.classical_bound = config.classical_bound;
    r.quantum_bound = config.quantum_bound;
    r.ratio = config.classical_bound != 0 ? r.mu / config.classical_bound : 0.0;
    r.mean_abs_eps_prime = mean_abs_eps_prime(a.factors);
    r.max_abs_eps = max_abs_eps(a.factors);
    r.hardy_sums = hardy_report(bundle, contexts).context_sums;

    if (config.n_groups >= 2) {
        CountTable rebuilt;
        if (!counts) {
            rebuilt = bundle_to_counts(bundle, config.reconstruction_shots);
            counts = &rebuilt;
        }
        r.shots_nominal = counts->shots_nominal;
        a.resampled = resample_errors(*counts, witness_pipeline(g), config.n_groups, config.seed);
        r.n_groups = config.n_groups;
        r.std_error = a.resampled.stddev.at("mu_" + to_string(config.direction));
        if (auto it = a.resampled.stddev.find("mean_abs_eps_prime"); it != a.resampled.stddev.end()) {
            r.mean_abs_eps_prime_stderr = it->second;
        }
        r.sigma_deviation = r.std_error > 0 ? (r.mu - r.classical_bound) / r.std_error : 0.0;
    }
    return a;
}

void write_plot_csv(std::ostream &out, const AnalysisOutput &a) {
    auto err = [&](const std::string &name) {
        auto it = a.resampled.stddev.find(name);
        return it == a.resampled.stddev.end() ? 0.0 : it->second;
    };
    out.precision(12);
    out << "kind,i,j,value,stderr\n";
    for (const auto &[k, p] : a.bundle.p_vertex) {
        out << "vertex," << k << ",," << p << "," << err("p_vertex:" + std::to_string(k)) << "\n";
    }
    for (const auto &f : a.factors) {
        if (f.has_ij) {
            out << "eps_prime," << f.i << "," << f.j << "," << f.eps_prime_ij << ","
                << err("eps_prime:" + edge_key(f.i, f.j)) << "\n";
        }
        if (f.has_ji) {
            out << "eps_prime," << f.j << "," << f.i << "," << f.eps_prime_ji << ","
                << err("eps_prime:" + edge_key(f.j, f.i)) << "\n";
        }
    }
}

}  // namespace ctxconc
