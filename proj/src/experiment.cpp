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

#include "ctxconc/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "ctxconc/digest.hpp"
#include "ctxconc/fixtures.hpp"

namespace ctxconc {

namespace {

constexpr double kImpossible = 1e-15;

int parse_index(std::string_view s, const std::string &whole) {
    int v = -1;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
        throw std::invalid_argument("malformed setting id '" + whole + "'");
    }
    return v;
}

}  // namespace

void NoiseModel::validate() const {
    if (!(visibility >= 0 && visibility <= 1)) {
        throw std::invalid_argument("visibility must lie in [0, 1]");
    }
    if (!(dark_rate >= 0 && dark_rate <= 1)) {
        throw std::invalid_argument("dark_rate must lie in [0, 1]");
    }
    if (!(prep_angle_jitter >= 0)) {
        throw std::invalid_argument("prep_angle_jitter must be non-negative");
    }
}

const CountRecord &CountTable::at(const std::string &prep, const std::string &meas) const {
    auto it = records.find({prep, meas});
    if (it == records.end()) {
        throw std::out_of_range("no counts for setting (" + prep + ", " + meas + ")");
    }
    return it->second;
}

bool CountTable::contains(const std::string &prep, const std::string &meas) const {
    return records.count({prep, meas}) > 0;
}

void write_count_csv(std::ostream &out, const CountTable &table) {
    out << "# shots_nominal=" << table.shots_nominal << "\n";
    out << "prep_id,meas_id,count_1,count_0\n";
    for (const auto &[key, rec] : table.records) {
        out << key.first << "," << key.second << "," << rec.count_1 << "," << rec.count_0 << "\n";
    }
}

CountTable read_count_csv(std::string_view text) {
    CountTable table;
    const std::string_view marker = "# shots_nominal=";
    size_t pos = text.find(marker);
    if (pos != std::string_view::npos) {
        size_t end = text.find('\n', pos);
        std::string_view v = text.substr(pos + marker.size(), end == std::string_view::npos ? end : end - pos - marker.size());
        while (!v.empty() && (v.back() == '\r' || v.back() == ' ')) {
            v.remove_suffix(1);
        }
        table.shots_nominal = static_cast<int64_t>(parse_number(v, 1));
    }
    CsvTable csv = parse_csv(text);
    const int cp = csv.column("prep_id"), cm = csv.column("meas_id"), c1 = csv.column("count_1"),
              c0 = csv.column("count_0");
    if (cp < 0 || cm < 0 || c1 < 0 || c0 < 0) {
        throw std::invalid_argument("count CSV needs columns prep_id, meas_id, count_1, count_0");
    }
    for (size_t r = 0; r < csv.rows.size(); ++r) {
        const int ln = csv.line_numbers[r];
        const auto &row = csv.rows[r];
        double n1 = parse_number(row[c1], ln);
        double n0 = parse_number(row[c0], ln);
        if (n1 < 0 || n0 < 0 || n1 != std::floor(n1) || n0 != std::floor(n0)) {
            throw std::invalid_argument("line " + std::to_string(ln) + ": counts must be non-negative integers");
        }
        auto [it, inserted] = table.records.try_emplace({row[cp], row[cm]},
                                                        CountRecord{static_cast<int64_t>(n1), static_cast<int64_t>(n0)});
        if (!inserted) {
            throw std::invalid_argument("line " + std::to_string(ln) + ": duplicate setting (" + row[cp] + ", " +
                                        row[cm] + ")");
        }
    }
    return table;
}

std::string prep_psi() {
    return "psi";
}

std::string prep_post1(int i) {
    return "post1:" + std::to_string(i);
}

std::string prep_post0(int i) {
    return "post0:" + std::to_string(i);
}

std::string meas_id(int j) {
    return "v" + std::to_string(j);
}

SimulationPlan standard_plan(const ExclusivityGraph &g) {
    SimulationPlan plan;
    for (int k = 0; k < g.n_vertices(); ++k) {
        plan.push_back({prep_psi(), meas_id(k)});
    }
    for (auto [i, j] : g.edges()) {
        plan.push_back({prep_post1(i), meas_id(j)});
        plan.push_back({prep_post1(j), meas_id(i)});
        plan.push_back({prep_post0(i), meas_id(j)});
        plan.push_back({prep_post0(j), meas_id(i)});
    }
    return plan;
}

nlohmann::json to_json(const SimulationPlan &plan) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &s : plan) {
        j.push_back({{"prep", s.prep}, {"meas", s.meas}});
    }
    return j;
}

SimulationPlan plan_from_json(const nlohmann::json &j) {
    SimulationPlan plan;
    for (const auto &s : j) {
        plan.push_back({s.at("prep").get<std::string>(), s.at("meas").get<std::string>()});
    }
    return plan;
}

CVector luders_update(const CVector &state, const CMatrix &projector, int outcome) {
    if (projector.rows() != state.size() || projector.cols() != state.size()) {
        throw std::invalid_argument("projector dimension does not match the state");
    }
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("outcome must be 0 or 1");
    }
    CVector out = outcome == 1 ? CVector(projector * state) : CVector(state - projector * state);
    double p = out.squaredNorm() / state.squaredNorm();
    if (p < kImpossible) {
        throw std::domain_error("impossible outcome");
    }
    return out.normalized();
}

CVector luders_update_ray(const CVector &state, const CVector &ray, int outcome) {
    if (ray.size() != state.size()) {
        throw std::invalid_argument("ray dimension does not match the state");
    }
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("outcome must be 0 or 1");
    }
    Complex amp = ray.dot(state);
    CVector out = outcome == 1 ? CVector(amp * ray) : CVector(state - amp * ray);
    double p = out.squaredNorm() / state.squaredNorm();
    if (p < kImpossible) {
        throw std::domain_error("impossible outcome");
    }
    return out.normalized();
}

SequentialProbabilities sequential_probabilities(const CVector &state, int i, int j, const ProjectorFamily &family) {
    const int m = static_cast<int>(family.size());
    if (i < 0 || j < 0 || i >= m || j >= m) {
        throw std::out_of_range("event index out of range");
    }
    if (i == j) {
        throw std::invalid_argument("sequential probabilities need two different events");
    }
    SequentialProbabilities s;
    s.p1 = family.probability(i, state) / state.squaredNorm();
    if (s.p1 > kImpossible) {
        s.cond1 = family.probability(j, luders_update_ray(state, family.rays[i], 1));
    }
    if (1 - s.p1 > kImpossible) {
        s.cond0 = family.probability(j, luders_update_ray(state, family.rays[i], 0));
    }
    s.p11 = s.p1 * s.cond1;
    s.p10 = s.p1 * (1 - s.cond1);
    s.p01 = (1 - s.p1) * s.cond0;
    s.p00 = (1 - s.p1) * (1 - s.cond0);
    return s;
}

int ExperimentModel::parse_meas(const std::string &meas) const {
    if (meas.size() < 2 || meas[0] != 'v') {
        throw std::invalid_argument("malformed measurement id '" + meas + "'");
    }
    int j = parse_index(std::string_view(meas).substr(1), meas);
    if (j >= static_cast<int>(family.size())) {
        throw std::invalid_argument("measurement id '" + meas + "' out of range");
    }
    return j;
}

CVector ExperimentModel::prepare(const std::string &prep_id) const {
    if (prep_id == "psi") {
        return psi;
    }
    auto conditional = [&](std::string_view prefix, int outcome) -> std::optional<CVector> {
        if (!std::string_view(prep_id).starts_with(prefix)) {
            return std::nullopt;
        }
        int i = parse_index(std::string_view(prep_id).substr(prefix.size()), prep_id);
        if (i >= static_cast<int>(family.size())) {
            throw std::invalid_argument("preparation id '" + prep_id + "' out of range");
        }
        return luders_update_ray(psi, family.rays[i], outcome);
    };
    if (auto v = conditional("post1:", 1)) {
        return *v;
    }
    if (auto v = conditional("post0:", 0)) {
        return *v;
    }
    throw std::invalid_argument("malformed preparation id '" + prep_id + "'");
}

double ExperimentModel::ideal_probability(const Setting &s) const {
    return family.probability(parse_meas(s.meas), prepare(s.prep));
}

ExperimentModel paper_model() {
    TableS1 t = load_table_s1();
    ExperimentModel m;
    m.psi = t.psi;
    m.family.ambient_dim = static_cast<int>(t.psi.size());
    m.family.rays = t.rays;
    m.family.contexts = {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}};
    return m;
}

uint64_t derive_seed(uint64_t seed, std::initializer_list<std::string_view> labels) {
    std::string material = std::to_string(seed);
    for (auto l : labels) {
        material += '\x1f';
        material += l;
    }
    std::string hex = sha256_hex(material);
    uint64_t out = 0;
    std::from_chars(hex.data(), hex.data() + 16, out, 16);
    return out;
}

int64_t poisson_draw(std::mt19937_64 &rng, double mean) {
    if (!(mean >= 0)) {
        throw std::invalid_argument("Poisson mean must be non-negative");
    }
    if (mean == 0) {
        return 0;
    }
    std::poisson_distribution<int64_t> dist(mean);
    return dist(rng);
}

CountTable simulate_counts(const ExperimentModel &model, const SimulationPlan &plan, int64_t shots,
                           const NoiseModel &noise) {
    if (shots <= 0) {
        throw std::invalid_argument("shots must be positive");
    }
    noise.validate();
    CountTable table;
    table.shots_nominal = shots;
    for (const auto &s : plan) {
        std::mt19937_64 rng(derive_seed(noise.seed, {"count", s.prep, s.meas}));
        CVector prep = model.prepare(s.prep);
        if (noise.prep_angle_jitter > 0) {
            std::normal_distribution<double> gauss(0.0, 1.0);
            double theta = noise.prep_angle_jitter * gauss(rng);
            CVector dir(prep.size());
            for (Eigen::Index k = 0; k < dir.size(); ++k) {
                dir(k) = Complex(gauss(rng), gauss(rng));
            }
            dir -= prep.dot(dir) * prep;
            if (dir.norm() > 1e-12) {
                prep = std::cos(theta) * prep + std::sin(theta) * dir.normalized();
            }
        }
        double p = std::clamp(model.family.probability(model.parse_meas(s.meas), prep), 0.0, 1.0);
        double pn = std::clamp(noise.visibility * p + noise.dark_rate * (1 - p), 0.0, 1.0);
        CountRecord rec;
        rec.count_1 = poisson_draw(rng, static_cast<double>(shots) * pn);
        rec.count_0 = poisson_draw(rng, static_cast<double>(shots) * (1 - pn));
        if (!table.records.try_emplace({s.prep, s.meas}, rec).second) {
            throw std::invalid_argument("duplicate setting (" + s.prep + ", " + s.meas + ") in plan");
        }
    }
    return table;
}

}  // namespace ctxconc
