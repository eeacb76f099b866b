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

#include "ctxconc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ctxconc/analysis.hpp"
#include "ctxconc/correlation.hpp"
#include "ctxconc/digest.hpp"
#include "ctxconc/exclusivity_graph.hpp"
#include "ctxconc/experiment.hpp"
#include "ctxconc/fixtures.hpp"
#include "ctxconc/graphstate.hpp"
#include "ctxconc/independence.hpp"
#include "ctxconc/mabk.hpp"
#include "ctxconc/theta.hpp"
#include "json.hpp"

namespace ctxconc {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// A usage problem detected after parsing (bad value combinations).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string default_out_dir() {
    const char *env = std::getenv("CTXCONC_OUT_DIR");
    return env && *env ? std::string(env) : std::string(".");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path &path, const std::string &content) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << content;
}

void write_json(const fs::path &path, const json &j) {
    write_file(path, j.dump(2) + "\n");
}

json parse_json(const std::string &text, const std::string &what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(what + ": " + e.what());
    }
}

json ray_json(const CVector &v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out.push_back({v(k).real(), v(k).imag()});
    }
    return out;
}

// Reports carry the configuration, its hash and the fixture checksums.
json envelope(const std::string &command, const json &config) {
    json fixtures = json::object();
    bool intact = true;
    for (const auto &s : verify_fixture_checksums()) {
        fixtures[s.name] = s.actual;
        intact = intact && s.ok;
    }
    return {{"tool", "ctxconc"},
            {"command", command},
            {"config", config},
            {"config_hash", sha256_hex(config.dump())},
            {"fixtures", fixtures},
            {"fixtures_intact", intact}};
}

std::optional<int> builtin_size(const std::string &spec, const std::string &prefix) {
    if (spec.rfind(prefix + ":", 0) != 0) {
        return std::nullopt;
    }
    try {
        size_t used = 0;
        int n = std::stoi(spec.substr(prefix.size() + 1), &used);
        if (used != spec.size() - prefix.size() - 1) {
            throw UsageError("malformed graph name '" + spec + "'");
        }
        return n;
    } catch (const std::logic_error &) {
        throw UsageError("malformed graph name '" + spec + "'");
    }
}

ExclusivityGraph g3_published() {
    ExclusivityGraph g(16, load_g3_edges());
    return g;
}

const std::vector<std::vector<int>> kG3Contexts = {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}};

// Exclusivity graph from a JSON or DIMACS file, or a built-in name.
ExclusivityGraph load_graph(const std::string &spec) {
    if (spec == "g3") {
        return g3_published();
    }
    if (auto n = builtin_size(spec, "mobius")) {
        return mobius_ladder(*n);
    }
    if (auto n = builtin_size(spec, "complete")) {
        return complete_graph(*n);
    }
    if (auto n = builtin_size(spec, "empty")) {
        return empty_graph(*n);
    }
    if (auto n = builtin_size(spec, "cycle")) {
        return cycle_graph(*n);
    }
    std::string text = read_file(spec);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return graph_from_json(parse_json(text, spec));
    }
    std::istringstream in(text);
    return read_dimacs(in);
}

GraphSpec load_graph_spec(const std::string &spec) {
    if (auto n = builtin_size(spec, "star")) {
        return star_graph(*n);
    }
    if (auto n = builtin_size(spec, "wheel")) {
        return wheel_graph(*n);
    }
    if (auto n = builtin_size(spec, "path")) {
        return path_graph(*n);
    }
    if (auto n = builtin_size(spec, "complete")) {
        return complete_graph_spec(*n);
    }
    return graph_spec_from_json(parse_json(read_file(spec), spec));
}

json alpha_json(const AlphaCertificate &a) {
    return {{"alpha", a.alpha},
            {"witness_set", a.witness_set},
            {"certified", a.certified},
            {"upper_bound", a.upper_bound},
            {"status", a.certified ? "certified" : "witness+bracket"}};
}

json theta_json(const ThetaCertificate &t) {
    return {{"theta", t.theta},
            {"dual_bound", t.dual_bound},
            {"gap", t.gap},
            {"iterations", t.iterations},
            {"formulation", t.formulation},
            {"status", "certified"}};
}

// Runs theta if the graph is small enough; records failures instead of throwing.
json try_theta(const ExclusivityGraph &g, double tol, bool &ok) {
    if (g.n_vertices() > kMaxThetaVertices) {
        ok = false;
        return {{"status", "skipped"}, {"reason", "graph exceeds " + std::to_string(kMaxThetaVertices) + " vertices"}};
    }
    try {
        ThetaOptions opt;
        opt.tol = tol;
        ok = true;
        return theta_json(lovasz_theta(g, opt));
    } catch (const ThetaNonConvergence &e) {
        ok = false;
        return {{"status", "not converged"},
                {"reason", e.what()},
                {"lower_bound", e.lower_bound},
                {"upper_bound", e.upper_bound}};
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct MabkArgs {
    int n = 3;
    int max_n = kDefaultMaxMabkQubits;
    double tol = 1e-7;
    double rank_tol = kDefaultRankTol;
    double edge_tol = kDefaultEdgeTol;
    double budget = 60;
    std::string out;
};

int cmd_mabk(const MabkArgs &a, std::ostream &out, std::ostream &err) {
    if (a.n < 3 || a.n % 2 == 0 || a.n > a.max_n) {
        throw UsageError("--n must be odd and in [3, " + std::to_string(a.max_n) + "], got " + std::to_string(a.n));
    }
    auto t0 = std::chrono::steady_clock::now();
    json config = {{"n", a.n}, {"max_n", a.max_n}, {"tol", a.tol}, {"rank_tol", a.rank_tol},
                   {"edge_tol", a.edge_tol}, {"budget_seconds", a.budget}};
    MabkInstance inst = build_mabk(a.n, a.max_n);
    ProjectorFamily fam = mu_family(a.n, a.max_n);
    ExclusivityGraph g = build_graph(fam, a.edge_tol);
    ConcentrationCertificate cc = concentration_certificate(fam, a.rank_tol);
    AlphaOptions aopt;
    aopt.budget_seconds = a.budget;
    AlphaCertificate alpha = independence_number(g, aopt);
    bool theta_ok = false;
    json theta = try_theta(g, a.tol, theta_ok);

    fs::path dir(a.out);
    write_json(dir / "family.json", to_json(fam));
    write_json(dir / "graph.json", to_json(g));

    json terms = json::array();
    for (const auto &t : inst.terms) {
        terms.push_back(t.str());
    }
    json compressed = json::array();
    for (const auto &v : cc.compressed_rays) {
        compressed.push_back(ray_json(v));
    }
    json cert = envelope("mabk", config);
    cert["n"] = a.n;
    cert["terms"] = terms;
    cert["classical_bound"] = inst.classical_bound;
    cert["quantum_bound"] = inst.quantum_bound;
    cert["n_projectors"] = fam.size();
    cert["n_contexts"] = fam.contexts.size();
    cert["n_edges"] = g.n_edges();
    cert["mu_ghz"] = mu_value(ghz_state(a.n), fam);
    cert["mu_ghz_flipped"] = mu_value(ghz_state(a.n, true), fam);
    cert["rank"] = cc.rank;
    cert["ambient_dim"] = cc.ambient_dim;
    cert["null_ket"] = ray_json(cc.null_ket);
    cert["max_gram_deviation"] = cc.max_gram_deviation;
    cert["compressed_rays"] = compressed;
    cert["alpha"] = alpha_json(alpha);
    cert["theta"] = theta;
    const bool complete = alpha.certified && theta_ok;
    cert["status"] = complete ? "complete" : "partial";
    write_json(dir / "certificate.json", cert);

    out << "mabk n=" << a.n << ": " << fam.size() << " events, " << g.n_edges() << " edges, rank " << cc.rank
        << ", alpha " << alpha.alpha << (alpha.certified ? "" : " (uncertified)");
    if (theta_ok) {
        out << ", theta " << theta["theta"].get<double>();
    }
    out << "\n";
    err << "elapsed " << seconds_since(t0) << " s\n";
    return complete ? kExitOk : kExitPartial;
}

int cmd_graphstate(const std::string &graph, double rank_tol, const std::string &out_dir, std::ostream &out) {
    json config = {{"graph", graph}, {"rank_tol", rank_tol}};
    GraphSpec g = load_graph_spec(graph);
    g.validate();
    ParadoxBundle b = build_paradox(g, rank_tol);
    json ops = json::array();
    for (size_t k = 0; k < b.ops.operators.size(); ++k) {
        ops.push_back({{"operator", b.ops.operators[k].str()},
                       {"factors", b.ops.factors[k]},
                       {"expectation_graph_state", b.expect_graph[k]},
                       {"expectation_modified_state", b.expect_modified[k]}});
    }
    json r = envelope("graphstate", config);
    r["graph"] = to_json(g);
    r["operators"] = ops;
    r["stabilizer_multiplicity"] = b.ops.multiplicity;
    r["vertex_order"] = b.ops.vertex_order;
    r["relabeled"] = b.ops.relabeled;
    r["flip_vector"] = b.modified.flip_vector;
    r["lhv"] = {{"symbols", b.lhv.symbols},
                {"assignments", b.lhv.assignments},
                {"satisfying", b.lhv.satisfying},
                {"feasible", b.lhv.feasible}};
    r["n_events"] = b.events.size();
    r["n_contexts"] = b.events.contexts.size();
    r["event_rank"] = b.event_rank;
    r["max_event_probability_modified"] = b.max_event_probability;
    bool bounds_ok = true;
    if (b.events.size() <= 128) {
        ExclusivityGraph eg = build_graph(b.events);
        AlphaCertificate a = independence_number(eg);
        bool theta_ok = false;
        r["event_graph"] = {{"n_edges", eg.n_edges()}, {"alpha", alpha_json(a)}, {"theta", try_theta(eg, 1e-7, theta_ok)}};
        bounds_ok = a.certified && theta_ok;
    }
    write_json(fs::path(out_dir) / "paradox.json", r);
    out << "graphstate n=" << g.n << ": " << b.ops.operators.size() << " operators, LHV "
        << (b.lhv.feasible ? "feasible" : "infeasible") << ", event rank " << b.event_rank << " of "
        << (1 << g.n) << (b.ops.relabeled ? " (relabeled)" : "") << "\n";
    return bounds_ok ? kExitOk : kExitPartial;
}

int cmd_alpha(const std::string &graph, double budget, const std::string &out_dir, std::ostream &out) {
    json config = {{"graph", graph}, {"budget_seconds", budget}};
    ExclusivityGraph g = load_graph(graph);
    AlphaOptions opt;
    opt.budget_seconds = budget;
    AlphaCertificate a = independence_number(g, opt);
    json r = envelope("alpha", config);
    r["n_vertices"] = g.n_vertices();
    r["n_edges"] = g.n_edges();
    r["result"] = alpha_json(a);
    write_json(fs::path(out_dir) / "alpha.json", r);
    out << "alpha " << a.alpha << (a.certified ? " (certified)" : " (witness; upper bound " + std::to_string(a.upper_bound) + ")")
        << "\n";
    return a.certified ? kExitOk : kExitPartial;
}

int cmd_theta(const std::string &graph, double tol, const std::string &out_dir, std::ostream &out) {
    json config = {{"graph", graph}, {"tol", tol}};
    ExclusivityGraph g = load_graph(graph);
    bool ok = false;
    json t = try_theta(g, tol, ok);
    json r = envelope("theta", config);
    r["n_vertices"] = g.n_vertices();
    r["n_edges"] = g.n_edges();
    r["result"] = t;
    write_json(fs::path(out_dir) / "theta.json", r);
    if (ok) {
        out.precision(12);
        out << "theta " << t["theta"].get<double>() << " (gap " << t["gap"].get<double>() << ")\n";
    } else {
        out << "theta " << t["status"].get<std::string>() << "\n";
    }
    return ok ? kExitOk : kExitPartial;
}

int cmd_exclusivity(const std::string &family, double tol, const std::string &format, const std::string &out_path,
                    std::ostream &out) {
    ProjectorFamily fam = family_from_json(parse_json(read_file(family), family));
    ExclusivityGraph g = build_graph(fam, tol);
    if (format == "dimacs") {
        std::ostringstream ss;
        ss << "c exclusivity graph, edge tolerance " << tol << "\n";
        write_dimacs(ss, g);
        write_file(out_path, ss.str());
    } else {
        write_json(out_path, to_json(g));
    }
    out << "exclusivity: " << g.n_vertices() << " vertices, " << g.n_edges() << " edges -> " << out_path << "\n";
    return kExitOk;
}

struct AnalysisArgs {
    int groups = 100;
    uint64_t seed = 0;
    std::string direction = "symmetrized";
    int64_t shots = 100000;
    std::string out;
};

// Shared tail of simulate and analyze.
int finish_analysis(const std::string &command, json config, const ProbabilityBundle &bundle, const CountTable *counts,
                    const AnalysisArgs &a, std::ostream &out) {
    ExclusivityGraph g = g3_published();
    AlphaCertificate alpha = independence_number(g);
    ThetaCertificate theta = lovasz_theta(g);
    AnalysisConfig cfg;
    cfg.direction = edge_direction_from_string(a.direction);
    cfg.classical_bound = alpha.alpha;
    cfg.quantum_bound = theta.theta;
    cfg.n_groups = a.groups;
    cfg.seed = a.seed;
    cfg.reconstruction_shots = a.shots;
    AnalysisOutput res = analyze(bundle, g, kG3Contexts, cfg, counts);

    json r = envelope(command, config);
    r["witness"] = to_json(res.report);
    r["warnings"] = res.warnings;
    fs::path dir(a.out);
    write_json(dir / "report.json", r);
    write_json(dir / "bundle.json", to_json(bundle));
    std::ostringstream plot;
    write_plot_csv(plot, res);
    write_file(dir / "plot.csv", plot.str());

    const WitnessReport &w = res.report;
    out.precision(6);
    out << command << ": mu " << w.mu << " (" << w.direction << "; forward " << w.mu_forward << ", backward "
        << w.mu_backward << "), ratio " << w.ratio << ", stderr " << w.std_error << ", sigma " << w.sigma_deviation
        << ", mean |eps'| " << 100 * w.mean_abs_eps_prime << "%\n";
    return kExitOk;
}

struct SimulateArgs {
    int64_t shots = 100000;
    double visibility = 1;
    double dark_rate = 0;
    double jitter = 0;
    bool noiseless = false;
    bool analytic = false;
    std::string plan;
};

int cmd_simulate(const SimulateArgs &s, const AnalysisArgs &a, std::ostream &out) {
    NoiseModel noise{s.visibility, s.dark_rate, s.jitter, a.seed};
    if (s.noiseless) {
        noise = NoiseModel::noiseless(a.seed);
    }
    noise.validate();
    json config = {{"shots", s.shots},
                   {"visibility", noise.visibility},
                   {"dark_rate", noise.dark_rate},
                   {"prep_angle_jitter", noise.prep_angle_jitter},
                   {"seed", a.seed},
                   {"analytic", s.analytic},
                   {"plan", s.plan.empty() ? "standard" : s.plan},
                   {"groups", a.groups},
                   {"direction", a.direction}};
    ExperimentModel model = paper_model();
    ExclusivityGraph g = g3_published();
    if (s.analytic) {
        return finish_analysis("simulate", config, analytic_bundle(model, g), nullptr, a, out);
    }
    SimulationPlan plan = s.plan.empty() ? standard_plan(g) : plan_from_json(parse_json(read_file(s.plan), s.plan));
    CountTable counts = simulate_counts(model, plan, s.shots, noise);
    fs::path dir(a.out);
    std::ostringstream csv;
    write_count_csv(csv, counts);
    write_file(dir / "counts.csv", csv.str());
    write_json(dir / "plan.json", to_json(plan));
    return finish_analysis("simulate", config, counts_to_bundle(counts, "simulated"), &counts, a, out);
}

int cmd_analyze(const std::string &fixture, const std::string &counts_path, const std::string &bundle_path,
                const AnalysisArgs &a, std::ostream &out) {
    const int sources = !fixture.empty() + !counts_path.empty() + !bundle_path.empty();
    if (sources != 1) {
        throw UsageError("analyze needs exactly one of --fixture, --counts, --bundle");
    }
    json config = {{"groups", a.groups}, {"seed", a.seed}, {"direction", a.direction}, {"shots", a.shots}};
    if (!fixture.empty()) {
        if (fixture != "paper") {
            throw UsageError("unknown fixture '" + fixture + "' (available: paper)");
        }
        config["fixture"] = fixture;
        return finish_analysis("analyze", config, paper_bundle(), nullptr, a, out);
    }
    if (!counts_path.empty()) {
        std::string text = read_file(counts_path);
        config["counts_sha256"] = sha256_hex(text);
        CountTable counts;
        try {
            counts = read_count_csv(text);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument(counts_path + ": " + e.what());
        }
        return finish_analysis("analyze", config, counts_to_bundle(counts, "ingested"), &counts, a, out);
    }
    std::string text = read_file(bundle_path);
    config["bundle_sha256"] = sha256_hex(text);
    return finish_analysis("analyze", config, bundle_from_json(parse_json(text, bundle_path)), nullptr, a, out);
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Contextuality concentration toolkit: MABK projector families, exclusivity graphs, alpha/theta "
                 "certificates, graph-state paradoxes, prepare-and-measure simulation and analysis."};
    app.require_subcommand(1);
    const std::string out_default = default_out_dir();

    MabkArgs mabk;
    mabk.out = out_default;
    auto *c_mabk = app.add_subcommand("mabk", "MABK projector family, exclusivity graph and certificates");
    c_mabk->add_option("--n", mabk.n, "Odd qubit count")->required();
    c_mabk->add_option("--tol", mabk.tol, "Theta bracket width")->capture_default_str();
    c_mabk->add_option("--rank-tol", mabk.rank_tol, "Relative singular-value cutoff")->capture_default_str();
    c_mabk->add_option("--edge-tol", mabk.edge_tol, "Orthogonality threshold for edges")->capture_default_str();
    c_mabk->add_option("--budget", mabk.budget, "Seconds allowed for exact alpha")->capture_default_str();
    c_mabk->add_option("--max-n", mabk.max_n, "Largest accepted qubit count")->capture_default_str();
    c_mabk->add_option("--out", mabk.out, "Output directory");

    std::string gs_graph;
    double gs_rank_tol = kDefaultRankTol;
    std::string gs_out = out_default;
    auto *c_gs = app.add_subcommand("graphstate", "GHZ-type paradox of a graph state with a universal vertex");
    c_gs->add_option("--graph", gs_graph, "GraphSpec JSON, or star:N, wheel:N, path:N, complete:N")->required();
    c_gs->add_option("--rank-tol", gs_rank_tol, "Relative singular-value cutoff")->capture_default_str();
    c_gs->add_option("--out", gs_out, "Output directory");

    std::string al_graph;
    double al_budget = 60;
    std::string al_out = out_default;
    auto *c_alpha = app.add_subcommand("alpha", "Independence number with certificate");
    c_alpha->add_option("--graph", al_graph, "Graph JSON or DIMACS file, or g3, mobius:N, complete:N, empty:N, cycle:N")
        ->required();
    c_alpha->add_option("--budget", al_budget, "Seconds allowed for the exact search")->capture_default_str();
    c_alpha->add_option("--out", al_out, "Output directory");

    std::string th_graph;
    double th_tol = 1e-7;
    std::string th_out = out_default;
    auto *c_theta = app.add_subcommand("theta", "Lovasz theta with primal and dual certificates");
    c_theta->add_option("--graph", th_graph, "Graph JSON or DIMACS file, or a built-in name")->required();
    c_theta->add_option("--tol", th_tol, "Certified bracket width")->capture_default_str();
    c_theta->add_option("--out", th_out, "Output directory");

    std::string ex_family;
    double ex_tol = kDefaultEdgeTol;
    std::string ex_format = "json";
    std::string ex_out;
    auto *c_ex = app.add_subcommand("exclusivity", "Exclusivity graph of a projector family");
    c_ex->add_option("--family", ex_family, "ProjectorFamily JSON")->required();
    c_ex->add_option("--tol", ex_tol, "Orthogonality threshold")->capture_default_str();
    c_ex->add_option("--format", ex_format, "json or dimacs")->check(CLI::IsMember({"json", "dimacs"}));
    c_ex->add_option("--out", ex_out, "Output file (default graph.json in the output directory)");

    SimulateArgs sim;
    AnalysisArgs sim_a;
    sim_a.out = out_default;
    auto *c_sim = app.add_subcommand("simulate", "Simulate the seven-dimensional experiment and analyze it");
    c_sim->add_option("--shots", sim.shots, "Nominal detections per setting")->capture_default_str();
    c_sim->add_option("--visibility", sim.visibility, "Projector contrast")->capture_default_str();
    c_sim->add_option("--dark-rate", sim.dark_rate, "Spurious outcome-1 probability")->capture_default_str();
    c_sim->add_option("--jitter", sim.jitter, "Preparation tilt standard deviation (radians)")->capture_default_str();
    c_sim->add_flag("--noiseless", sim.noiseless, "Ideal devices (visibility 1, no dark counts, no jitter)");
    c_sim->add_flag("--analytic", sim.analytic, "Exact probabilities instead of sampled counts");
    c_sim->add_option("--plan", sim.plan, "Simulation plan JSON (default: every vertex and both orders of every edge)");
    c_sim->add_option("--seed", sim_a.seed, "Random seed")->capture_default_str();
    c_sim->add_option("--groups", sim_a.groups, "Resampling groups")->capture_default_str();
    c_sim->add_option("--direction", sim_a.direction, "Edge term policy: symmetrized, forward, backward")
        ->check(CLI::IsMember({"symmetrized", "forward", "backward"}));
    c_sim->add_option("--out", sim_a.out, "Output directory");

    std::string an_fixture, an_counts, an_bundle;
    AnalysisArgs an_a;
    an_a.out = out_default;
    auto *c_an = app.add_subcommand("analyze", "Witness, Hardy sums, signaling factors and resampled errors");
    c_an->add_option("--fixture", an_fixture, "Embedded data set (paper)");
    c_an->add_option("--counts", an_counts, "Count CSV (prep_id, meas_id, count_1, count_0)");
    c_an->add_option("--bundle", an_bundle, "ProbabilityBundle JSON");
    c_an->add_option("--seed", an_a.seed, "Resampling seed")->capture_default_str();
    c_an->add_option("--groups", an_a.groups, "Resampling groups")->capture_default_str();
    c_an->add_option("--shots", an_a.shots, "Shots used to rebuild counts from probabilities")->capture_default_str();
    c_an->add_option("--direction", an_a.direction, "Edge term policy: symmetrized, forward, backward")
        ->check(CLI::IsMember({"symmetrized", "forward", "backward"}));
    c_an->add_option("--out", an_a.out, "Output directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();  // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (c_mabk->parsed()) {
            return cmd_mabk(mabk, out, err);
        }
        if (c_gs->parsed()) {
            return cmd_graphstate(gs_graph, gs_rank_tol, gs_out, out);
        }
        if (c_alpha->parsed()) {
            return cmd_alpha(al_graph, al_budget, al_out, out);
        }
        if (c_theta->parsed()) {
            return cmd_theta(th_graph, th_tol, th_out, out);
        }
        if (c_ex->parsed()) {
            std::string path = ex_out.empty() ? (fs::path(out_default) / "graph.json").string() : ex_out;
            return cmd_exclusivity(ex_family, ex_tol, ex_format, path, out);
        }
        if (c_sim->parsed()) {
            return cmd_simulate(sim, sim_a, out);
        }
        if (c_an->parsed()) {
            return cmd_analyze(an_fixture, an_counts, an_bundle, an_a, out);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace ctxconc
