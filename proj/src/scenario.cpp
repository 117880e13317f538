#include "patternctl/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include <json.hpp>

#include "patternctl/centralized.hpp"
#include "patternctl/linear_checks.hpp"
#include "patternctl/observer.hpp"
#include "patternctl/plant.hpp"
#include "patternctl/render.hpp"

namespace patternctl {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- parsing

[[noreturn]] void config_fail(const std::string& where, const std::string& what) {
    throw ConfigError("config error at " + where + ": " + what);
}

const json& require_key(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) config_fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) config_fail(where, "missing required key \"" + key + "\"");
    return *it;
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key)) config_fail(where + "/" + key, "unknown key");
    }
}

double as_number(const json& j, const std::string& where) {
    if (!j.is_number()) config_fail(where, "expected a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) config_fail(where, "expected an integer");
    return j.get<int>();
}

Eigen::VectorXd as_vector(const json& j, const std::string& where) {
    if (!j.is_array()) config_fail(where, "expected an array of numbers");
    Eigen::VectorXd v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = as_number(j[i], where + "/" + std::to_string(i));
    }
    return v;
}

Graph parse_graph(const json& j, const std::string& where) {
    const std::string type = require_key(j, "type", where).get<std::string>();
    if (type == "grid") {
        reject_unknown_keys(j, {"type", "rows", "cols"}, where);
        return Graph::grid(as_int(require_key(j, "rows", where), where + "/rows"),
                           as_int(require_key(j, "cols", where), where + "/cols"));
    }
    if (type == "edges") {
        reject_unknown_keys(j, {"type", "n", "edges"}, where);
        const int n = as_int(require_key(j, "n", where), where + "/n");
        const json& edges = require_key(j, "edges", where);
        if (!edges.is_array()) config_fail(where + "/edges", "expected an array of pairs");
        std::vector<Graph::Edge> list;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const std::string ew = where + "/edges/" + std::to_string(k);
            if (!edges[k].is_array() || edges[k].size() != 2) {
                config_fail(ew, "expected a pair [i, j]");
            }
            list.emplace_back(as_int(edges[k][0], ew), as_int(edges[k][1], ew));
        }
        return Graph(n, list);
    }
    config_fail(where + "/type", "unknown graph type \"" + type + "\"");
}

VectorSpec parse_vector_spec(const json& j, const std::string& where) {
    VectorSpec spec;
    if (j.is_array()) {
        spec.values = as_vector(j, where);
        return spec;
    }
    if (j.is_object() && j.contains("random")) {
        reject_unknown_keys(j, {"random"}, where);
        const json& box = j["random"];
        reject_unknown_keys(box, {"lo", "hi", "seed"}, where + "/random");
        RandomBox rb;
        if (box.contains("lo")) rb.lo = as_number(box["lo"], where + "/random/lo");
        if (box.contains("hi")) rb.hi = as_number(box["hi"], where + "/random/hi");
        if (rb.hi <= rb.lo) config_fail(where + "/random", "needs lo < hi");
        if (box.contains("seed")) {
            rb.seed = box["seed"].get<std::uint64_t>();
        }
        spec.random = rb;
        return spec;
    }
    config_fail(where, "expected an array or {\"random\": {lo, hi, seed}}");
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config parse error: ") + err.what());
    }
    reject_unknown_keys(j,
                        {"name", "graph", "alpha", "p0", "a", "leaders", "leader_graph",
                         "mode", "x0", "z0", "observer_init", "seed", "chi_safety_factor",
                         "pattern_tol", "sim"},
                        "");

    ScenarioConfig config;
    if (j.contains("name")) config.name = j["name"].get<std::string>();

    try {
        config.graph = parse_graph(require_key(j, "graph", ""), "/graph");
    } catch (const std::invalid_argument& err) {
        config_fail("/graph", err.what());
    }
    if (j["graph"]["type"] == "grid") {
        config.grid_dims = {j["graph"]["rows"].get<int>(), j["graph"]["cols"].get<int>()};
    }

    const json& alpha = require_key(j, "alpha", "");
    if (alpha.is_object() && alpha.contains("kron")) {
        reject_unknown_keys(alpha, {"kron"}, "/alpha");
        const json& factors = alpha["kron"];
        if (!factors.is_array() || factors.size() != 2) {
            config_fail("/alpha/kron", "expected two sign vectors");
        }
        try {
            config.alpha = sign_kron(as_vector(factors[0], "/alpha/kron/0"),
                                     as_vector(factors[1], "/alpha/kron/1"));
        } catch (const std::invalid_argument& err) {
            config_fail("/alpha/kron", err.what());
        }
    } else {
        config.alpha = as_vector(alpha, "/alpha");
    }

    if (j.contains("p0")) config.p0 = as_number(j["p0"], "/p0");
    config.self_gain = as_number(require_key(j, "a", ""), "/a");

    const json& leaders = require_key(j, "leaders", "");
    if (!leaders.is_array()) config_fail("/leaders", "expected an array of vertex labels");
    for (std::size_t k = 0; k < leaders.size(); ++k) {
        config.leaders.push_back(as_int(leaders[k], "/leaders/" + std::to_string(k)));
    }

    if (j.contains("mode")) {
        config.mode = j["mode"].get<std::string>();
        if (config.mode != "centralized" && config.mode != "distributed") {
            config_fail("/mode", "expected \"centralized\" or \"distributed\"");
        }
    }

    if (j.contains("leader_graph")) {
        const json& lg = j["leader_graph"];
        const std::string type = require_key(lg, "type", "/leader_graph").get<std::string>();
        if (type == "path") {
            reject_unknown_keys(lg, {"type"}, "/leader_graph");
            // Default anyway; keep explicit form allowed.
        } else {
            try {
                config.leader_graph = parse_graph(lg, "/leader_graph");
            } catch (const std::invalid_argument& err) {
                config_fail("/leader_graph", err.what());
            }
        }
    }

    if (j.contains("x0")) config.x0 = parse_vector_spec(j["x0"], "/x0");
    if (j.contains("z0")) config.z0 = parse_vector_spec(j["z0"], "/z0");
    if (j.contains("observer_init")) {
        config.observer_init = parse_vector_spec(j["observer_init"], "/observer_init");
    }
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("chi_safety_factor")) {
        config.chi_safety_factor = as_number(j["chi_safety_factor"], "/chi_safety_factor");
        if (config.chi_safety_factor <= 1.0) {
            config_fail("/chi_safety_factor", "must be strictly greater than 1");
        }
    }
    if (j.contains("pattern_tol")) {
        config.pattern_tol = as_number(j["pattern_tol"], "/pattern_tol");
        if (config.pattern_tol <= 0.0) config_fail("/pattern_tol", "must be positive");
    }
    if (j.contains("sim")) {
        const json& sim = j["sim"];
        reject_unknown_keys(sim, {"t_end", "dt", "store_every", "convergence_tol"}, "/sim");
        if (sim.contains("t_end")) config.sim.t_end = as_number(sim["t_end"], "/sim/t_end");
        if (sim.contains("dt")) config.sim.dt = as_number(sim["dt"], "/sim/dt");
        if (sim.contains("store_every")) {
            config.sim.store_every = as_int(sim["store_every"], "/sim/store_every");
        }
        if (sim.contains("convergence_tol")) {
            config.sim.convergence_tol =
                as_number(sim["convergence_tol"], "/sim/convergence_tol");
        }
    }
    return config;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_scenario(text);
}

// ------------------------------------------------------------ run pipeline

namespace {

json to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}

std::uint64_t effective_seed(const VectorSpec& spec, std::uint64_t base, int field_index) {
    if (spec.random && spec.random->seed) return *spec.random->seed;
    return base * 1000003ULL + static_cast<std::uint64_t>(field_index);
}

Eigen::VectorXd draw_uniform(int dim, const RandomBox& box, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(box.lo, box.hi);
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = dist(rng);
    return v;
}

// Resolve a vector field: explicit values or a seeded draw (the default box
// follows the published study: uniform in [-5, 5]).
Eigen::VectorXd resolve_vector(const VectorSpec& spec, int dim, std::uint64_t base,
                               int field_index, const std::string& name, json& seed_echo) {
    if (spec.values) {
        if (spec.values->size() != dim) {
            throw ConfigError("config error at /" + name + ": expected length " +
                              std::to_string(dim) + ", got " +
                              std::to_string(spec.values->size()));
        }
        return *spec.values;
    }
    const RandomBox box = spec.random.value_or(RandomBox{});
    const std::uint64_t seed = effective_seed(spec, base, field_index);
    seed_echo[name] = seed;
    return draw_uniform(dim, box, seed);
}

enum class Depth { check, synth, full };

struct Runner {
    const ScenarioConfig& config;
    std::string out_dir;
    json summary;

    explicit Runner(const ScenarioConfig& c, std::string out) : config(c), out_dir(std::move(out)) {
        summary["scenario"] = config.name;
        summary["mode"] = config.mode;
        summary["seed"] = config.seed;
    }

    RunOutcome finalize(ExitCode code) {
        summary["exit_code"] = static_cast<int>(code);
        const std::string text = summary.dump(2) + "\n";
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            std::ofstream out(std::filesystem::path(out_dir) / "summary.json",
                              std::ios::binary);
            out << text;
        }
        return {code, text};
    }

    RunOutcome fail(ExitCode code, const std::string& stage, const std::string& message) {
        summary["failure"] = {{"stage", stage}, {"message", message}};
        return finalize(code);
    }
};

}  // namespace

static RunOutcome execute(const ScenarioConfig& config, const std::string& out_dir,
                          Depth depth, int sweep_samples = 0) {
    Runner run(config, out_dir);
    const bool distributed = config.mode == "distributed";
    const bool sweeping = sweep_samples > 0;

    // ---- dimension / construction checks (config stage)
    const int n = config.graph.vertex_count();
    const int m = static_cast<int>(config.leaders.size());
    if (config.alpha.size() != n) {
        return run.fail(ExitCode::config_error, "config",
                        "alpha length " + std::to_string(config.alpha.size()) +
                            " does not match vertex count " + std::to_string(n));
    }

    std::optional<PatternSpec> spec;
    std::optional<PlantModel> plant;
    try {
        spec.emplace(config.alpha, config.p0);
        plant.emplace(config.graph, config.self_gain, config.leaders);
    } catch (const std::invalid_argument& err) {
        return run.fail(ExitCode::config_error, "config", err.what());
    }
    if (distributed && m < 1) {
        return run.fail(ExitCode::config_error, "config",
                        "distributed mode needs at least one leader");
    }
    Graph leader_graph = config.leader_graph.value_or(Graph::path(std::max(m, 1)));
    if (leader_graph.vertex_count() != m && m >= 1) {
        return run.fail(ExitCode::config_error, "config",
                        "leader graph must have one vertex per leader (" +
                            std::to_string(m) + ")");
    }

    const Eigen::MatrixXd q = pattern_matrix(config.graph, *spec);
    const AugmentedSystem sys = build_augmented(*plant, q);
    const MeasurementMap measurements = build_measurements(*plant);

    // ---- stage: assumptions
    const AssumptionReport report = check_assumptions(*plant, q);
    run.summary["assumptions"] = {
        {"graph_connected", report.graph_connected},
        {"plant_controllable", report.plant_controllable},
        {"plant_observable", report.plant_observable},
        {"augmented_controllable", report.augmented_controllable},
    };
    bool assumptions_ok = report.all_pass();
    if (distributed) {
        const bool lg_connected = leader_graph.is_connected();
        const bool measurable = is_observable_pbh(sys.A, measurements.stacked);
        run.summary["assumptions"]["leader_graph_connected"] = lg_connected;
        run.summary["assumptions"]["measurements_observable"] = measurable;
        assumptions_ok = assumptions_ok && lg_connected && measurable;
    }
    if (!assumptions_ok) {
        return run.fail(ExitCode::assumption_failure, "assumptions",
                        "one or more structural assumptions failed (see \"assumptions\")");
    }

    // ---- stage: equilibrium feasibility
    const EquilibriumResult eq = solve_equilibrium(*plant, *spec);
    if (!eq.feasible) {
        json blockers = json::array();
        for (std::size_t i = 0; i < eq.blocking_followers.size(); ++i) {
            const int v = eq.blocking_followers[i];
            blockers.push_back({{"follower", v},
                                {"residual", eq.blocking_residuals[i]},
                                {"required_a", config.alpha(v - 1) *
                                                   (config.graph.laplacian() *
                                                    config.alpha)(v - 1)}});
        }
        run.summary["equilibrium"] = {
            {"feasible", false},
            {"blocking_followers", blockers},
            {"hint",
             "every follower needs a = alpha_i * (L alpha)_i; promote the blocking "
             "followers to leaders or adjust a"},
        };
        return run.fail(ExitCode::infeasible, "equilibrium",
                        "pattern equilibrium blocked by follower residuals");
    }
    run.summary["equilibrium"] = {{"feasible", true},
                                  {"u_star", to_json(eq.equilibrium.u_star)}};
    if (depth == Depth::check) return run.finalize(ExitCode::ok);

    // ---- stage: centralized synthesis + certificate
    std::optional<CentralizedDesign> design;
    try {
        design.emplace(synthesize_centralized(sys, eq.equilibrium));
    } catch (const std::exception& err) {
        return run.fail(ExitCode::solver_failure, "synthesis", err.what());
    }
    run.summary["care"] = {{"residual", design->care_residual},
                           {"kernel_norm", design->kernel_norm}};
    const SpectralCertificate cert = certify_spectrum(*design);
    run.summary["certificate"] = {{"zero_count", cert.zero_count},
                                  {"max_other_real_part", cert.max_other_real_part},
                                  {"p_kernel_norm", cert.p_kernel_norm},
                                  {"pass", cert.pass}};
    if (!cert.pass) {
        return run.fail(ExitCode::assumption_failure, "certificate",
                        "closed-loop spectrum does not certify the simple-zero structure");
    }

    // ---- stage: observer design (distributed only)
    std::optional<ObserverDesign> od;
    std::optional<ErrorSystem> es;
    if (distributed) {
        try {
            ObserverOptions options;
            options.chi_safety_factor = config.chi_safety_factor;
            od.emplace(design_observer(sys, *design, measurements, leader_graph, options));
            es.emplace(build_error_system(*od, *design));
        } catch (const std::exception& err) {
            return run.fail(ExitCode::solver_failure, "observer", err.what());
        }
        run.summary["observer"] = {{"leader_lambda2", od->leader_lambda2},
                                   {"coupling_bound", od->coupling_bound},
                                   {"chi", od->coupling_gain},
                                   {"single_leader", od->single_leader},
                                   {"max_error_real_part", es->max_error_real_part}};
    }
    if (depth == Depth::synth) return run.finalize(ExitCode::ok);

    // ---- sweep mode: sample initial conditions against the design
    if (sweeping) {
        json samples = json::array();
        int inside_count = 0;
        int formed_count = 0;
        int converged_count = 0;
        int agreement_count = 0;
        double max_rel_error = 0.0;
        for (int s = 0; s < sweep_samples; ++s) {
            const std::uint64_t sample_seed =
                config.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(s + 1));
            const RandomBox x_box = config.x0.random.value_or(RandomBox{});
            const RandomBox z_box = config.z0.random.value_or(RandomBox{});
            Eigen::VectorXd xbar0(n + m);
            xbar0 << draw_uniform(n, x_box, sample_seed + 1),
                draw_uniform(m, z_box, sample_seed + 2);
            Eigen::VectorXd e0;
            BasinCheck basin;
            Eigen::VectorXd predicted;
            TrajectoryRecord record;
            if (distributed) {
                const RandomBox o_box = config.observer_init.random.value_or(RandomBox{});
                Eigen::VectorXd init = draw_uniform(m * (n + m), o_box, sample_seed + 3);
                e0 = init;
                for (int jdx = 0; jdx < m; ++jdx) e0.segment(jdx * (n + m), n + m) -= xbar0;
                basin = in_basin_distributed(*es, *design, xbar0, e0, *spec);
                predicted = predict_limit_distributed(*es, *design, xbar0, e0);
                record = simulate_distributed(*es, *design, xbar0, e0, config.sim);
            } else {
                basin = in_basin(*design, xbar0, *spec);
                predicted = predict_limit(*design, xbar0);
                record = simulate_centralized(*design, xbar0, config.sim);
            }
            const Eigen::VectorXd limit = record.limit_estimate.head(n + m);
            const double rel =
                (limit - predicted).norm() / std::max(predicted.norm(), 1e-12);
            const bool formed =
                is_in_pattern(limit.head(n), config.graph, *spec, config.pattern_tol);
            inside_count += basin.inside;
            formed_count += formed;
            converged_count += record.converged;
            agreement_count += (basin.inside == formed);
            if (predicted.norm() > 1e-9) max_rel_error = std::max(max_rel_error, rel);
            samples.push_back({{"seed", sample_seed},
                               {"inside_basin", basin.inside},
                               {"margin", basin.margin},
                               {"converged", record.converged},
                               {"pattern_formed", formed},
                               {"prediction_rel_error", rel}});
        }
        run.summary["sweep"] = {{"samples", sweep_samples},
                                {"inside_basin", inside_count},
                                {"pattern_formed", formed_count},
                                {"converged", converged_count},
                                {"basin_matches_membership", agreement_count},
                                {"max_prediction_rel_error", max_rel_error},
                                {"runs", samples}};
        return run.finalize(ExitCode::ok);
    }

    // ---- initial conditions
    json seed_echo = json::object();
    Eigen::VectorXd x0;
    Eigen::VectorXd z0;
    Eigen::VectorXd e0;
    try {
        x0 = resolve_vector(config.x0, n, config.seed, 1, "x0", seed_echo);
        z0 = resolve_vector(config.z0, m, config.seed, 2, "z0", seed_echo);
    } catch (const ConfigError& err) {
        return run.fail(ExitCode::config_error, "initial_conditions", err.what());
    }
    Eigen::VectorXd xbar0(n + m);
    xbar0 << x0, z0;
    run.summary["initial"] = {{"x0", to_json(x0)}, {"z0", to_json(z0)}};
    if (distributed) {
        Eigen::VectorXd init;
        try {
            init = resolve_vector(config.observer_init, m * (n + m), config.seed, 3,
                                  "observer_init", seed_echo);
        } catch (const ConfigError& err) {
            return run.fail(ExitCode::config_error, "initial_conditions", err.what());
        }
        e0 = init;
        for (int jdx = 0; jdx < m; ++jdx) e0.segment(jdx * (n + m), n + m) -= xbar0;
        run.summary["initial"]["observer_init"] = to_json(init);
        run.summary["initial"]["e0_norm"] = e0.norm();
    }
    if (!seed_echo.empty()) run.summary["initial"]["draw_seeds"] = seed_echo;

    // ---- basin + prediction
    const BasinCheck basin = distributed
                                 ? in_basin_distributed(*es, *design, xbar0, e0, *spec)
                                 : in_basin(*design, xbar0, *spec);
    run.summary["basin"] = {{"inside", basin.inside},
                            {"projection", basin.projection},
                            {"threshold", basin.threshold},
                            {"margin", basin.margin}};
    const Eigen::VectorXd predicted =
        distributed ? predict_limit_distributed(*es, *design, xbar0, e0)
                    : predict_limit(*design, xbar0);

    // ---- simulation
    TrajectoryRecord record;
    try {
        record = distributed ? simulate_distributed(*es, *design, xbar0, e0, config.sim)
                             : simulate_centralized(*design, xbar0, config.sim);
    } catch (const std::exception& err) {
        return run.fail(ExitCode::non_convergence, "simulation", err.what());
    }
    run.summary["simulation"] = {{"t_end", config.sim.t_end},
                                 {"dt", config.sim.dt},
                                 {"converged", record.converged},
                                 {"horizon_warning", record.horizon_warning},
                                 {"recommended_t_end", record.recommended_t_end}};

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_trajectory_csv((std::filesystem::path(out_dir) / "trajectory.csv").string(),
                             record, n, m);
        const Eigen::VectorXd x_final = record.limit_estimate.head(n);
        if (config.grid_dims) {
            render_grid_snapshot(x_final, config.grid_dims->first, config.grid_dims->second,
                                 (std::filesystem::path(out_dir) / "snapshot").string());
        } else {
            render_sign_list(x_final,
                             (std::filesystem::path(out_dir) / "snapshot_signs.txt").string());
        }
    }
    if (!record.converged) {
        return run.fail(ExitCode::non_convergence, "simulation",
                        "trajectory did not settle by t_end (see recommended_t_end)");
    }

    // ---- verification against the limit predictor
    const Eigen::VectorXd limit = record.limit_estimate.head(n + m);
    const double abs_error = (limit - predicted).norm();
    const double rel_error = abs_error / std::max(predicted.norm(), 1e-12);
    const bool formed = is_in_pattern(limit.head(n), config.graph, *spec, config.pattern_tol);
    const double p_estimate = config.alpha.dot(limit.head(n)) / static_cast<double>(n);
    run.summary["prediction"] = {{"predicted_limit", to_json(predicted)},
                                 {"simulated_limit", to_json(limit)},
                                 {"abs_error", abs_error},
                                 {"rel_error", rel_error}};
    run.summary["pattern"] = {{"formed", formed}, {"p_estimate", p_estimate}};
    if (distributed && !record.error_norms.empty()) {
        run.summary["observer_errors"] = {
            {"initial", to_json(record.error_norms.front())},
            {"final", to_json(record.error_norms.back())},
        };
    }
    return run.finalize(ExitCode::ok);
}

RunOutcome run_check(const ScenarioConfig& config, const std::string& out_dir) {
    return execute(config, out_dir, Depth::check);
}

RunOutcome run_synth(const ScenarioConfig& config, const std::string& out_dir) {
    return execute(config, out_dir, Depth::synth);
}

RunOutcome run_scenario(const ScenarioConfig& config, const std::string& out_dir) {
    return execute(config, out_dir, Depth::full);
}

RunOutcome run_sweep(const ScenarioConfig& config, const std::string& out_dir, int samples) {
    if (samples < 1) {
        Runner run(config, out_dir);
        return run.fail(ExitCode::config_error, "config", "sweep needs samples >= 1");
    }
    return execute(config, out_dir, Depth::full, samples);
}

// ----------------------------------------------------------- bundled study

std::string paper_grid_centralized_config() {
    return R"({
  "name": "paper_grid_centralized",
  "graph": {"type": "grid", "rows": 3, "cols": 3},
  "alpha": [1, 1, 1, -1, -1, -1, 1, 1, 1],
  "p0": 1.0,
  "a": 4.0,
  "leaders": [3, 2, 1, 4, 7, 8, 9],
  "mode": "centralized",
  "x0": [3.9, 2.0, 0.6, -3.2, -2.9, -4.2, 4.1, 2.1, 0.6],
  "z0": [-1.9, -3.3, 1.2, 4.9, -3.3, -2.4, -1.0],
  "seed": 0,
  "sim": {"t_end": 20.0, "dt": 0.001, "store_every": 10, "convergence_tol": 1e-8}
})";
}

std::string paper_grid_distributed_config() {
    return R"({
  "name": "paper_grid_distributed",
  "graph": {"type": "grid", "rows": 3, "cols": 3},
  "alpha": [1, 1, 1, -1, -1, -1, 1, 1, 1],
  "p0": 1.0,
  "a": 4.0,
  "leaders": [3, 2, 1, 4, 7, 8, 9],
  "leader_graph": {"type": "path"},
  "mode": "distributed",
  "x0": [3.9, 2.0, 0.6, -3.2, -2.9, -4.2, 4.1, 2.1, 0.6],
  "z0": [-1.9, -3.3, 1.2, 4.9, -3.3, -2.4, -1.0],
  "observer_init": {"random": {"lo": -5.0, "hi": 5.0}},
  "seed": 7,
  "chi_safety_factor": 1.05,
  "sim": {"t_end": 20.0, "dt": 0.001, "store_every": 10, "convergence_tol": 1e-8}
})";
}

}  // namespace patternctl
