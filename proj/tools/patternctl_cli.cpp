// Command-line front end: scenario configs in, certificates / trajectories /
// snapshots out. Subcommands: check, synth, run, reproduce-paper, sweep.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "patternctl/scenario.hpp"

namespace {

using patternctl::ExitCode;
using patternctl::RunOutcome;
using patternctl::ScenarioConfig;

const char* code_name(ExitCode code) {
    switch (code) {
        case ExitCode::ok: return "ok";
        case ExitCode::config_error: return "config-error";
        case ExitCode::infeasible: return "infeasible";
        case ExitCode::assumption_failure: return "assumption-failure";
        case ExitCode::solver_failure: return "solver-failure";
        case ExitCode::non_convergence: return "non-convergence";
    }
    return "unknown";
}

void report(const RunOutcome& outcome, const std::string& out_dir) {
    const auto summary = nlohmann::json::parse(outcome.summary);
    std::cout << "status: " << code_name(outcome.code);
    if (summary.contains("failure")) {
        std::cout << " (stage " << summary["failure"]["stage"].get<std::string>() << ": "
                  << summary["failure"]["message"].get<std::string>() << ")";
    } else if (summary.contains("pattern")) {
        std::cout << "; pattern formed: " << std::boolalpha
                  << summary["pattern"]["formed"].get<bool>()
                  << ", p = " << summary["pattern"]["p_estimate"].get<double>();
    } else if (summary.contains("sweep")) {
        std::cout << "; " << summary["sweep"]["pattern_formed"].get<int>() << "/"
                  << summary["sweep"]["samples"].get<int>() << " runs formed the pattern";
    }
    std::cout << "\nsummary: " << (std::filesystem::path(out_dir) / "summary.json").string()
              << "\n";
}

// Config-stage failures happen before the runner exists; still leave a
// summary behind so no exit path is silent.
int config_failure(const std::string& out_dir, const std::string& message) {
    nlohmann::ordered_json summary;
    summary["failure"] = {{"stage", "config"}, {"message", message}};
    summary["exit_code"] = static_cast<int>(ExitCode::config_error);
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / "summary.json", std::ios::binary);
    out << summary.dump(2) << "\n";
    std::cerr << "config error: " << message << "\n";
    return static_cast<int>(ExitCode::config_error);
}

struct CommonArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    std::optional<std::string> mode;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool config_required) {
    auto* opt = cmd->add_option("--config", args.config_path, "scenario config (JSON)");
    if (config_required) opt->required();
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--seed", args.seed, "override the scenario seed");
    cmd->add_option("--mode", args.mode, "override the mode (centralized|distributed)")
        ->check(CLI::IsMember({"centralized", "distributed"}));
}

int dispatch(const CommonArgs& args,
             const std::function<RunOutcome(const ScenarioConfig&, const std::string&)>& go) {
    ScenarioConfig config;
    try {
        config = patternctl::load_scenario(args.config_path);
        if (args.seed) config.seed = *args.seed;
        if (args.mode) config.mode = *args.mode;
    } catch (const patternctl::ConfigError& err) {
        return config_failure(args.out_dir, err.what());
    }
    const RunOutcome outcome = go(config, args.out_dir);
    report(outcome, args.out_dir);
    return static_cast<int>(outcome.code);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern synthesis for leader-controlled Laplacian networks"};
    app.require_subcommand(1);

    CommonArgs check_args;
    auto* check = app.add_subcommand("check", "assumptions and pattern feasibility only");
    add_common(check, check_args, true);

    CommonArgs synth_args;
    auto* synth = app.add_subcommand("synth", "synthesize designs and certificates");
    add_common(synth, synth_args, true);

    CommonArgs run_args;
    auto* run = app.add_subcommand("run", "full pipeline: check, synth, simulate, verify");
    add_common(run, run_args, true);

    CommonArgs sweep_args;
    int sweep_samples = 20;
    auto* sweep = app.add_subcommand("sweep", "sample initial conditions over the basin");
    add_common(sweep, sweep_args, true);
    sweep->add_option("--samples", sweep_samples, "number of sampled initial conditions");

    CommonArgs paper_args;
    std::string paper_mode = "both";
    auto* paper =
        app.add_subcommand("reproduce-paper", "run the bundled 3x3-grid study scenarios");
    paper->add_option("--out", paper_args.out_dir, "output directory");
    paper->add_option("--seed", paper_args.seed, "override the scenario seed");
    paper->add_option("--mode", paper_mode, "centralized, distributed, or both")
        ->check(CLI::IsMember({"centralized", "distributed", "both"}));

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return dispatch(check_args, patternctl::run_check);
    if (synth->parsed()) return dispatch(synth_args, patternctl::run_synth);
    if (run->parsed()) return dispatch(run_args, patternctl::run_scenario);
    if (sweep->parsed()) {
        return dispatch(sweep_args, [&](const ScenarioConfig& c, const std::string& out) {
            return patternctl::run_sweep(c, out, sweep_samples);
        });
    }
    if (paper->parsed()) {
        int worst = 0;
        const auto run_one = [&](const std::string& text, const std::string& subdir) {
            ScenarioConfig config = patternctl::parse_scenario(text);
            if (paper_args.seed) config.seed = *paper_args.seed;
            const std::string out =
                (std::filesystem::path(paper_args.out_dir) / subdir).string();
            const RunOutcome outcome = patternctl::run_scenario(config, out);
            std::cout << "[" << subdir << "] ";
            report(outcome, out);
            worst = std::max(worst, static_cast<int>(outcome.code));
        };
        if (paper_mode != "distributed") {
            run_one(patternctl::paper_grid_centralized_config(), "centralized");
        }
        if (paper_mode != "centralized") {
            run_one(patternctl::paper_grid_distributed_config(), "distributed");
        }
        return worst;
    }
    return 0;
}
