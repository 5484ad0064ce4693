#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qugstep/dense.hpp"
#include "qugstep/experiment.hpp"
#include "qugstep/models.hpp"
#include "qugstep/step_size.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GlobalOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> output_dir;
    std::optional<std::string> backend;
};

qugstep::RunConfig load_config(const std::string& path, const GlobalOverrides& g) {
    qugstep::RunConfig config = qugstep::RunConfig::load(path);
    if (g.seed) {
        config.seed = *g.seed;
        config.tuner.master_seed = *g.seed;
    }
    if (g.output_dir) config.output_dir = *g.output_dir;
    if (g.backend) {
        if (*g.backend == "sampled") {
            config.recipe.noise = qugstep::NoiseKind::sampled;
        } else if (*g.backend == "gaussian_surrogate") {
            config.recipe.noise = qugstep::NoiseKind::gaussian_surrogate;
        } else if (*g.backend == "exact") {
            config.recipe.noise = qugstep::NoiseKind::exact;
        } else {
            throw qugstep::ConfigError("unknown backend: " + *g.backend);
        }
    }
    return config;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void write_text(const fs::path& file, const std::string& text) {
    std::ofstream out(file);
    if (!out) throw qugstep::ConfigError("cannot write " + file.string());
    out << text;
}

int cmd_run(const std::string& config_path, const GlobalOverrides& g) {
    qugstep::RunConfig config = load_config(config_path, g);
    fs::create_directories(config.output_dir);
    try {
        qugstep::RunOutput output = qugstep::execute_run(config);
        qugstep::write_trace_csv(output.trace, config.output_dir / "trace.csv");
        if (output.tuner) {
            write_text(config.output_dir / "tuner.json",
                       qugstep::tuner_result_json(*output.tuner));
        }
        json summary{{"step_size", output.step},
                     {"iterations", output.trace.rows.size()},
                     {"noisy_profile", output.trace.noisy_profile},
                     {"exact_profile", output.trace.exact_profile},
                     {"ground_energy", output.trace.ground_reference},
                     {"total_shots", output.trace.total_shots},
                     {"trace", "trace.csv"}};
        const std::string text = summary.dump(2) + "\n";
        write_text(config.output_dir / "run.json", text);
        std::cout << text;
        return 0;
    } catch (const qugstep::RunAbortedError& e) {
        // Flush what we have so the failure can be inspected.
        const fs::path diag = config.output_dir / "trace_aborted.csv";
        qugstep::write_trace_csv(e.partial, diag);
        std::cerr << "run aborted: " << e.what() << "\ndiagnostic trace: " << diag
                  << "\n";
        return 1;
    }
}

int cmd_tune(const std::string& config_path, const GlobalOverrides& g) {
    qugstep::RunConfig config = load_config(config_path, g);
    if (config.step_source != qugstep::StepSizeSource::qugstep) {
        throw qugstep::ConfigError("`tune` needs step_size \"qugstep\" and a qugstep block");
    }
    qugstep::ResolvedStep resolved = qugstep::resolve_step(config);
    const std::string text = qugstep::tuner_result_json(*resolved.tuner);
    fs::create_directories(config.output_dir);
    write_text(config.output_dir / "tuner.json", text);
    std::cout << text;
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& axis_name,
              std::vector<double> values, std::optional<int> repeats,
              const GlobalOverrides& g) {
    qugstep::RunConfig config = load_config(config_path, g);
    qugstep::SweepAxis axis;
    if (axis_name == "step_size") {
        axis = qugstep::SweepAxis::step_size;
    } else if (axis_name == "budget") {
        axis = qugstep::SweepAxis::budget;
    } else {
        throw qugstep::ConfigError("--axis must be step_size or budget");
    }
    const int n_repeats = repeats.value_or(config.repeats);
    qugstep::SweepResult result = qugstep::sweep(config, axis, values, n_repeats);
    const std::string text = qugstep::write_sweep_outputs(result, config.output_dir);
    std::cout << text;
    return 0;
}

int cmd_bound(double mu, double sigma, long long shots, int curve_points) {
    const double h_opt = qugstep::optimal_step(mu, sigma, shots);
    json curve = json::array();
    // Log-spaced curve over four decades around the optimum.
    const double lo = h_opt * 1e-2;
    const double hi = h_opt * 1e2;
    for (int k = 0; k < curve_points; ++k) {
        const double t = static_cast<double>(k) / (curve_points - 1);
        const double h = lo * std::pow(hi / lo, t);
        curve.push_back(json{{"h", h}, {"bound", qugstep::error_bound(mu, sigma, h, shots)}});
    }
    json out{{"mu", mu},
             {"sigma", sigma},
             {"shots", shots},
             {"optimal_step", h_opt},
             {"bound_at_optimum", qugstep::error_bound(mu, sigma, h_opt, shots)},
             {"curve", curve}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_ground(const std::string& hamiltonian_file) {
    const qugstep::Hamiltonian h = qugstep::Hamiltonian::load(hamiltonian_file);
    std::cout << fmt(qugstep::ground_energy(h)) << "\n";
    return 0;
}

int cmd_sigma(const std::string& config_path, const GlobalOverrides& g) {
    qugstep::RunConfig config = load_config(config_path, g);
    const auto& r = config.recipe;
    const double sigma =
        qugstep::exact_sigma(r.ansatz, r.ansatz.initial_params(), r.hamiltonian,
                             r.grouping, r.budget);
    const double n = static_cast<double>(
        qugstep::shots_per_evaluation(r.budget, r.grouping.n_groups()));
    json out{{"sigma", sigma},
             {"shots_per_evaluation", n},
             {"estimator_std", sigma / std::sqrt(n)},
             {"groups", r.grouping.n_groups()}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shot-noise-aware VQE toolkit with budget-scaled step-size selection"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after a subcommand too

    GlobalOverrides g;
    std::optional<std::uint64_t> seed_flag;
    std::optional<std::string> outdir_flag;
    std::optional<std::string> backend_flag;
    app.add_option("--seed", seed_flag, "Override the config master seed");
    app.add_option("--output-dir", outdir_flag, "Override the config output directory");
    app.add_option("--backend", backend_flag,
                   "Override the noise backend (sampled | gaussian_surrogate)");

    std::string config_path;
    auto* run = app.add_subcommand("run", "Execute one VQE run from a JSON config");
    run->add_option("config", config_path, "JSON config file")->required();

    auto* tune = app.add_subcommand("tune", "Grid-search the finite-difference step size");
    tune->add_option("config", config_path, "JSON config file")->required();

    std::string axis_name;
    std::vector<double> axis_values;
    std::optional<int> repeats_flag;
    auto* sweep = app.add_subcommand("sweep", "Run a step-size or budget sweep");
    sweep->add_option("config", config_path, "JSON config file")->required();
    sweep->add_option("--axis", axis_name, "step_size | budget")->required();
    sweep->add_option("--values", axis_values, "Axis values (comma separated)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--repeats", repeats_flag, "Override config repeats");

    double mu = 0.0, sigma = 0.0;
    long long shots = 0;
    int curve_points = 33;
    auto* bound = app.add_subcommand("bound", "Print the gradient error bound and optimum");
    bound->add_option("--mu", mu, "Second-derivative bound")->required();
    bound->add_option("--sigma", sigma, "Noise scale bound")->required();
    bound->add_option("--shots", shots, "Shot budget N")->required();
    bound->add_option("--points", curve_points, "Curve resolution");

    std::string hamiltonian_file;
    auto* ground = app.add_subcommand("ground", "Print the exact ground energy of a Hamiltonian file");
    ground->add_option("hamiltonian", hamiltonian_file, "Hamiltonian text file")->required();

    auto* sigma_cmd = app.add_subcommand("sigma", "Print exact sigma at the initial parameters");
    sigma_cmd->add_option("config", config_path, "JSON config file")->required();

    CLI11_PARSE(app, argc, argv);

    g.seed = seed_flag;
    g.output_dir = outdir_flag;
    g.backend = backend_flag;

    try {
        if (run->parsed()) return cmd_run(config_path, g);
        if (tune->parsed()) return cmd_tune(config_path, g);
        if (sweep->parsed()) {
            return cmd_sweep(config_path, axis_name, axis_values, repeats_flag, g);
        }
        if (bound->parsed()) return cmd_bound(mu, sigma, shots, curve_points);
        if (ground->parsed()) return cmd_ground(hamiltonian_file);
        if (sigma_cmd->parsed()) return cmd_sigma(config_path, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
