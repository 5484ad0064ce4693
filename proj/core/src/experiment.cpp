#include "qugstep/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qugstep/dense.hpp"
#include "qugstep/gradient.hpp"
#include "qugstep/models.hpp"
#include "qugstep/step_size.hpp"

namespace qugstep {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// Fixed-width scientific form for trace CSV fields: 16 significant digits,
// independent of the value's magnitude.
std::string fmt_csv(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15e", v);
    return buf;
}

Hamiltonian parse_hamiltonian(const json& j, const std::filesystem::path& base_dir,
                              std::filesystem::path* h2_file_out) {
    if (!j.is_object()) throw ConfigError("`hamiltonian` must be an object");
    if (j.contains("builtin")) {
        const std::string name = j.at("builtin").get<std::string>();
        if (name != "h2") throw ConfigError("unknown builtin Hamiltonian: " + name);
        std::filesystem::path file = kDefaultH2File;
        if (j.contains("file")) file = j.at("file").get<std::string>();
        if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
        *h2_file_out = file;
        return builtin_h2(file).first;
    }
    if (j.contains("file")) {
        std::filesystem::path file = j.at("file").get<std::string>();
        if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
        return Hamiltonian::load(file);
    }
    throw ConfigError("`hamiltonian` needs either `builtin` or `file`");
}

Gate parse_gate(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "pauli_rotation") {
        const std::string label = j.at("string").get<std::string>();
        return PauliRotationGate{PauliString::parse(label, static_cast<int>(label.size())),
                                 j.at("param").get<int>()};
    }
    if (type == "rot_y") return RotYGate{j.at("qubit").get<int>(), j.at("param").get<int>()};
    if (type == "rot_z") return RotZGate{j.at("qubit").get<int>(), j.at("param").get<int>()};
    if (type == "cnot") return CnotGate{j.at("control").get<int>(), j.at("target").get<int>()};
    throw ConfigError("unknown gate type: " + type);
}

Ansatz parse_ansatz(const json& j, const Hamiltonian& h,
                    const std::filesystem::path& h2_file) {
    if (!j.is_object()) throw ConfigError("`ansatz` must be an object");
    if (j.contains("builtin")) {
        const std::string name = j.at("builtin").get<std::string>();
        if (name == "h2_uccsd") {
            return builtin_h2(h2_file.empty() ? std::filesystem::path(kDefaultH2File)
                                              : h2_file)
                .second;
        }
        if (name == "hw_efficient") {
            const int qubits = j.value("qubits", h.n_qubits());
            const int layers = j.at("layers").get<int>();
            const bool two_rotations = j.value("two_rotations", false);
            const double init = j.value("init", 0.0);
            return builtin_hw_efficient(qubits, layers, two_rotations, init);
        }
        throw ConfigError("unknown builtin ansatz: " + name);
    }
    if (j.contains("gates")) {
        const int qubits = j.value("qubits", h.n_qubits());
        std::vector<Gate> gates;
        for (const json& g : j.at("gates")) gates.push_back(parse_gate(g));
        const std::string reference =
            j.value("reference", std::string(static_cast<std::size_t>(qubits), '0'));
        const int n_params = j.at("params").get<int>();
        std::vector<double> init;
        if (j.contains("init")) {
            if (j.at("init").is_number()) {
                init.assign(static_cast<std::size_t>(n_params), j.at("init").get<double>());
            } else {
                init = j.at("init").get<std::vector<double>>();
            }
        }
        return Ansatz(qubits, reference, std::move(gates), n_params, std::move(init));
    }
    throw ConfigError("`ansatz` needs either `builtin` or `gates`");
}

}  // namespace

RunConfig RunConfig::load(const std::filesystem::path& config_file) {
    std::ifstream in(config_file);
    if (!in) throw ConfigError("cannot open config file: " + config_file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str(), config_file.parent_path());
}

RunConfig RunConfig::from_json_text(const std::string& text,
                                    const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }

    std::filesystem::path h2_file;
    Hamiltonian h = parse_hamiltonian(j.at("hamiltonian"), base_dir, &h2_file);
    Ansatz ansatz = parse_ansatz(j.at("ansatz"), h, h2_file);
    VqeRecipe recipe = VqeRecipe::make(std::move(ansatz), std::move(h));

    if (j.contains("optimizer")) {
        const json& o = j.at("optimizer");
        recipe.optimizer_kind = optimizer_kind_from_name(o.value("kind", std::string("adam")));
        recipe.gamma0 = o.value("gamma0", 0.1);
        recipe.hyper.momentum = o.value("momentum", recipe.hyper.momentum);
        recipe.hyper.rms_decay = o.value("rms_decay", recipe.hyper.rms_decay);
        recipe.hyper.adam_beta1 = o.value("beta1", recipe.hyper.adam_beta1);
        recipe.hyper.adam_beta2 = o.value("beta2", recipe.hyper.adam_beta2);
        recipe.hyper.epsilon = o.value("epsilon", recipe.hyper.epsilon);
    }
    if (j.contains("schedule")) {
        const std::string kind = j.at("schedule").value("kind", std::string("cosine"));
        if (kind == "cosine") {
            recipe.schedule_kind = ScheduleKind::cosine;
        } else if (kind == "constant") {
            recipe.schedule_kind = ScheduleKind::constant;
        } else {
            throw ConfigError("unknown schedule kind: " + kind);
        }
    }
    recipe.iterations = j.value("iterations", 200LL);
    recipe.budget.shots = j.value("shots", 360LL);
    const std::string interp =
        j.value("shot_interpretation", std::string("total_per_evaluation"));
    if (interp == "total_per_evaluation") {
        recipe.budget.interpretation = ShotInterpretation::total_per_evaluation;
    } else if (interp == "per_group") {
        recipe.budget.interpretation = ShotInterpretation::per_group;
    } else {
        throw ConfigError("unknown shot_interpretation: " + interp);
    }
    const std::string backend = j.value("noise_backend", std::string("sampled"));
    if (backend == "sampled") {
        recipe.noise = NoiseKind::sampled;
    } else if (backend == "gaussian_surrogate") {
        recipe.noise = NoiseKind::gaussian_surrogate;
    } else if (backend == "exact") {
        recipe.noise = NoiseKind::exact;
    } else {
        throw ConfigError("unknown noise_backend: " + backend);
    }

    RunConfig config{std::move(recipe)};
    config.seed = j.value("seed", 0ULL);
    config.repeats = j.value("repeats", 1);
    if (j.contains("output_dir")) {
        config.output_dir = j.at("output_dir").get<std::string>();
    }

    // Step-size source: exactly one of a fixed number, "qugstep", "theorem1".
    if (!j.contains("step_size")) throw ConfigError("config needs `step_size`");
    const json& s = j.at("step_size");
    if (s.is_number()) {
        config.step_source = StepSizeSource::fixed;
        config.fixed_step = s.get<double>();
        if (!(config.fixed_step > 0.0)) throw ConfigError("step_size must be positive");
    } else if (s.is_string() && s.get<std::string>() == "qugstep") {
        config.step_source = StepSizeSource::qugstep;
        if (!j.contains("qugstep")) {
            throw ConfigError("step_size \"qugstep\" needs a `qugstep` block");
        }
        const json& q = j.at("qugstep");
        config.tuner.candidates = q.at("candidates").get<std::vector<double>>();
        config.tuner.test_budget = q.at("test_shots").get<long long>();
        config.tuner.target_budget = q.value("target_shots", config.recipe.budget.shots);
        config.tuner.runs_per_candidate = q.value("runs", 5);
        config.tuner.profile_window = q.value("window", std::size_t{20});
        config.tuner.test_iterations = q.value("test_iterations", 0LL);
        config.tuner.master_seed = config.seed;
    } else if (s.is_string() && s.get<std::string>() == "theorem1") {
        config.step_source = StepSizeSource::theorem1;
        if (j.contains("theorem1")) {
            const json& t = j.at("theorem1");
            if (t.contains("mu") && t.at("mu").is_number()) {
                config.theorem1.mu = t.at("mu").get<double>();
            }
            if (t.contains("sigma") && t.at("sigma").is_number()) {
                config.theorem1.sigma = t.at("sigma").get<double>();
            }
        }
    } else {
        throw ConfigError("step_size must be a number, \"qugstep\", or \"theorem1\"");
    }
    return config;
}

std::uint64_t run_seed(std::uint64_t master, std::size_t axis_index, int repeat) {
    constexpr std::uint64_t kRunTag = 0x72756e00ULL;  // "run"
    return derive_stream(derive_stream(master, kRunTag, axis_index),
                         static_cast<std::uint64_t>(repeat));
}

ResolvedStep resolve_step(const RunConfig& config) {
    ResolvedStep resolved;
    switch (config.step_source) {
        case StepSizeSource::fixed:
            resolved.step = config.fixed_step;
            break;
        case StepSizeSource::qugstep: {
            TunerConfig tuner = config.tuner;
            if (tuner.target_budget == 0) tuner.target_budget = config.recipe.budget.shots;
            tuner.master_seed = config.seed;
            resolved.tuner = tune(tuner, config.recipe);
            resolved.step = resolved.tuner->h_target;
            break;
        }
        case StepSizeSource::theorem1: {
            resolved.mu = config.theorem1.mu.value_or(config.recipe.hamiltonian.curvature_bound());
            resolved.sigma = config.theorem1.sigma.value_or(
                exact_sigma(config.recipe.ansatz, config.recipe.ansatz.initial_params(),
                            config.recipe.hamiltonian, config.recipe.grouping,
                            config.recipe.budget));
            if (!(resolved.sigma > 0.0)) {
                throw NumericError(
                    "theorem1 step rule needs sigma > 0; the initial state has no "
                    "shot noise, pass an explicit `theorem1.sigma`");
            }
            resolved.step = optimal_step(resolved.mu, resolved.sigma,
                                         config.recipe.budget.shots);
            break;
        }
    }
    return resolved;
}

RunOutput execute_run(const RunConfig& config) {
    const ResolvedStep resolved = resolve_step(config);
    const double ground = ground_energy(config.recipe.hamiltonian);
    RunTrace trace = run_vqe(config.recipe, resolved.step, run_seed(config.seed, 0, 0), ground);
    return RunOutput{resolved.step, std::move(trace), resolved.tuner};
}

SweepResult sweep(const RunConfig& base, SweepAxis axis,
                  const std::vector<double>& values, int repeats) {
    if (values.empty()) throw ArgumentError("sweep needs a nonempty axis list");
    if (repeats < 1) throw ArgumentError("sweep needs repeats >= 1");

    SweepResult result;
    result.axis = axis;
    result.ground_reference = ground_energy(base.recipe.hamiltonian);

    for (std::size_t i = 0; i < values.size(); ++i) {
        SweepCell cell;
        cell.axis_value = values[i];

        RunConfig config = base;
        double step = 0.0;
        if (axis == SweepAxis::step_size) {
            step = values[i];
            if (!(step > 0.0)) throw ArgumentError("sweep step sizes must be positive");
        } else {
            const double b = values[i];
            if (b < 1.0 || b != std::floor(b)) {
                throw ArgumentError("sweep budgets must be positive integers");
            }
            config.recipe.budget.shots = static_cast<long long>(b);
            step = resolve_step(config).step;
        }

        for (int r = 0; r < repeats; ++r) {
            try {
                cell.traces.push_back(run_vqe(config.recipe, step,
                                              run_seed(base.seed, i, r),
                                              result.ground_reference));
            } catch (const RunAbortedError& e) {
                std::ostringstream msg;
                msg << "value " << values[i] << " repeat " << r << ": " << e.what();
                cell.failures.push_back(msg.str());
            }
        }

        const std::size_t n = cell.traces.size();
        if (n > 0) {
            double mean = 0.0;
            for (const RunTrace& t : cell.traces) mean += t.exact_profile;
            mean /= static_cast<double>(n);
            double var = 0.0;
            for (const RunTrace& t : cell.traces) {
                var += (t.exact_profile - mean) * (t.exact_profile - mean);
            }
            cell.mean_profile = mean;
            cell.std_profile = std::sqrt(var / static_cast<double>(n));

            const std::size_t rows = cell.traces.front().rows.size();
            cell.mean_exact_trace.assign(rows, 0.0);
            cell.std_exact_trace.assign(rows, 0.0);
            for (std::size_t k = 0; k < rows; ++k) {
                double m = 0.0;
                for (const RunTrace& t : cell.traces) m += t.rows[k].exact_energy;
                m /= static_cast<double>(n);
                double v = 0.0;
                for (const RunTrace& t : cell.traces) {
                    v += (t.rows[k].exact_energy - m) * (t.rows[k].exact_energy - m);
                }
                cell.mean_exact_trace[k] = m;
                cell.std_exact_trace[k] = std::sqrt(v / static_cast<double>(n));
            }
        }
        result.cells.push_back(std::move(cell));
    }
    return result;
}

void write_trace_csv(const RunTrace& trace, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw ConfigError("cannot write trace file: " + file.string());
    out << "iter,noisy_energy,exact_energy,grad_inf_norm,learning_rate,cumulative_shots\n";
    for (const TraceRow& r : trace.rows) {
        out << r.iteration << ',' << fmt_csv(r.noisy_energy) << ','
            << fmt_csv(r.exact_energy) << ',' << fmt_csv(r.grad_inf_norm) << ','
            << fmt_csv(r.learning_rate) << ',' << r.cumulative_shots << '\n';
    }
}

RunTrace read_trace_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open trace file: " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty trace file: " + file.string());
    RunTrace trace;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        TraceRow row{};
        std::istringstream ls(line);
        std::string field;
        std::getline(ls, field, ',');
        row.iteration = std::stoll(field);
        std::getline(ls, field, ',');
        row.noisy_energy = std::stod(field);
        std::getline(ls, field, ',');
        row.exact_energy = std::stod(field);
        std::getline(ls, field, ',');
        row.grad_inf_norm = std::stod(field);
        std::getline(ls, field, ',');
        row.learning_rate = std::stod(field);
        std::getline(ls, field, ',');
        row.cumulative_shots = std::stoll(field);
        trace.rows.push_back(row);
    }
    if (!trace.rows.empty()) {
        trace.total_shots = trace.rows.back().cumulative_shots;
        trace.profile_window = std::min<std::size_t>(20, trace.rows.size());
        trace.noisy_profile =
            performance_profile(trace.noisy_energies(), trace.profile_window);
        trace.exact_profile =
            performance_profile(trace.exact_energies(), trace.profile_window);
    }
    return trace;
}

std::string tuner_result_json(const TunerResult& result) {
    json profiles = json::object();
    json exact_profiles = json::object();
    for (const auto& [h, score] : result.profiles) {
        const std::string key = fmt_double(h);
        profiles[key] = std::isinf(score) ? json("failed") : json(score);
        const double ex = result.exact_profiles.at(h);
        exact_profiles[key] = std::isinf(ex) ? json("failed") : json(ex);
    }
    json j{{"h_test", result.h_test},
           {"h_target", result.h_target},
           {"test_budget", result.test_budget},
           {"target_budget", result.target_budget},
           {"runs_per_candidate", result.runs_per_candidate},
           {"test_iterations", result.test_iterations},
           {"profiles", profiles},
           {"exact_profiles", exact_profiles},
           {"failures", result.failures},
           {"shots_spent_tuning", result.shots_spent_tuning},
           {"shots_spent_tuning_per_eval", result.shots_spent_tuning_per_eval}};
    return j.dump(2) + "\n";
}

std::string write_sweep_outputs(const SweepResult& result,
                                const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const char* axis_name = result.axis == SweepAxis::step_size ? "step_size" : "budget";

    json cells = json::array();
    for (const SweepCell& cell : result.cells) {
        const std::string cell_dir_name =
            std::string(axis_name) + "_" + fmt_double(cell.axis_value);
        const std::filesystem::path cell_dir = out_dir / cell_dir_name;
        std::filesystem::create_directories(cell_dir);

        json trace_paths = json::array();
        for (std::size_t r = 0; r < cell.traces.size(); ++r) {
            const std::string name = "run_" + std::to_string(r) + ".csv";
            write_trace_csv(cell.traces[r], cell_dir / name);
            trace_paths.push_back(cell_dir_name + "/" + name);
        }

        // Per-iteration aggregate, one line per iteration.
        std::ofstream agg(cell_dir / "aggregate.csv");
        agg << "iter,mean_exact_energy,std_exact_energy\n";
        for (std::size_t k = 0; k < cell.mean_exact_trace.size(); ++k) {
            agg << k << ',' << fmt_double(cell.mean_exact_trace[k]) << ','
                << fmt_double(cell.std_exact_trace[k]) << '\n';
        }

        cells.push_back(json{{"value", cell.axis_value},
                             {"mean_profile", cell.mean_profile},
                             {"std_profile", cell.std_profile},
                             {"traces", trace_paths},
                             {"failures", cell.failures}});
    }

    json summary{{"axis", axis_name},
                 {"ground_energy", result.ground_reference},
                 {"cells", cells}};
    const std::string text = summary.dump(2) + "\n";
    std::ofstream out(out_dir / "sweep_summary.json");
    out << text;
    return text;
}

}  // namespace qugstep
