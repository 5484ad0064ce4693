#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qugstep/tuner.hpp"
#include "qugstep/vqe.hpp"

namespace qugstep {

enum class StepSizeSource { fixed, qugstep, theorem1 };

// Second-derivative / noise-scale inputs for the closed-form step rule.
// Unset fields fall back to curvature_bound(H) and exact_sigma at the
// initial parameters.
struct Theorem1Options {
    std::optional<double> mu;
    std::optional<double> sigma;
};

// A full experiment description, usually parsed from a JSON document.
struct RunConfig {
    VqeRecipe recipe;
    StepSizeSource step_source = StepSizeSource::fixed;
    double fixed_step = 0.0;
    TunerConfig tuner;  // used when step_source == qugstep
    Theorem1Options theorem1;
    std::uint64_t seed = 0;
    int repeats = 1;
    std::filesystem::path output_dir = "out";

    // Relative Hamiltonian paths in the document resolve against the config
    // file's directory.
    static RunConfig load(const std::filesystem::path& config_file);
    static RunConfig from_json_text(const std::string& text,
                                    const std::filesystem::path& base_dir);
};

// Deterministic per-run seed for repeat r of axis cell i under a master seed.
std::uint64_t run_seed(std::uint64_t master, std::size_t axis_index, int repeat);

struct ResolvedStep {
    double step = 0.0;
    std::optional<TunerResult> tuner;  // present for the qugstep source
    double mu = 0.0;                   // filled for the theorem1 source
    double sigma = 0.0;
};

// Resolves the configured step-size source, running the grid-search tuner
// when requested.
ResolvedStep resolve_step(const RunConfig& config);

struct RunOutput {
    double step;
    RunTrace trace;
    std::optional<TunerResult> tuner;
};

// Executes the configured run: resolve the step, then one seeded VQE run.
RunOutput execute_run(const RunConfig& config);

enum class SweepAxis { step_size, budget };

struct SweepCell {
    double axis_value;
    std::vector<RunTrace> traces;
    std::vector<std::string> failures;
    // Mean / standard deviation of the per-run exact-energy profiles.
    double mean_profile = 0.0;
    double std_profile = 0.0;
    // Per-iteration mean / std of the exact-energy traces across repeats.
    std::vector<double> mean_exact_trace;
    std::vector<double> std_exact_trace;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::step_size;
    std::vector<SweepCell> cells;
    double ground_reference = 0.0;
};

// Runs `repeats` independently seeded runs per axis value. Individual run
// failures are recorded in the cell and the sweep continues.
SweepResult sweep(const RunConfig& base, SweepAxis axis,
                  const std::vector<double>& values, int repeats);

// Trace CSV with the exact column order
// iter,noisy_energy,exact_energy,grad_inf_norm,learning_rate,cumulative_shots
// and >= 12 significant digits on floating-point fields.
void write_trace_csv(const RunTrace& trace, const std::filesystem::path& file);
RunTrace read_trace_csv(const std::filesystem::path& file);

std::string tuner_result_json(const TunerResult& result);

// Writes per-run CSVs, a per-value aggregate CSV, and sweep_summary.json
// under out_dir; returns the summary JSON text.
std::string write_sweep_outputs(const SweepResult& result,
                                const std::filesystem::path& out_dir);

}  // namespace qugstep
