// cli.hpp — experiment configs and the batch commands behind the symdyn
// command-line tool. All commands are deterministic: identical configs
// produce byte-identical output.

#pragma once

#include "symdyn/circuit_qed.hpp"
#include "symdyn/hamiltonian.hpp"
#include "symdyn/normal_modes.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace symdyn::cli {

enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kUnstable = 3,
    kIoError = 4,
    kDecompositionFailure = 5,
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnstableError : std::runtime_error {
    double g_cr;
    UnstableError(const std::string& msg, double gcr) : std::runtime_error(msg), g_cr(gcr) {}
};

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    int n_steps = 1;
};

struct InitialStateSpec {
    enum class Kind { vacuum, thermal, two_mode_squeezed };
    Kind kind = Kind::vacuum;
    double nu_plus = 1.0;
    double nu_minus = 1.0;
    double r = 0.0;
};

struct SweepSpec {
    std::string parameter;  // g, g_bs, g_sq, lambda_a, lambda_b, omega_a, omega_b
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    bool log_spacing = false;
    double time = 1.0;  // observables are taken at this fixed time
};

struct ExperimentConfig {
    std::optional<HamiltonianParams> hamiltonian;
    std::optional<CircuitParams> circuit;
    InitialStateSpec initial_state;
    TimeGrid time_grid{0.0, 10.0, 101};
    std::vector<std::string> outputs{"n", "s_vn", "nu_tilde_minus"};
    std::optional<SweepSpec> sweep;

    HamiltonianParams resolved_params() const;
};

// Parse and validate a JSON config document. Throws ConfigError.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);  // ConfigError on parse, IO mapped too

// Canonical JSON form; parsing it back yields an identical experiment.
nlohmann::ordered_json config_to_json(const ExperimentConfig& config);

// Shortest decimal representation that parses back to the same double,
// capped at 12 significant digits.
std::string format_number(double x);

// CSV with header t,n,s_vn,nu_tilde_minus (columns present iff requested).
std::string cmd_evolve(const ExperimentConfig& config);

// JSON report {g_cr, exponent_fit, prefactor, samples}.
nlohmann::json cmd_critical(const ExperimentConfig& config);

// JSON gate list for S(t) plus reconstruction residual.
nlohmann::json cmd_decompose(const ExperimentConfig& config, double t);

// CSV over the swept parameter: kappas, stability, N and nu~_- at fixed time.
std::string cmd_sweep(const ExperimentConfig& config, bool parallel = true);

// Bogoliubov pair for stable params: analytic when the closed form applies,
// numeric otherwise. Throws UnstableError past the transition.
BogoliubovPair make_pair(const HamiltonianParams& p);

// Write atomically: temp file in the same directory, rename on success.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace symdyn::cli
