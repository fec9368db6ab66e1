// symdyn — command-line front end: evolve, critical, decompose, sweep.

#include "symdyn/cli.hpp"
#include "symdyn/decomposition.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace symdyn;
using namespace symdyn::cli;

int run(const std::string& command, const std::string& config_path, double time,
        const std::string& output_path, bool print_config) {
    const ExperimentConfig config = load_config(config_path);

    std::string payload;
    if (print_config) {
        payload = config_to_json(config).dump(2) + "\n";
    } else if (command == "evolve") {
        payload = cmd_evolve(config);
    } else if (command == "critical") {
        payload = cmd_critical(config).dump(2) + "\n";
    } else if (command == "decompose") {
        payload = cmd_decompose(config, time).dump(2) + "\n";
    } else {
        payload = cmd_sweep(config);
    }

    if (output_path.empty()) {
        std::cout << payload;
        if (!std::cout) throw std::ios_base::failure("write to stdout failed");
    } else {
        write_file_atomic(output_path, payload);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact evolution of two coupled bosonic modes"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path;
    std::string output_path;
    bool print_config = false;
    double time = 0.0;
    app.add_option("--output", output_path, "write the result to this path (atomic)");
    app.add_flag("--print-config", print_config, "echo the parsed config and exit");

    auto* evolve = app.add_subcommand("evolve", "time series of observables");
    evolve->add_option("config", config_path, "JSON config")->required();
    auto* critical = app.add_subcommand("critical", "critical coupling and exponent fit");
    critical->add_option("config", config_path, "JSON config")->required();
    auto* decompose = app.add_subcommand("decompose", "gate-list factorization of S(t)");
    decompose->add_option("config", config_path, "JSON config")->required();
    decompose->add_option("--time", time, "evolution time")->required();
    auto* sweep = app.add_subcommand("sweep", "parameter sweep");
    sweep->add_option("config", config_path, "JSON config")->required();

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, config_path, time, output_path, print_config);
    } catch (const symdyn::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return symdyn::cli::kConfigError;
    } catch (const symdyn::cli::UnstableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return symdyn::cli::kUnstable;
    } catch (const symdyn::InstabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return symdyn::cli::kUnstable;
    } catch (const symdyn::DecompositionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return symdyn::cli::kDecompositionFailure;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return symdyn::cli::kIoError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return symdyn::cli::kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
