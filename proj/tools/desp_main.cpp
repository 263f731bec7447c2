// desp: run a registered simulation model and emit cross-replication
// statistics as text, csv or json.
//
// Exit codes: 0 success, 2 argument error, 3 model/configuration error,
// 4 I/O error, 5 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "desp/errors.hpp"
#include "desp/models/registry.hpp"
#include "desp/report.hpp"
#include "desp/rng_fixtures.hpp"
#include "desp/simulation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;
constexpr int kExitInternal = 5;

struct RunSpec {
    std::string model;
    desp::SimulationConfig config;
    desp::ParamSet params;
    desp::OutputFormat format = desp::OutputFormat::kText;
    std::string output_path;  // empty = stdout
};

// "key=value" with a numeric value; anything else is a usage error.
std::pair<std::string, double> parse_param(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw CLI::ValidationError("--param", "expected key=value, got '" + text + "'");
    }
    const std::string key = text.substr(0, eq);
    const std::string value = text.substr(eq + 1);
    std::size_t used = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != value.size() || value.empty()) {
        throw CLI::ValidationError("--param",
                                   "value for '" + key + "' is not a number: '" + value + "'");
    }
    return {key, parsed};
}

int run_command(const RunSpec& spec) {
    desp::Simulation sim(spec.config);
    std::unique_ptr<desp::Model> model =
        desp::models::make_model(spec.model, sim, spec.params);
    const desp::RunResult result = sim.run(*model);

    const desp::ReportHeader header{spec.model, spec.config.seed,
                                    spec.config.replications};
    const std::string report = desp::render(result.stats, header, spec.format);

    if (spec.output_path.empty()) {
        std::cout << report;
        return kExitOk;
    }
    std::ofstream out(spec.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path '" << spec.output_path << "'\n";
        return kExitIo;
    }
    out << report;
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing to '" << spec.output_path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* check = std::getenv("DESP_RNG_FIXTURE_CHECK");
        check != nullptr && std::string(check) == "1") {
        const std::string mismatch = desp::verify_rng_fixtures();
        if (!mismatch.empty()) {
            std::cerr << "error: " << mismatch << "\n";
            return kExitInternal;
        }
    }

    CLI::App app{"Discrete-event random simulation engine (resource view)"};
    app.require_subcommand(1);

    RunSpec spec;
    std::vector<std::string> raw_params;
    std::string format_name = "text";
    bool ordered_forks = false;

    CLI::App* run = app.add_subcommand("run", "run a simulation model");
    run->add_option("--model", spec.model, "model name")
        ->required()
        ->check(CLI::IsMember(desp::models::model_names()));
    run->add_option("--replications", spec.config.replications,
                    "number of independent replications")
        ->required();
    run->add_option("--seed", spec.config.seed, "rng seed in [1, 2^31-2]")->required();
    run->add_option("--t-start", spec.config.tstart, "replication start time (default 0)");
    run->add_option("--t-end", spec.config.tmax, "replication time horizon")->required();
    run->add_option("--param", raw_params, "model parameter key=value (repeatable)");
    run->add_option("--format", format_name, "output format: text, csv or json")
        ->check(CLI::IsMember(std::vector<std::string>{"text", "csv", "json"}));
    run->add_option("--output", spec.output_path, "output file path (default stdout)");
    run->add_flag("--ordered-forks", ordered_forks,
                  "philosophers: acquire forks lower index first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (app.exit(e) == 0) {
            return kExitOk;  // --help
        }
        return kExitUsage;
    }

    try {
        for (const std::string& raw : raw_params) {
            try {
                const auto [key, value] = parse_param(raw);
                spec.params.set(key, value);
            } catch (const CLI::ParseError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
        }
        if (ordered_forks) {
            spec.params.set("ordered_forks", 1.0);
        }
        spec.format = desp::parse_format(format_name);
        return run_command(spec);
    } catch (const desp::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const desp::SimulationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
