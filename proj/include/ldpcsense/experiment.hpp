#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldpcsense/gf2.hpp"
#include "ldpcsense/tanner.hpp"

// Monte Carlo experiment runner: versioned JSON configuration, per-trial
// seeding hash(master_seed, trial_index), trial-level parallelism with
// order-independent aggregation, and CSV serialization with 12 significant
// digits. Identical config + seed gives byte-identical CSV.

namespace ldpcsense {

enum class ExperimentCommand { RecoverCs, DecodeCc };

struct MatrixSource {
    std::optional<ConstructionSpec> spec;
    std::optional<std::string> alist_path;

    Gf2Matrix load() const;
    std::string describe() const;
};

struct ExperimentConfig {
    ExperimentCommand command = ExperimentCommand::RecoverCs;
    MatrixSource matrix;
    std::string sweep_name;            // "k", "alpha", "epsilon", "snr", "p"
    std::vector<double> sweep_values;  // nonempty
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string out;        // optional CSV path
    std::size_t threads = 0;  // 0 = hardware concurrency
    double amplitude = 1.0;   // recover-cs signal scale
    bool timing = false;      // measured wall time breaks byte-identical output
};

// Parses and validates a schema-1 JSON config; unknown keys are rejected.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

struct ResultRow {
    std::string command;
    std::string matrix;
    std::size_t n = 0, m = 0;
    std::string param_name;
    double param_value = 0.0;
    std::size_t trials = 0;
    double success_rate = 0.0;
    double mean_error_l1 = 0.0;
    double mean_error_l2 = 0.0;
    double mean_error_linf = 0.0;
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
};

std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

std::string csv_header();
std::string csv_line(const ResultRow& row);
void write_csv(const std::string& path, const std::vector<ResultRow>& rows);

// Worker count resolution: explicit value, else LDPC_SENSE_THREADS, else
// hardware concurrency.
std::size_t resolve_threads(std::size_t requested);

}  // namespace ldpcsense
