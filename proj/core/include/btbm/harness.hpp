#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "btbm/measure.hpp"
#include "btbm/processes.hpp"

namespace btbm {

enum class Experiment {
    marginal,
    moments,
    com_verify,
    quartic,
    pvariation,
    localtime,
    selfintersect,
    variance_decay,
};

const char* experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);

struct ExperimentConfig {
    Experiment experiment = Experiment::moments;
    ProcessVariant variant = ProcessVariant::simple();
    double t = 1.0;
    double mu = 0.0;
    std::size_t n_replicates = 0;  // 0: experiment default
    std::size_t n_grid = 0;        // 0: experiment default
    uint64_t seed = 1;
    std::string output_path;       // empty: no file
    std::string format = "csv";    // csv | json
    double alpha = 0.01;
};

// One verified statistic.  pass <=> |estimate - target| <= tolerance under
// the stated rule (or p-value rules, where estimate is the p-value and
// tolerance the significance threshold).
struct EstimateReport {
    std::string statistic;
    double estimate = 0.0;
    double se = 0.0;
    uint64_t n = 0;
    double target = 0.0;
    std::string target_source;  // closed-form | oracle | definition | significance
    double tolerance = 0.0;
    std::string tolerance_rule;
    bool pass = true;
    double runtime_s = 0.0;  // console diagnostics only, never serialized
    uint64_t seed = 0;
};

struct ExperimentResult {
    std::string name;
    std::vector<EstimateReport> rows;
    bool passed = true;
    double runtime_s = 0.0;

    void add(EstimateReport row) {
        passed = passed && row.pass;
        rows.push_back(std::move(row));
    }
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

ExperimentResult run_moments(const ExperimentConfig& cfg);
ExperimentResult run_marginal(const ExperimentConfig& cfg);
ExperimentResult run_com_verify(const ExperimentConfig& cfg);
ExperimentResult run_quartic(const ExperimentConfig& cfg);
ExperimentResult run_pvariation(const ExperimentConfig& cfg);
ExperimentResult run_localtime(const ExperimentConfig& cfg);
ExperimentResult run_selfintersect(const ExperimentConfig& cfg);
ExperimentResult run_variance_decay(const ExperimentConfig& cfg);

// Deterministic serialization: fixed column order, shortest round-trip float
// formatting, no timing fields.
std::string to_csv(const ExperimentResult& result);
std::string to_json(const ExperimentResult& result);
std::string com_report_to_json(const ComReport& report);
void write_output(const ExperimentResult& result, const ExperimentConfig& cfg);

// Grid samples of the terminal value for a variant (used by the marginal
// experiment and the distribution tests); one full path per replicate.
std::vector<double> terminal_values_on_grid(const ProcessVariant& variant, double t,
                                            std::size_t n_grid, std::size_t n_replicates,
                                            uint64_t seed);

}  // namespace btbm
