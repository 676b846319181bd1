#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grasscode/codes.hpp"
#include "grasscode/decoder.hpp"

namespace grasscode {

struct ExperimentSpec {
    std::string experiment = "failure_curve";  // or "row_cost"
    unsigned security_level = 128;             // selects the iteration budget
    std::uint64_t seed = 1;
    unsigned threads = 1;

    // failure_curve: paired codes of the same length
    std::size_t n = 24;
    std::size_t k = 12;
    std::size_t band = 3;              // fan-out of the graph construction
    std::size_t ldpc_col_weight = 3;
    std::size_t ldpc_row_weight = 6;
    std::uint32_t w = 4;               // decoder weight budget (graph code side)
    std::vector<double> sigma_grid = {0.40, 0.50, 0.60};
    std::size_t trials_per_point = 2000;
    std::size_t gallager_sweeps = 50;
    std::uint64_t iterations_override = 0;  // 0: derive T from the security table
    std::size_t l = 2;

    // row_cost
    std::vector<std::size_t> lengths = {20, 60, 100};
    std::size_t rowcost_trials = 200;
    bool include_q4 = true;
    std::uint32_t plant_weight = 2;
    std::uint64_t rowcost_iterations = 200;

    double desk_scale = 1.0;  // echo of the preset scaling factor
};

struct PointRecord {
    std::string series;
    double x = 0;      // sigma or code length
    double value = 0;  // failure rate or mean row operations
    double lo95 = 0;
    double hi95 = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t failures = 0;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<PointRecord> points;
    std::string library_version;
    std::uint64_t rng_trace_seed = 0;
    bool monotonic_ok = true;   // failure curves: non-decreasing up to interval overlap
    std::string comparison;     // verdict at the middle sigma point
    std::vector<std::string> notes;
};

// 95% Wilson score interval for a binomial rate.
std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials);

struct SecurityTables {
    std::map<unsigned, std::uint64_t> decomposition_budget;  // level -> operations
    struct ParameterRow {
        std::size_t n, k, m, q, w;
        unsigned security;
        std::string source;
    };
    std::vector<ParameterRow> parameter_rows;
};

const SecurityTables& security_tables();

// Iteration count implied by a budget: floor(budget / ((n-k) k^2 / 2)), >= 1.
std::uint64_t iterations_for_budget(std::uint64_t budget, std::size_t n, std::size_t k);

ExperimentReport run_failure_experiment(const ExperimentSpec& spec);
ExperimentReport run_rowcost_experiment(const ExperimentSpec& spec);

// Preset loader: paper-128 .. paper-1024, sizes and budget divided by the
// desk-scale factor. The scaling decision is recorded in the report notes.
ExperimentSpec preset_spec(const std::string& name, const std::string& experiment,
                           double desk_scale_factor);

std::string spec_to_json(const ExperimentSpec& spec);
ExperimentSpec spec_from_json(const std::string& text);
std::string report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const std::string& text);
std::string report_to_csv(const ExperimentReport& report);

// format: "csv" or "json"; writes the rendered report to path.
void emit_report(const ExperimentReport& report, const std::string& format,
                 const std::string& path);

} // namespace grasscode
