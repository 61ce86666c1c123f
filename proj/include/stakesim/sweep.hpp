#pragma once

#include <string>

#include "stakesim/orchestrator.hpp"

namespace stakesim {

struct SweepSpec {
    SimConfig base;
    std::vector<double> beta0_grid{0.05, 0.15, 0.25, 0.35};
    std::vector<double> beta1_grid{0.05, 0.15, 0.25, 0.35};
    std::vector<double> inflation_grid{1.0};
    std::vector<double> borrow_threshold_grid{0.7}; // (1 - eta0) values
    std::vector<std::uint64_t> seeds;
    std::string output_dir = ".";

    void validate() const;
};

struct HeatmapCell {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double f_mean = 0.0;
    double f_std = 0.0;
    double g_mean = 0.0;
    double g_std = 0.0;
    std::size_t n_seeds = 0;
    std::size_t n_errors = 0;
};

struct HeatmapTable {
    double inflation = 1.0;
    double borrow_threshold = 0.7;
    std::vector<HeatmapCell> cells; // sorted by (beta0, beta1)
};

// One trajectory per (cell, seed); per-cell means and standard deviations of
// metric_f and metric_g. A failed trajectory is counted in n_errors and the
// sweep continues. Cells run on `parallelism` threads; output is independent
// of scheduling.
std::vector<HeatmapTable> run_sweep(const SweepSpec& spec,
                                    unsigned parallelism = 1);

// dfs_bt_<bt>_ir_<ir>.csv with rows beta0,beta1,f_mean,f_std,g_mean,g_std,
// n_seeds,n_errors.
std::string heatmap_filename(const HeatmapTable& table);
void emit_heatmap_csv(const HeatmapTable& table, const std::string& path);

// Flat key/value config text. Unknown keys are errors.
SimConfig parse_sim_config(const std::string& text);
SweepSpec parse_sweep_spec(const std::string& text);
SimConfig load_sim_config(const std::string& path);
SweepSpec load_sweep_spec(const std::string& path);

} // namespace stakesim
