#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>

#include <CLI11.hpp>

#include "stakesim/claims.hpp"
#include "stakesim/sweep.hpp"

namespace {

int cmd_simulate(const std::string& config_path, std::optional<std::uint64_t> seed,
                 const std::string& out_path) {
    stakesim::SimConfig config = stakesim::load_sim_config(config_path);
    if (seed) config.seed = *seed;
    stakesim::Trajectory trajectory = stakesim::run_trajectory(config);
    stakesim::write_trajectory_csv(trajectory, out_path);
    std::printf("wrote %zu blocks to %s (metric_f %.6g, metric_g %.6g)\n",
                trajectory.records.size(), out_path.c_str(),
                stakesim::metric_f(trajectory), stakesim::metric_g(trajectory));
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              std::optional<unsigned> n_seeds, unsigned parallelism) {
    stakesim::SweepSpec spec = stakesim::load_sweep_spec(config_path);
    spec.output_dir = out_dir;
    if (n_seeds) {
        spec.seeds.resize(*n_seeds);
        std::iota(spec.seeds.begin(), spec.seeds.end(), 0);
    }
    spec.validate();
    std::filesystem::create_directories(out_dir);

    auto tables = stakesim::run_sweep(spec, parallelism);
    for (const auto& table : tables) {
        std::string path =
            (std::filesystem::path(out_dir) / stakesim::heatmap_filename(table))
                .string();
        stakesim::emit_heatmap_csv(table, path);
        std::size_t errors = 0;
        for (const auto& cell : table.cells) errors += cell.n_errors;
        std::printf("wrote %s (%zu cells, %zu failed runs)\n", path.c_str(),
                    table.cells.size(), errors);
    }
    return 0;
}

int cmd_verify_claims(const std::string& claim_arg, std::size_t samples,
                      std::uint64_t seed, const std::string& report_path) {
    std::vector<int> claims;
    if (claim_arg != "all") claims.push_back(std::stoi(claim_arg));
    auto reports = stakesim::run_claim_suite(claims, samples, seed);

    bool any_fail = false;
    for (const auto& r : reports) {
        std::printf("%s: %-12s measured=%.6g target=%.6g tolerance=%.6g "
                    "samples=%zu  %s\n",
                    r.claim.c_str(), stakesim::to_string(r.status).c_str(),
                    r.measured, r.target, r.tolerance, r.samples, r.note.c_str());
        if (r.status == stakesim::ClaimStatus::Fail) any_fail = true;
    }

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::runtime_error("cannot open report file " + report_path);
        out << "claim,status,measured,target,tolerance,samples,note\n";
        for (const auto& r : reports) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g", r.measured,
                          r.target, r.tolerance);
            std::string note = r.note;
            for (char& c : note)
                if (c == ',' || c == '\n') c = ';';
            out << r.claim << ',' << stakesim::to_string(r.status) << ',' << buf
                << ',' << r.samples << ',' << note << '\n';
        }
    }
    return any_fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Staking vs. on-chain lending simulator"};
    app.require_subcommand(1);

    std::string config_path, out_path, out_dir = "sweep-out";
    std::optional<std::uint64_t> seed_override;
    std::optional<unsigned> n_seeds;
    unsigned parallelism = 1;

    auto* simulate = app.add_subcommand("simulate", "Run a single trajectory");
    simulate->add_option("--config", config_path, "Flat key=value config file")
        ->required();
    simulate->add_option("--seed", seed_override, "Override the config's seed");
    simulate->add_option("--out", out_path, "Trajectory CSV output path")
        ->required();

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
    sweep->add_option("--config", config_path, "Flat key=value sweep spec file")
        ->required();
    sweep->add_option("--out-dir", out_dir, "Directory for heatmap CSVs")
        ->required();
    sweep->add_option("--seeds", n_seeds, "Use seeds 0..N-1 instead of the spec's");
    sweep->add_option("--parallelism", parallelism, "Worker thread count")
        ->check(CLI::PositiveNumber);

    std::string claim_arg = "all";
    std::size_t samples = 100000;
    std::uint64_t claim_seed = 1;
    std::string report_path;
    auto* verify = app.add_subcommand("verify-claims", "Run the claim checks");
    verify->add_option("--claim", claim_arg, "Claim number 1-6, or 'all'")
        ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "all"}));
    verify->add_option("--samples", samples, "Monte Carlo sample budget");
    verify->add_option("--seed", claim_seed, "Random seed");
    verify->add_option("--report", report_path, "Machine-readable CSV report path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed())
            return cmd_simulate(config_path, seed_override, out_path);
        if (sweep->parsed())
            return cmd_sweep(config_path, out_dir, n_seeds, parallelism);
        return cmd_verify_claims(claim_arg, samples, claim_seed, report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
