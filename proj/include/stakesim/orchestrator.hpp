#pragma once

#include <iosfwd>
#include <optional>

#include "stakesim/agent_optimizer.hpp"
#include "stakesim/lending_market.hpp"
#include "stakesim/model_core.hpp"
#include "stakesim/monetary_policy.hpp"
#include "stakesim/pos_engine.hpp"

namespace stakesim {

struct BlockRecord {
    std::uint64_t t = 0;
    double staked = 0.0;      // zeta_t
    double lent = 0.0;        // l_t
    double demand = 0.0;      // xi_t
    double utilization = 0.0; // U_t
    double borrow_rate = 0.0; // beta_t
    double lend_rate = 0.0;   // gamma_t
    double delta_lend = 0.0;  // l_t - l_{t-1}
    double reward = 0.0;      // R_t paid (0 when the producer was slashed)
};

struct Trajectory {
    std::vector<BlockRecord> records;
    double interest_minted = 0.0;
    double tokens_slashed = 0.0;
    std::vector<std::uint64_t> floor_events; // blocks where zeta <= delta * S
    // Per-block per-agent stake snapshots, recorded only on request
    // (claims analysis needs them; sweeps must not pay for them).
    std::vector<std::vector<double>> agent_stake;
};

// Time-average of (zeta - l) / (zeta + l); positive means staking dominates.
double metric_f(const Trajectory& trajectory);

// Time-average of (beta_t - gamma_t); the realized borrow/lend spread.
double metric_g(const Trajectory& trajectory);

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);
void write_trajectory_csv(const Trajectory& trajectory, const std::string& path);

struct RunOptions {
    bool record_agent_stake = false;
};

// Owns one trajectory's state and substreams; epochs share a cached stake
// sampler because balances are frozen between boundaries.
class Simulation {
public:
    explicit Simulation(const SimConfig& config);

    // One block: epoch boundary work first, then demand, rates, interest,
    // block production.
    void step();

    const SystemState& state() const { return state_; }
    SystemState& mutable_state() { return state_; }
    const RiskProfile& profiles() const { return profiles_; }
    const Trajectory& trajectory() const { return trajectory_; }

    void run(const RunOptions& options = {});

private:
    void record(double reward_paid);
    void refresh_market();
    double current_supply() const;

    SimConfig config_;
    SystemState state_;
    RiskProfile profiles_;
    Trajectory trajectory_;
    RngStream demand_rng_;
    RngStream pos_rng_;
    RngStream perm_rng_;
    std::optional<StakeSampler> sampler_;
    double prev_lent_ = 0.0;
    bool record_agents_ = false;
};

Trajectory run_trajectory(const SimConfig& config, const RunOptions& options = {});

} // namespace stakesim
