#include "stakesim/orchestrator.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace stakesim {

double metric_f(const Trajectory& trajectory) {
    if (trajectory.records.empty())
        throw std::domain_error("metric_f: empty trajectory");
    double sum = 0.0;
    for (const BlockRecord& r : trajectory.records) {
        double total = r.staked + r.lent;
        sum += total > 0.0 ? (r.staked - r.lent) / total : 0.0;
    }
    return sum / static_cast<double>(trajectory.records.size());
}

double metric_g(const Trajectory& trajectory) {
    if (trajectory.records.empty())
        throw std::domain_error("metric_g: empty trajectory");
    double sum = 0.0;
    for (const BlockRecord& r : trajectory.records)
        sum += r.borrow_rate - r.lend_rate;
    return sum / static_cast<double>(trajectory.records.size());
}

namespace {

void append_g17(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

} // namespace

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
    out << "t,staked,lent,demand,utilization,borrow_rate,lend_rate,delta_lend\n";
    std::string line;
    for (const BlockRecord& r : trajectory.records) {
        line.clear();
        line += std::to_string(r.t);
        for (double v : {r.staked, r.lent, r.demand, r.utilization, r.borrow_rate,
                         r.lend_rate, r.delta_lend}) {
            line += ',';
            append_g17(line, v);
        }
        line += '\n';
        out << line;
    }
}

void write_trajectory_csv(const Trajectory& trajectory, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_trajectory_csv(trajectory, out);
}

Simulation::Simulation(const SimConfig& config)
    : config_(config),
      demand_rng_(RngStream(config.seed).fork("demand")),
      pos_rng_(RngStream(config.seed).fork("pos")),
      perm_rng_(RngStream(config.seed).fork("rebalance")) {
    config_.validate();
    RngStream master(config.seed);
    RngStream init_rng = master.fork("init");
    RngStream risk_rng = master.fork("risk");
    state_ = init_state(config_, init_rng);
    profiles_ = sample_risk_profiles(config_, risk_rng);
    prev_lent_ = state_.lent_supply();
    sampler_.emplace(state_.stake);
}

double Simulation::current_supply() const {
    return state_.staked_supply() + state_.lent_supply();
}

void Simulation::refresh_market() {
    double lent = state_.lent_supply();
    if (config_.model_kind == ModelKind::TwoState) {
        double supply = current_supply();
        state_.borrow_demand = config_.demand.k * supply;
        state_.utilization = utilization_two_state(config_.demand.k, supply, lent);
    } else {
        state_.utilization = utilization_three_state(state_.borrow_demand, lent);
    }
    Rates r = rates(state_.utilization, config_.beta0, config_.beta1, config_.spread);
    state_.borrow_rate = r.borrow;
    state_.lend_rate = r.lend;
}

void Simulation::step() {
    // (1) epoch boundary: settle the epoch, then let agents rebalance
    if (state_.t > 0 && state_.t % config_.tau_stake == 0) {
        trajectory_.tokens_slashed += apply_epoch(state_, config_.tau_stake);
        rebalance_all(state_, profiles_, config_.tau_stake, perm_rng_);
        sampler_.emplace(state_.stake);
    }

    // (2) demand, (3) rates
    state_.borrow_demand = step_demand(config_.demand, state_.borrow_demand,
                                       current_supply(), demand_rng_);
    refresh_market();

    // (4) interest to lenders
    trajectory_.interest_minted += accrue_interest(state_, config_.rate_period_blocks);

    // (5) produce one block
    double reward = block_reward(config_.policy, state_.t);
    BlockOutcome outcome = run_block(state_, *sampler_, reward,
                                     config_.slash_fraction, config_.p_slash,
                                     pos_rng_);

    double zeta = state_.staked_supply();
    if (zeta <= config_.security_floor_delta * current_supply())
        trajectory_.floor_events.push_back(state_.t);

    record(outcome.slashed ? 0.0 : reward);
}

void Simulation::record(double reward_paid) {
    BlockRecord r;
    r.t = state_.t;
    r.staked = state_.staked_supply();
    r.lent = state_.lent_supply();
    r.demand = state_.borrow_demand;
    r.utilization = state_.utilization;
    r.borrow_rate = state_.borrow_rate;
    r.lend_rate = state_.lend_rate;
    r.delta_lend = r.lent - prev_lent_;
    r.reward = reward_paid;
    prev_lent_ = r.lent;
    trajectory_.records.push_back(r);
    if (record_agents_) trajectory_.agent_stake.push_back(state_.stake);
}

void Simulation::run(const RunOptions& options) {
    record_agents_ = options.record_agent_stake;
    if (trajectory_.records.empty()) record(0.0); // initial record at t = 0
    while (state_.t < config_.horizon) step();
}

Trajectory run_trajectory(const SimConfig& config, const RunOptions& options) {
    Simulation sim(config);
    sim.run(options);
    return sim.trajectory();
}

} // namespace stakesim
