#include "stakesim/pos_engine.hpp"

#include <algorithm>
#include <deque>

namespace stakesim {

StakeSampler::StakeSampler(const std::vector<double>& stake) {
    const std::size_t n = stake.size();
    double total = 0.0;
    for (double s : stake) total += s;
    if (!(total > 0.0)) throw EmptyStakeError();

    // Walker alias construction over the normalized stake distribution.
    prob_.resize(n);
    alias_.resize(n);
    std::vector<double> scaled(n);
    std::deque<AgentId> small, large;
    for (std::size_t i = 0; i < n; ++i) {
        scaled[i] = stake[i] / total * static_cast<double>(n);
        (scaled[i] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
        AgentId s = small.front(); small.pop_front();
        AgentId l = large.front(); large.pop_front();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = (scaled[l] + scaled[s]) - 1.0;
        (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    for (AgentId i : large) { prob_[i] = 1.0; alias_[i] = i; }
    for (AgentId i : small) { prob_[i] = 1.0; alias_[i] = i; }
}

AgentId StakeSampler::sample(RngStream& rng) const {
    AgentId column = static_cast<AgentId>(
        rng.uniform_below(static_cast<std::uint64_t>(prob_.size())));
    return rng.uniform() < prob_[column] ? column : alias_[column];
}

AgentId sample_winner(const std::vector<double>& stake, RngStream& rng) {
    return StakeSampler(stake).sample(rng);
}

BlockOutcome run_block(SystemState& state, const StakeSampler& sampler,
                       double reward, double slash_fraction, double p_slash,
                       RngStream& rng) {
    BlockOutcome outcome;
    outcome.winner = sampler.sample(rng);
    outcome.slashed = rng.bernoulli(p_slash);
    if (outcome.slashed) {
        outcome.amount = slash_fraction * state.stake[outcome.winner];
        state.epoch_slashes[outcome.winner] += outcome.amount;
    } else {
        outcome.amount = reward;
        state.epoch_rewards[outcome.winner] += reward;
    }
    state.t += 1;
    return outcome;
}

BlockOutcome run_block(SystemState& state, double reward, double slash_fraction,
                       double p_slash, RngStream& rng) {
    StakeSampler sampler(state.stake);
    return run_block(state, sampler, reward, slash_fraction, p_slash, rng);
}

double apply_epoch(SystemState& state, unsigned tau_stake) {
    if (state.t % tau_stake != 0)
        throw SequencingError("apply_epoch called off an epoch boundary");

    for (const auto& [id, reward] : state.epoch_rewards) state.stake[id] += reward;
    double burned = 0.0;
    for (const auto& [id, slash] : state.epoch_slashes) {
        double applied = std::min(slash, state.stake[id]);
        state.stake[id] -= applied; // a slash may not drive a balance negative
        burned += applied;
    }
    state.epoch_rewards.clear();
    state.epoch_slashes.clear();
    return burned;
}

} // namespace stakesim
