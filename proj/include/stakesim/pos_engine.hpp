#pragma once

#include "stakesim/rng.hpp"
#include "stakesim/types.hpp"

namespace stakesim {

struct BlockOutcome {
    AgentId winner = 0;
    bool slashed = false;
    double amount = 0.0; // reward if not slashed, sigma * stake[winner] if slashed
};

// Alias-table sampler over a frozen stake vector. Build once per epoch
// (balances cannot change mid-epoch), draw in O(1).
class StakeSampler {
public:
    explicit StakeSampler(const std::vector<double>& stake);
    AgentId sample(RngStream& rng) const;

private:
    std::vector<double> prob_;
    std::vector<AgentId> alias_;
};

// One draw proportional to stake; throws EmptyStakeError on an all-zero vector.
AgentId sample_winner(const std::vector<double>& stake, RngStream& rng);

// One block of the epoch loop: sample a winner, flip the slash coin, merge the
// outcome into the epoch reward/slash set. Balances stay untouched; t += 1.
BlockOutcome run_block(SystemState& state, const StakeSampler& sampler,
                       double reward, double slash_fraction, double p_slash,
                       RngStream& rng);
BlockOutcome run_block(SystemState& state, double reward, double slash_fraction,
                       double p_slash, RngStream& rng);

// Epoch boundary: apply accumulated rewards and slashes (stake floored at 0),
// clear both sets. Returns total tokens actually burned by slashes.
double apply_epoch(SystemState& state, unsigned tau_stake);

} // namespace stakesim
