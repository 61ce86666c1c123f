#pragma once

#include "stakesim/types.hpp"

namespace stakesim {

struct UnsupportedAnalysisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// R_t for the policy family; strictly positive at every height.
double block_reward(const MonetaryPolicy& policy, std::uint64_t t);

// s0 + sum_{u=0}^{t} R_u, accumulated term by term.
double cumulative_supply(const MonetaryPolicy& policy, std::uint64_t t);

struct RebalanceTime {
    double time = 0.0;
    bool feasible = false;
};

// Closed-form worst-rebalance time t* for the policy family.
// Constant is analyzed as the degree-1 polynomial. Exponential supply has no
// closed-form t* (the analysis yields a condition on delta instead), so it
// throws UnsupportedAnalysisError.
RebalanceTime worst_rebalance_time(const MonetaryPolicy& policy, std::size_t n,
                                   double delta, double gamma, double tau_stake,
                                   double tau_lend);

// Maps a per-epoch inflation ratio (deflationary < 1, constant = 1,
// inflationary > 1) to a reward schedule that matches r0 * ratio^epoch at
// every epoch boundary.
MonetaryPolicy policy_from_inflation_ratio(double ratio, double r0,
                                           unsigned tau_stake);

} // namespace stakesim
