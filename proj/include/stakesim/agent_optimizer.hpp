#pragma once

#include "stakesim/rng.hpp"
#include "stakesim/types.hpp"

namespace stakesim {

struct ReturnEstimate {
    double mu_stake = 0.0; // stake_i / zeta_t: probability of winning the block
    double mu_lend = 0.0;  // gamma_t
};

struct PortfolioWeights {
    double w_stake = 0.0;
    double w_lend = 0.0;
};

// (stake[i] / zeta_t, lend_rate), both clamped to [0, 1].
ReturnEstimate expected_returns(const SystemState& state, AgentId agent);
ReturnEstimate expected_returns(double stake_i, double staked_supply,
                                double lend_rate);

// Minimizer of w' diag(1/alpha, 1/beta) w - lambda * mu' w subject to
// w_stake + w_lend = 1, w >= 0. Two assets make the KKT analysis exhaustive:
// solve the equality-constrained problem, clamp to [0, 1].
PortfolioWeights solve_markowitz_2asset(const ReturnEstimate& mu, double alpha_i,
                                        double beta_i, double lambda);

// First-order stationary point of the unconstrained objective:
// w = lambda * diag(alpha, beta) * mu. Claims analysis only.
PortfolioWeights unconstrained_weights(const ReturnEstimate& mu, double alpha_i,
                                       double beta_i, double lambda);

// Epoch rebalance: each agent splits W_i = stake + lend by its constrained
// weights. All agents see the same pre-pass rates and supplies, so the visit
// order (a uniformly random permutation) cannot change the outcome.
void rebalance_all(SystemState& state, const RiskProfile& profiles,
                   unsigned tau_stake, RngStream& rng);

} // namespace stakesim
