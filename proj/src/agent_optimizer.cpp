#include "stakesim/agent_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stakesim {

ReturnEstimate expected_returns(double stake_i, double staked_supply,
                                double lend_rate) {
    if (!(staked_supply > 0.0))
        throw std::domain_error("expected_returns: staked supply must be positive");
    return {std::clamp(stake_i / staked_supply, 0.0, 1.0),
            std::clamp(lend_rate, 0.0, 1.0)};
}

ReturnEstimate expected_returns(const SystemState& state, AgentId agent) {
    return expected_returns(state.stake[agent], state.staked_supply(),
                            state.lend_rate);
}

PortfolioWeights solve_markowitz_2asset(const ReturnEstimate& mu, double alpha_i,
                                        double beta_i, double lambda) {
    if (!std::isfinite(mu.mu_stake) || !std::isfinite(mu.mu_lend) ||
        !std::isfinite(alpha_i) || !std::isfinite(beta_i) || !std::isfinite(lambda))
        throw std::domain_error("solve_markowitz_2asset: non-finite input");

    // Equality-constrained stationary point, then clamp; with two assets the
    // clamped point is the KKT solution.
    double nu = (lambda * (alpha_i * mu.mu_stake + beta_i * mu.mu_lend) - 2.0) /
                (alpha_i + beta_i);
    double w_stake = std::clamp(alpha_i * (lambda * mu.mu_stake - nu) / 2.0, 0.0, 1.0);
    return {w_stake, 1.0 - w_stake};
}

PortfolioWeights unconstrained_weights(const ReturnEstimate& mu, double alpha_i,
                                       double beta_i, double lambda) {
    return {lambda * alpha_i * mu.mu_stake, lambda * beta_i * mu.mu_lend};
}

void rebalance_all(SystemState& state, const RiskProfile& profiles,
                   unsigned tau_stake, RngStream& rng) {
    if (state.t % tau_stake != 0)
        throw SequencingError("rebalance_all called off an epoch boundary");

    const std::size_t n = state.stake.size();

    // The visit order realizes the martingale ordering; every agent sees the
    // same frozen rates and supplies, so the result is order-invariant.
    std::vector<AgentId> order(n);
    std::iota(order.begin(), order.end(), AgentId{0});
    for (std::size_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[rng.uniform_below(i)]);

    const double zeta = state.staked_supply();
    const double gamma = state.lend_rate;
    const std::vector<double> stake_before = state.stake;

    for (AgentId id : order) {
        ReturnEstimate mu = expected_returns(stake_before[id], zeta, gamma);
        PortfolioWeights w = solve_markowitz_2asset(mu, profiles.alpha[id],
                                                    profiles.beta[id],
                                                    profiles.lambda);
        double wealth = state.stake[id] + state.lend[id];
        state.stake[id] = w.w_stake * wealth;
        state.lend[id] = w.w_lend * wealth;
    }
}

} // namespace stakesim
