#include "stakesim/monetary_policy.hpp"

#include <cmath>

namespace stakesim {

double block_reward(const MonetaryPolicy& policy, std::uint64_t t) {
    double td = static_cast<double>(t);
    switch (policy.kind) {
        case PolicyKind::Constant:
            return policy.r0;
        case PolicyKind::GeometricHalfLife:
            return policy.r0 * std::exp2(-td / policy.half_life);
        case PolicyKind::Polynomial:
            // (t+1)^(k-1) keeps R_0 strictly positive.
            return policy.r0 * std::pow(td + 1.0, static_cast<double>(policy.degree) - 1.0);
        case PolicyKind::Exponential:
            return policy.r0 * std::exp(policy.growth * td);
    }
    return policy.r0;
}

double cumulative_supply(const MonetaryPolicy& policy, std::uint64_t t) {
    // Exact partial sums; closed forms would change the rounding.
    double s = policy.s0;
    for (std::uint64_t u = 0; u <= t; ++u) s += block_reward(policy, u);
    return s;
}

RebalanceTime worst_rebalance_time(const MonetaryPolicy& policy, std::size_t n,
                                   double delta, double gamma, double tau_stake,
                                   double tau_lend) {
    if (n == 0 || delta <= 0.0 || delta >= 1.0 || gamma <= 0.0 ||
        tau_stake <= 0.0 || tau_lend <= 0.0)
        throw ConfigError("worst_rebalance_time: arguments out of range");

    double ratio = static_cast<double>(n) * delta / (gamma * tau_stake * tau_lend);

    switch (policy.kind) {
        case PolicyKind::Constant:
            return {ratio, true}; // degree-1 polynomial
        case PolicyKind::Polynomial:
            return {std::pow(ratio, 1.0 / static_cast<double>(policy.degree)), true};
        case PolicyKind::GeometricHalfLife: {
            // t* = -log(C - sqrt(n delta / (gamma tau_s tau_l))); the section
            // leaves C to the caller, absorbed here as C = 1. Feasible only
            // when the log argument lands in (0, 1).
            double arg = 1.0 - std::sqrt(ratio);
            if (arg <= 0.0 || arg >= 1.0) return {0.0, false};
            return {-std::log(arg), true};
        }
        case PolicyKind::Exponential:
            throw UnsupportedAnalysisError(
                "exponential supply has no closed-form worst-rebalance time");
    }
    throw UnsupportedAnalysisError("unknown policy kind");
}

MonetaryPolicy policy_from_inflation_ratio(double ratio, double r0,
                                           unsigned tau_stake) {
    if (ratio <= 0.0) throw ConfigError("inflation ratio must be positive");
    MonetaryPolicy policy;
    policy.r0 = r0;
    if (ratio == 1.0) {
        policy.kind = PolicyKind::Constant;
    } else if (ratio < 1.0) {
        // 2^(-t/h) == ratio^(t/tau_stake) at every epoch boundary.
        policy.kind = PolicyKind::GeometricHalfLife;
        policy.half_life = static_cast<double>(tau_stake) * std::log(2.0) /
                           -std::log(ratio);
    } else {
        policy.kind = PolicyKind::Exponential;
        policy.growth = std::log(ratio) / static_cast<double>(tau_stake);
    }
    return policy;
}

} // namespace stakesim
