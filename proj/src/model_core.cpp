#include "stakesim/model_core.hpp"

#include "stakesim/lending_market.hpp"

namespace stakesim {

namespace {

void check(bool ok, const char* field) {
    if (!ok) throw ConfigError(std::string("invalid config field: ") + field);
}

} // namespace

void SimConfig::validate() const {
    check(n_agents >= 1, "n_agents");
    check(beta0 > 0.0 && beta0 < 1.0, "beta0");
    check(beta1 > 0.0 && beta1 < 1.0, "beta1");
    check(spread > 0.0 && spread < 1.0, "spread");
    check(tau_stake >= 1, "tau_stake");
    check(tau_lend >= 1, "tau_lend");
    check(p_slash >= 0.0 && p_slash <= 1.0, "p_slash");
    check(slash_fraction > 0.0 && slash_fraction <= 1.0, "slash_fraction");
    check(lambda_stake > 0.0, "lambda_stake");
    check(lambda_lend > 0.0, "lambda_lend");
    check(initial_lend_rate >= 0.0 && initial_lend_rate <= 1.0, "initial_lend_rate");
    check(rate_period_blocks >= 1, "rate_period_blocks");
    check(horizon % tau_stake == 0, "horizon");
    check(security_floor_delta >= 0.0 && security_floor_delta < 1.0,
          "security_floor_delta");
    check(policy.r0 > 0.0, "policy.r0");
    if (policy.kind == PolicyKind::GeometricHalfLife)
        check(policy.half_life > 0.0, "policy.half_life");
    if (policy.kind == PolicyKind::Polynomial)
        check(policy.degree >= 1, "policy.degree");
    if (policy.kind == PolicyKind::Exponential)
        check(policy.growth > 0.0, "policy.growth");
    if (demand.kind == DemandKind::ConstantK) check(demand.k > 0.0, "demand.k");
    check(demand.vol >= 0.0, "demand.vol");
    check(demand.eta0 >= 0.0 && demand.eta0 <= 1.0, "demand.eta0");
    check(demand.eta1 >= 0.0, "demand.eta1");
    check(1.0 - demand.eta0 < 1.0 + demand.eta1, "demand.eta0/eta1");
}

SystemState init_state(const SimConfig& config, RngStream& rng) {
    config.validate();

    SystemState state;
    state.stake.resize(config.n_agents);
    state.lend.resize(config.n_agents);

    RngStream stake_rng = rng.fork("init-stake");
    RngStream lend_rng = rng.fork("init-lend");
    for (std::size_t i = 0; i < config.n_agents; ++i)
        state.stake[i] = stake_rng.exponential(config.lambda_stake);
    for (std::size_t i = 0; i < config.n_agents; ++i)
        state.lend[i] = lend_rng.exponential(config.lambda_lend);

    double supply = state.staked_supply() + state.lent_supply();
    double lent = state.lent_supply();
    state.borrow_demand = initial_demand(config.demand, supply);
    if (config.model_kind == ModelKind::TwoState)
        state.utilization = utilization_two_state(config.demand.k, supply, lent);
    else
        state.utilization = utilization_three_state(state.borrow_demand, lent);
    state.borrow_rate =
        rates(state.utilization, config.beta0, config.beta1, config.spread).borrow;
    state.lend_rate = config.initial_lend_rate;
    return state;
}

RiskProfile sample_risk_profiles(const SimConfig& config, RngStream& rng) {
    config.validate();

    RiskProfile profile;
    profile.alpha.resize(config.n_agents);
    profile.beta.resize(config.n_agents);

    RngStream alpha_rng = rng.fork("risk-alpha");
    RngStream beta_rng = rng.fork("risk-beta");
    RngStream lambda_rng = rng.fork("risk-lambda");
    for (std::size_t i = 0; i < config.n_agents; ++i)
        profile.alpha[i] = alpha_rng.exponential(static_cast<double>(config.tau_stake));
    for (std::size_t i = 0; i < config.n_agents; ++i)
        profile.beta[i] = beta_rng.exponential(static_cast<double>(config.tau_lend));
    profile.lambda = lambda_rng.chi_squared(static_cast<unsigned>(config.n_agents));
    return profile;
}

} // namespace stakesim
