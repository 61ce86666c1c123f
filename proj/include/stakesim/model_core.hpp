#pragma once

#include "stakesim/rng.hpp"
#include "stakesim/types.hpp"

namespace stakesim {

// Draws initial exponential balances and seeds the lending-market scalars.
SystemState init_state(const SimConfig& config, RngStream& rng);

// Quenched disorder: alpha_i ~ Exp(tau_stake), beta_i ~ Exp(tau_lend),
// lambda one chi^2(n) draw shared by all agents.
RiskProfile sample_risk_profiles(const SimConfig& config, RngStream& rng);

} // namespace stakesim
