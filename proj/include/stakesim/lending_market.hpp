#pragma once

#include "stakesim/rng.hpp"
#include "stakesim/types.hpp"

namespace stakesim {

// U_t = kS / (l + kS); the two-state model's implicit constant demand.
double utilization_two_state(double k, double supply, double lent);

// U_t = xi / (l + xi); the three-state model's explicit demand.
double utilization_three_state(double demand, double lent);

struct Rates {
    double borrow = 0.0; // beta_t
    double lend = 0.0;   // gamma_t
};

// Compound-style curve: beta = U(beta0 + beta1*U), gamma = (1 - spread)*beta.
Rates rates(double utilization, double beta0, double beta1, double spread);

// Advances the borrowing-demand path one block. Walk and GBM proposals are
// folded back across whichever band edge they violate until inside
// [(1 - eta0)*supply, (1 + eta1)*supply].
double step_demand(const DemandModel& model, double prev_demand, double supply,
                   RngStream& rng);

// Demand value at t = 0 (ConstantK level, or the band midpoint for the
// stochastic kinds).
double initial_demand(const DemandModel& model, double supply);

// Per-block simple interest on every lend balance at lend_rate / period.
// Returns the tokens minted.
double accrue_interest(SystemState& state, unsigned rate_period_blocks);

} // namespace stakesim
