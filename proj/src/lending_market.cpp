#include "stakesim/lending_market.hpp"

#include <algorithm>
#include <cmath>

namespace stakesim {

double utilization_two_state(double k, double supply, double lent) {
    if (!(supply > 0.0)) throw std::domain_error("utilization_two_state: supply must be positive");
    if (k <= 0.0) throw std::domain_error("utilization_two_state: k must be positive");
    if (lent < 0.0) throw std::domain_error("utilization_two_state: lent must be non-negative");
    double demand = k * supply;
    return demand / (lent + demand);
}

double utilization_three_state(double demand, double lent) {
    if (demand < 0.0 || lent < 0.0)
        throw std::domain_error("utilization_three_state: negative input");
    if (demand + lent <= 0.0)
        throw std::domain_error("utilization_three_state: demand and lent both zero");
    return demand / (lent + demand);
}

Rates rates(double utilization, double beta0, double beta1, double spread) {
    double borrow = utilization * (beta0 + beta1 * utilization);
    borrow = std::clamp(borrow, 0.0, 1.0);
    return {borrow, (1.0 - spread) * borrow};
}

namespace {

// Fold an excursion back across whichever band edge it violates; repeat until
// inside. Degenerate bands collapse to the midpoint.
double reflect_into_band(double value, double lo, double hi) {
    if (lo > hi) throw ConfigError("demand band is empty (lower > upper)");
    if (lo == hi) return lo;
    double width = hi - lo;
    // Reduce huge excursions in one shot: reflection is periodic with 2*width.
    double x = std::fmod(value - lo, 2.0 * width);
    if (x < 0.0) x += 2.0 * width;
    return x <= width ? lo + x : hi - (x - width);
}

} // namespace

double step_demand(const DemandModel& model, double prev_demand, double supply,
                   RngStream& rng) {
    if (!(supply > 0.0)) throw std::domain_error("step_demand: supply must be positive");
    if (prev_demand < 0.0) throw std::domain_error("step_demand: negative demand");

    double lo = (1.0 - model.eta0) * supply;
    double hi = (1.0 + model.eta1) * supply;

    switch (model.kind) {
        case DemandKind::ConstantK:
            return model.k * supply;
        case DemandKind::BoundedRandomWalk: {
            double sign = rng.bernoulli(0.5) ? 1.0 : -1.0;
            double proposal = prev_demand + model.drift + model.vol * sign;
            return reflect_into_band(proposal, lo, hi);
        }
        case DemandKind::ReflectedGBM: {
            double z = rng.normal();
            double proposal = prev_demand *
                std::exp(model.drift - 0.5 * model.vol * model.vol + model.vol * z);
            return reflect_into_band(proposal, lo, hi);
        }
    }
    throw ConfigError("unknown demand kind");
}

double initial_demand(const DemandModel& model, double supply) {
    if (model.kind == DemandKind::ConstantK) return model.k * supply;
    return 0.5 * ((1.0 - model.eta0) + (1.0 + model.eta1)) * supply;
}

double accrue_interest(SystemState& state, unsigned rate_period_blocks) {
    double factor = 1.0 + state.lend_rate / static_cast<double>(rate_period_blocks);
    double minted = 0.0;
    for (double& balance : state.lend) {
        double grown = balance * factor;
        minted += grown - balance;
        balance = grown;
    }
    return minted;
}

} // namespace stakesim
