#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stakesim {

using AgentId = std::size_t;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SequencingError : std::logic_error {
    using std::logic_error::logic_error;
};

struct EmptyStakeError : std::runtime_error {
    EmptyStakeError() : std::runtime_error("stake vector sums to zero; no block producer exists") {}
};

enum class PolicyKind { Constant, GeometricHalfLife, Polynomial, Exponential };

// Block-reward schedule R_t plus its implied cumulative supply.
struct MonetaryPolicy {
    PolicyKind kind = PolicyKind::Constant;
    double r0 = 1000.0;      // initial block reward, tokens/block
    double half_life = 100.0; // blocks (GeometricHalfLife)
    unsigned degree = 1;      // polynomial degree k
    double growth = 0.01;     // exponential growth rate
    double s0 = 0.0;          // supply at t = 0
};

enum class DemandKind { ConstantK, BoundedRandomWalk, ReflectedGBM };

// Borrowing-demand path generator.
struct DemandModel {
    DemandKind kind = DemandKind::ConstantK;
    double k = 0.2;     // demand-to-supply ratio (ConstantK)
    double drift = 0.0; // mean increment, tokens/block (walk) or log drift (GBM)
    double vol = 0.0;   // increment scale
    double eta0 = 0.3;  // lower band: demand >= (1 - eta0) * supply
    double eta1 = 0.1;  // upper band: demand <= (1 + eta1) * supply
};

enum class ModelKind { TwoState, ThreeState };

struct SimConfig {
    std::size_t n_agents = 512;
    double beta0 = 0.05;
    double beta1 = 0.45;
    double spread = 0.005;
    unsigned tau_stake = 50;
    unsigned tau_lend = 100;
    double p_slash = 0.001;
    double slash_fraction = 0.01;
    double lambda_stake = 1.0;
    double lambda_lend = 1.0;
    double initial_lend_rate = 0.10;
    unsigned rate_period_blocks = 1000;
    unsigned horizon = 20000;
    std::uint64_t seed = 0;
    double security_floor_delta = 0.0; // recorded-event threshold, zeta <= delta * S
    MonetaryPolicy policy;
    DemandModel demand;
    ModelKind model_kind = ModelKind::ThreeState;

    // Throws ConfigError naming the first invalid field.
    void validate() const;
};

// Full simulation state at block height t.
struct SystemState {
    std::uint64_t t = 0;
    std::vector<double> stake;           // pi_stake, one entry per agent
    std::vector<double> lend;            // pi_lend
    double borrow_demand = 0.0;          // xi_t (k * S_t in the two-state model)
    double utilization = 0.0;            // U_t
    double borrow_rate = 0.0;            // beta_t
    double lend_rate = 0.0;              // gamma_t
    std::map<AgentId, double> epoch_rewards; // the set R of the epoch loop
    std::map<AgentId, double> epoch_slashes; // the set S

    double staked_supply() const {
        double s = 0.0;
        for (double v : stake) s += v;
        return s;
    }
    double lent_supply() const {
        double s = 0.0;
        for (double v : lend) s += v;
        return s;
    }
};

// Per-agent quenched risk parameters plus the global risk appetite.
struct RiskProfile {
    std::vector<double> alpha; // inverse variance, staking leg
    std::vector<double> beta;  // inverse variance, lending leg
    double lambda = 1.0;       // global risk appetite, one chi^2(n) draw
};

} // namespace stakesim
