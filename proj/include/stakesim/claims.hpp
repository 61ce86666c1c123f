#pragma once

#include <optional>
#include <string>

#include "stakesim/orchestrator.hpp"

namespace stakesim {

enum class ClaimStatus { Pass, Fail, Inapplicable, Inconclusive };

struct ClaimReport {
    std::string claim;
    ClaimStatus status = ClaimStatus::Inapplicable;
    double measured = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    std::size_t samples = 0;
    std::string note;

    bool passed() const { return status == ClaimStatus::Pass; }
};

std::string to_string(ClaimStatus status);

// ---- Claim 1: single-step return drift bound -------------------------------

// Evaluates, per block and agent, ||mu_i(t+1) - mu_i(t)||_1 against the
// closed-form right-hand side with convexity constant f(delta) =
// (1-delta)^2/delta + 1. The trajectory must carry per-block agent stakes.
// Measured value is the maximum LHS - RHS (<= 0 passes).
ClaimReport check_claim1_bound(const Trajectory& trajectory, double delta,
                               double beta1, double spread);

// ---- Claim 3: conditional moments of the lent supply ------------------------

struct LendingMoments {
    double mean = 0.0;
    double variance = 0.0;
    ClaimReport report;
};

// Monte Carlo over l' = gamma * sum_i beta_i W_i with fresh beta_i ~
// Exp(tau_lend). Checks the mean against gamma*S/tau, the variance against
// gamma^2*||W||_2^2/tau^2 (and against the gamma^1 variant the claim's
// statement prints), and the sqrt(n) sandwich.
LendingMoments conditional_lending_moments(const std::vector<double>& wealth,
                                           double gamma, double tau_lend,
                                           std::size_t samples, RngStream& rng);

// ---- Claim 5: martingale phase boundary -------------------------------------

enum class DriftClass { Submartingale, Supermartingale, Martingale };

// The drift quadratic f(gamma) = gamma^2 S^2 eta / tau^2 - gamma 2 l S / tau
// + (2 l l_prev - l_prev^2); its roots are the martingale boundary r+-.
struct MartingaleQuadratic {
    double a = 0.0, b = 0.0, c = 0.0;
    std::optional<std::pair<double, double>> roots; // (r-, r+) when real

    double drift(double gamma) const { return (a * gamma + b) * gamma + c; }
    DriftClass classify(double gamma) const;
};

MartingaleQuadratic martingale_roots(double l_t, double l_prev, double supply,
                                     double eta, double tau_lend);

// One-step Monte Carlo drift E[Delta_lend^2(t)|F_t] - Delta_lend^2(t-1) under
// the unconstrained update; its sign must agree with the quadratic whenever
// it clears 3 standard errors.
ClaimReport empirical_drift(const std::vector<double>& wealth, double l_t,
                            double l_prev, double gamma, double tau_lend,
                            std::size_t samples, RngStream& rng);

// ---- Claim 4: Doob tail for max Delta_lend^2 --------------------------------

struct DoobEnsembleConfig {
    std::size_t n_agents = 64;
    double tau_lend = 4.0;
    double supply_growth = 0.001; // lambda of S_t = s0 * e^(lambda t)
    double s0 = 1000.0;
    std::uint64_t horizon = 200;
    std::size_t n_trajectories = 1000;
    std::uint64_t seed = 1;
};

ClaimReport doob_tail_check(const DoobEnsembleConfig& config, double threshold);

// ---- Claim 2: stake-change tail under exponential supply --------------------

struct Claim2Config {
    std::size_t n_agents = 64;
    double tau_stake = 0.2;
    double supply_growth = 0.25; // hypothesis requires growth > tau_stake
    double s0 = 1000.0;
    unsigned epochs = 50;
    unsigned tau_stake_blocks = 10;
    double exponent = 1.0;           // beta in the threshold S_t^beta
    std::size_t samples_per_t = 2000; // fresh alpha draws per sampled block
    std::uint64_t seed = 1;
};

ClaimReport check_claim2_tail(const Claim2Config& config);

// ---- Claim 6: product CDF of Exp x Erlang ------------------------------------

struct ProductCdf {
    double exact = 0.0;       // adaptive numerical integration
    double paper_bound = 0.0; // steepest-descent closed form, constant C
};

// Pr[AB <= y], A ~ Exp(tau_stake), B ~ Erlang(n, tau_lend). bound_constant is
// the calibrated C of the closed form.
ProductCdf product_cdf(double y, unsigned n, double tau_stake, double tau_lend,
                       double bound_constant = 1.0);

// Smallest C such that the closed form upper-bounds the exact CDF complement
// on the grid (so 1 - C*shape lower-bounds the CDF everywhere on it).
double calibrate_bound_constant(const std::vector<double>& y_grid, unsigned n,
                                double tau_stake, double tau_lend);

// Monte Carlo estimate of Pr[AB <= y] with its standard error.
std::pair<double, double> product_cdf_monte_carlo(double y, unsigned n,
                                                  double tau_stake,
                                                  double tau_lend,
                                                  std::size_t samples,
                                                  RngStream& rng);

// n = 1, unit rates: Pr[AB <= y] = 1 - 2 sqrt(y) K_1(2 sqrt(y)).
double product_cdf_bessel(double y);

// ---- Desk-scale harness ------------------------------------------------------

// Runs the numbered claim check on a self-contained desk-scale instance.
// `samples` scales the Monte Carlo effort; `seed` pins the randomness.
ClaimReport run_claim(int claim, std::size_t samples, std::uint64_t seed);

// claims: subset of {1..6}; empty means all.
std::vector<ClaimReport> run_claim_suite(std::vector<int> claims,
                                         std::size_t samples,
                                         std::uint64_t seed);

} // namespace stakesim
