#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stakesim/claims.hpp"
#include "stakesim/sweep.hpp"

namespace py = pybind11;
using namespace stakesim;

PYBIND11_MODULE(_stakesim, m) {
    m.doc() = "Staking vs. on-chain lending simulator";

    py::enum_<PolicyKind>(m, "PolicyKind")
        .value("Constant", PolicyKind::Constant)
        .value("GeometricHalfLife", PolicyKind::GeometricHalfLife)
        .value("Polynomial", PolicyKind::Polynomial)
        .value("Exponential", PolicyKind::Exponential);

    py::enum_<DemandKind>(m, "DemandKind")
        .value("ConstantK", DemandKind::ConstantK)
        .value("BoundedRandomWalk", DemandKind::BoundedRandomWalk)
        .value("ReflectedGBM", DemandKind::ReflectedGBM);

    py::enum_<ModelKind>(m, "ModelKind")
        .value("TwoState", ModelKind::TwoState)
        .value("ThreeState", ModelKind::ThreeState);

    py::class_<MonetaryPolicy>(m, "MonetaryPolicy")
        .def(py::init<>())
        .def_readwrite("kind", &MonetaryPolicy::kind)
        .def_readwrite("r0", &MonetaryPolicy::r0)
        .def_readwrite("half_life", &MonetaryPolicy::half_life)
        .def_readwrite("degree", &MonetaryPolicy::degree)
        .def_readwrite("growth", &MonetaryPolicy::growth);

    py::class_<DemandModel>(m, "DemandModel")
        .def(py::init<>())
        .def_readwrite("kind", &DemandModel::kind)
        .def_readwrite("k", &DemandModel::k)
        .def_readwrite("drift", &DemandModel::drift)
        .def_readwrite("vol", &DemandModel::vol)
        .def_readwrite("eta0", &DemandModel::eta0)
        .def_readwrite("eta1", &DemandModel::eta1);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("n_agents", &SimConfig::n_agents)
        .def_readwrite("beta0", &SimConfig::beta0)
        .def_readwrite("beta1", &SimConfig::beta1)
        .def_readwrite("spread", &SimConfig::spread)
        .def_readwrite("tau_stake", &SimConfig::tau_stake)
        .def_readwrite("tau_lend", &SimConfig::tau_lend)
        .def_readwrite("p_slash", &SimConfig::p_slash)
        .def_readwrite("slash_fraction", &SimConfig::slash_fraction)
        .def_readwrite("lambda_stake", &SimConfig::lambda_stake)
        .def_readwrite("lambda_lend", &SimConfig::lambda_lend)
        .def_readwrite("initial_lend_rate", &SimConfig::initial_lend_rate)
        .def_readwrite("rate_period_blocks", &SimConfig::rate_period_blocks)
        .def_readwrite("horizon", &SimConfig::horizon)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("security_floor_delta", &SimConfig::security_floor_delta)
        .def_readwrite("policy", &SimConfig::policy)
        .def_readwrite("demand", &SimConfig::demand)
        .def_readwrite("model_kind", &SimConfig::model_kind)
        .def("validate", &SimConfig::validate);

    py::class_<BlockRecord>(m, "BlockRecord")
        .def_readonly("t", &BlockRecord::t)
        .def_readonly("staked", &BlockRecord::staked)
        .def_readonly("lent", &BlockRecord::lent)
        .def_readonly("demand", &BlockRecord::demand)
        .def_readonly("utilization", &BlockRecord::utilization)
        .def_readonly("borrow_rate", &BlockRecord::borrow_rate)
        .def_readonly("lend_rate", &BlockRecord::lend_rate)
        .def_readonly("delta_lend", &BlockRecord::delta_lend)
        .def_readonly("reward", &BlockRecord::reward);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("records", &Trajectory::records)
        .def_readonly("interest_minted", &Trajectory::interest_minted)
        .def_readonly("tokens_slashed", &Trajectory::tokens_slashed)
        .def_readonly("floor_events", &Trajectory::floor_events)
        .def_readonly("agent_stake", &Trajectory::agent_stake);

    m.def("block_reward", &block_reward, py::arg("policy"), py::arg("t"));
    m.def("cumulative_supply", &cumulative_supply, py::arg("policy"), py::arg("t"));
    m.def(
        "policy_from_inflation_ratio",
        [](double ratio, double r0, unsigned tau) {
            return policy_from_inflation_ratio(ratio, r0, tau);
        },
        py::arg("ratio"), py::arg("r0"), py::arg("tau_stake"));

    m.def("utilization_two_state", &utilization_two_state, py::arg("k"),
          py::arg("lent"), py::arg("supply"));
    m.def("utilization_three_state", &utilization_three_state, py::arg("demand"),
          py::arg("lent"));
    m.def(
        "rates",
        [](double utilization, double beta0, double beta1, double spread) {
            Rates r = rates(utilization, beta0, beta1, spread);
            return std::make_pair(r.borrow, r.lend);
        },
        py::arg("utilization"), py::arg("beta0"), py::arg("beta1"),
        py::arg("spread"));

    m.def(
        "solve_markowitz",
        [](double mu_stake, double mu_lend, double alpha, double beta,
           double lambda) {
            PortfolioWeights w =
                solve_markowitz_2asset(mu_stake, mu_lend, alpha, beta, lambda);
            return std::make_pair(w.stake, w.lend);
        },
        py::arg("mu_stake"), py::arg("mu_lend"), py::arg("alpha"),
        py::arg("beta"), py::arg("lambda_"));

    m.def(
        "run_trajectory",
        [](const SimConfig& config, bool record_agent_stake) {
            RunOptions options;
            options.record_agent_stake = record_agent_stake;
            return run_trajectory(config, options);
        },
        py::arg("config"), py::arg("record_agent_stake") = false);
    m.def("metric_f", &metric_f, py::arg("trajectory"));
    m.def("metric_g", &metric_g, py::arg("trajectory"));
    m.def("write_trajectory_csv", &write_trajectory_csv, py::arg("trajectory"),
          py::arg("path"));

    m.def("parse_sim_config", &parse_sim_config, py::arg("text"));
    m.def("load_sim_config", &load_sim_config, py::arg("path"));

    m.def(
        "run_claim",
        [](int claim, std::size_t samples, std::uint64_t seed) {
            ClaimReport r = run_claim(claim, samples, seed);
            py::dict d;
            d["claim"] = r.claim;
            d["status"] = to_string(r.status);
            d["measured"] = r.measured;
            d["target"] = r.target;
            d["tolerance"] = r.tolerance;
            d["samples"] = r.samples;
            d["note"] = r.note;
            return d;
        },
        py::arg("claim"), py::arg("samples") = 100000, py::arg("seed") = 1);

    m.def("product_cdf_bessel", &product_cdf_bessel, py::arg("y"));
}
