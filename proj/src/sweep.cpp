#include "stakesim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace stakesim {

void SweepSpec::validate() const {
    base.validate();
    if (beta0_grid.empty() || beta1_grid.empty() || inflation_grid.empty() ||
        borrow_threshold_grid.empty() || seeds.empty())
        throw ConfigError("sweep grids and seed list must be non-empty");
    for (double b : beta0_grid)
        if (b <= 0.0 || b >= 1.0) throw ConfigError("beta0_grid value out of (0,1)");
    for (double b : beta1_grid)
        if (b <= 0.0 || b >= 1.0) throw ConfigError("beta1_grid value out of (0,1)");
    auto sorted = [](const std::vector<double>& v) {
        return std::is_sorted(v.begin(), v.end());
    };
    if (!sorted(beta0_grid) || !sorted(beta1_grid))
        throw ConfigError("beta grids must be ascending");
    std::vector<std::uint64_t> s = seeds;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw ConfigError("seeds must be distinct");
}

namespace {

struct CellStats {
    double f_sum = 0.0, f_sq = 0.0, g_sum = 0.0, g_sq = 0.0;
    std::size_t ok = 0, errors = 0;
};

} // namespace

std::vector<HeatmapTable> run_sweep(const SweepSpec& spec, unsigned parallelism) {
    spec.validate();
    if (parallelism == 0) parallelism = 1;

    struct Job {
        std::size_t table;
        std::size_t cell;
        SimConfig config;
    };

    std::vector<HeatmapTable> tables;
    std::vector<Job> jobs;
    std::size_t cell_index = 0;
    for (double ir : spec.inflation_grid) {
        for (double bt : spec.borrow_threshold_grid) {
            HeatmapTable table;
            table.inflation = ir;
            table.borrow_threshold = bt;
            for (double b0 : spec.beta0_grid) {
                for (double b1 : spec.beta1_grid) {
                    HeatmapCell cell;
                    cell.beta0 = b0;
                    cell.beta1 = b1;
                    std::size_t local = table.cells.size();
                    table.cells.push_back(cell);

                    SimConfig config = spec.base;
                    config.beta0 = b0;
                    config.beta1 = b1;
                    config.demand.eta0 = 1.0 - bt;
                    config.policy = policy_from_inflation_ratio(
                        ir, spec.base.policy.r0, spec.base.tau_stake);
                    for (std::size_t s = 0; s < spec.seeds.size(); ++s) {
                        // Substream keyed by (cell, seed index): growing a grid
                        // never changes existing cells.
                        SimConfig run = config;
                        run.seed = RngStream(spec.seeds[s])
                                       .fork("sweep-cell", cell_index)
                                       .next_u64();
                        jobs.push_back({tables.size(), local, run});
                    }
                    ++cell_index;
                }
            }
            tables.push_back(std::move(table));
        }
    }

    std::vector<double> f_val(jobs.size(), 0.0), g_val(jobs.size(), 0.0);
    std::vector<char> failed(jobs.size(), 0);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t j = next.fetch_add(1);
            if (j >= jobs.size()) return;
            try {
                Trajectory traj = run_trajectory(jobs[j].config);
                f_val[j] = metric_f(traj);
                g_val[j] = metric_g(traj);
            } catch (const std::exception&) {
                failed[j] = 1; // cell isolation: one bad seed cannot sink the sweep
            }
        }
    };
    if (parallelism == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < parallelism; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<std::vector<CellStats>> stats(tables.size());
    for (std::size_t i = 0; i < tables.size(); ++i)
        stats[i].resize(tables[i].cells.size());
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        CellStats& c = stats[jobs[j].table][jobs[j].cell];
        if (failed[j]) {
            ++c.errors;
        } else {
            ++c.ok;
            c.f_sum += f_val[j];
            c.f_sq += f_val[j] * f_val[j];
            c.g_sum += g_val[j];
            c.g_sq += g_val[j] * g_val[j];
        }
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
        for (std::size_t c = 0; c < tables[i].cells.size(); ++c) {
            HeatmapCell& cell = tables[i].cells[c];
            const CellStats& s = stats[i][c];
            cell.n_seeds = s.ok;
            cell.n_errors = s.errors;
            if (s.ok > 0) {
                double nf = static_cast<double>(s.ok);
                cell.f_mean = s.f_sum / nf;
                cell.g_mean = s.g_sum / nf;
                cell.f_std = std::sqrt(std::max(0.0, s.f_sq / nf - cell.f_mean * cell.f_mean));
                cell.g_std = std::sqrt(std::max(0.0, s.g_sq / nf - cell.g_mean * cell.g_mean));
            }
        }
    }
    return tables;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void append_g17(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

} // namespace

std::string heatmap_filename(const HeatmapTable& table) {
    return "dfs_bt_" + format_short(table.borrow_threshold) + "_ir_" +
           format_short(table.inflation) + ".csv";
}

void emit_heatmap_csv(const HeatmapTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "beta0,beta1,f_mean,f_std,g_mean,g_std,n_seeds,n_errors\n";
    std::vector<const HeatmapCell*> rows;
    for (const HeatmapCell& c : table.cells) rows.push_back(&c);
    std::stable_sort(rows.begin(), rows.end(),
                     [](const HeatmapCell* a, const HeatmapCell* b) {
                         return std::tie(a->beta0, a->beta1) <
                                std::tie(b->beta0, b->beta1);
                     });
    std::string line;
    for (const HeatmapCell* c : rows) {
        line.clear();
        append_g17(line, c->beta0);
        line += ',';
        append_g17(line, c->beta1);
        for (double v : {c->f_mean, c->f_std, c->g_mean, c->g_std}) {
            line += ',';
            append_g17(line, v);
        }
        line += ',' + std::to_string(c->n_seeds);
        line += ',' + std::to_string(c->n_errors);
        line += '\n';
        out << line;
    }
}

namespace {

std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line is not key = value: " + line);
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not a number: " + v);
    }
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        unsigned long long u = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return u;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not an unsigned integer: " + v);
    }
}

std::vector<double> to_double_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::istringstream in(v);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(to_double(key, trim(item)));
    return out;
}

// Applies one SimConfig key; returns false when the key is not a SimConfig key.
bool apply_sim_key(SimConfig& c, const std::string& key, const std::string& v) {
    if (key == "n_agents") c.n_agents = to_u64(key, v);
    else if (key == "beta0") c.beta0 = to_double(key, v);
    else if (key == "beta1") c.beta1 = to_double(key, v);
    else if (key == "spread") c.spread = to_double(key, v);
    else if (key == "tau_stake") c.tau_stake = static_cast<unsigned>(to_u64(key, v));
    else if (key == "tau_lend") c.tau_lend = static_cast<unsigned>(to_u64(key, v));
    else if (key == "p_slash") c.p_slash = to_double(key, v);
    else if (key == "slash_fraction") c.slash_fraction = to_double(key, v);
    else if (key == "lambda_stake") c.lambda_stake = to_double(key, v);
    else if (key == "lambda_lend") c.lambda_lend = to_double(key, v);
    else if (key == "initial_lend_rate") c.initial_lend_rate = to_double(key, v);
    else if (key == "rate_period_blocks") c.rate_period_blocks = static_cast<unsigned>(to_u64(key, v));
    else if (key == "horizon") c.horizon = static_cast<unsigned>(to_u64(key, v));
    else if (key == "seed") c.seed = to_u64(key, v);
    else if (key == "security_floor_delta") c.security_floor_delta = to_double(key, v);
    else if (key == "model_kind") {
        if (v == "two-state") c.model_kind = ModelKind::TwoState;
        else if (v == "three-state") c.model_kind = ModelKind::ThreeState;
        else throw ConfigError("model_kind must be two-state or three-state: " + v);
    } else if (key == "policy.kind") {
        if (v == "constant") c.policy.kind = PolicyKind::Constant;
        else if (v == "geometric-half-life") c.policy.kind = PolicyKind::GeometricHalfLife;
        else if (v == "polynomial") c.policy.kind = PolicyKind::Polynomial;
        else if (v == "exponential") c.policy.kind = PolicyKind::Exponential;
        else throw ConfigError("unknown policy.kind: " + v);
    }
    else if (key == "policy.r0") c.policy.r0 = to_double(key, v);
    else if (key == "policy.half_life") c.policy.half_life = to_double(key, v);
    else if (key == "policy.degree") c.policy.degree = static_cast<unsigned>(to_u64(key, v));
    else if (key == "policy.growth") c.policy.growth = to_double(key, v);
    else if (key == "policy.s0") c.policy.s0 = to_double(key, v);
    else if (key == "demand.kind") {
        if (v == "constant-k") c.demand.kind = DemandKind::ConstantK;
        else if (v == "bounded-random-walk") c.demand.kind = DemandKind::BoundedRandomWalk;
        else if (v == "reflected-gbm") c.demand.kind = DemandKind::ReflectedGBM;
        else throw ConfigError("unknown demand.kind: " + v);
    }
    else if (key == "demand.k") c.demand.k = to_double(key, v);
    else if (key == "demand.drift") c.demand.drift = to_double(key, v);
    else if (key == "demand.vol") c.demand.vol = to_double(key, v);
    else if (key == "demand.eta0") c.demand.eta0 = to_double(key, v);
    else if (key == "demand.eta1") c.demand.eta1 = to_double(key, v);
    else return false;
    return true;
}

} // namespace

SimConfig parse_sim_config(const std::string& text) {
    SimConfig config;
    for (const auto& [key, value] : parse_kv(text))
        if (!apply_sim_key(config, key, value))
            throw ConfigError("unknown config key: " + key);
    config.validate();
    return config;
}

SweepSpec parse_sweep_spec(const std::string& text) {
    SweepSpec spec;
    spec.seeds.clear();
    for (const auto& [key, value] : parse_kv(text)) {
        if (apply_sim_key(spec.base, key, value)) continue;
        if (key == "beta0_grid") spec.beta0_grid = to_double_list(key, value);
        else if (key == "beta1_grid") spec.beta1_grid = to_double_list(key, value);
        else if (key == "inflation_grid") spec.inflation_grid = to_double_list(key, value);
        else if (key == "borrow_threshold_grid")
            spec.borrow_threshold_grid = to_double_list(key, value);
        else if (key == "seeds") {
            std::istringstream in(value);
            std::string item;
            while (std::getline(in, item, ','))
                spec.seeds.push_back(to_u64(key, trim(item)));
        } else if (key == "output_dir") spec.output_dir = value;
        else throw ConfigError("unknown config key: " + key);
    }
    if (spec.seeds.empty()) spec.seeds = {1};
    spec.validate();
    return spec;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

SimConfig load_sim_config(const std::string& path) {
    return parse_sim_config(read_file(path));
}

SweepSpec load_sweep_spec(const std::string& path) {
    return parse_sweep_spec(read_file(path));
}

} // namespace stakesim
