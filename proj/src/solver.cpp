#include "mitosis/solver.hpp"

#include "mitosis/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

namespace mitosis {

SolverConfig make_solver_config(const Grid& grid, const ModelParams& p, std::vector<double> snapshot_times,
                                ReactionScheme scheme) {
    SolverConfig cfg{grid, p, grid.h() / p.g, std::move(snapshot_times), scheme, {}};
    validate(cfg);
    return cfg;
}

void validate(const SolverConfig& cfg) {
    cfg.params.validate();
    const double expected = cfg.grid.h() / cfg.params.g;
    if (!(std::abs(cfg.dt - expected) <= 1e-12 * expected)) {
        throw ConfigError("time step must equal h/g = " + std::to_string(expected) + " (got " +
                          std::to_string(cfg.dt) + ")");
    }
    if (cfg.scheme == ReactionScheme::explicit_euler && cfg.params.b * cfg.dt > 1.0) {
        throw ConfigError("explicit reaction step needs b*dt <= 1 for positivity");
    }
    if (!std::is_sorted(cfg.snapshot_times.begin(), cfg.snapshot_times.end())) {
        throw ConfigError("snapshot times must be sorted");
    }
    if (!cfg.snapshot_times.empty() && !(cfg.snapshot_times.front() >= 0.0)) {
        throw ConfigError("snapshot times must be nonnegative");
    }
}

namespace {

double decay_factor(const SolverConfig& cfg) {
    const double bdt = cfg.params.b * cfg.dt;
    return cfg.scheme == ReactionScheme::exponential ? std::exp(-bdt) : 1.0 - bdt;
}

void step_into(std::span<const double> in, std::span<double> out, const SolverConfig& cfg) {
    kernels::parallel::transport_division_step(in, out, decay_factor(cfg), 4.0 * cfg.params.b * cfg.dt);
}

}  // namespace

GridFunction step(const GridFunction& u, const SolverConfig& cfg) {
    if (!(u.grid == cfg.grid)) throw ConfigError("grid function does not live on the solver grid");
    GridFunction out(cfg.grid);
    step_into(u.values, out.values, cfg);
    return out;
}

std::vector<Snapshot> solve(const GridFunction& u0, const SolverConfig& cfg) {
    validate(cfg);
    if (!(u0.grid == cfg.grid)) throw ConfigError("initial data does not live on the solver grid");
    if (cfg.on_warning && std::any_of(u0.values.begin(), u0.values.end(), [](double v) { return v < 0.0; })) {
        cfg.on_warning("initial data has negative values; positivity is not preserved");
    }

    std::vector<Snapshot> out;
    out.reserve(cfg.snapshot_times.size());
    std::vector<long long> targets;
    targets.reserve(cfg.snapshot_times.size());
    for (double t : cfg.snapshot_times) targets.push_back(std::llround(t / cfg.dt));

    std::vector<double> current = u0.values;
    std::vector<double> next(current.size());
    long long done = 0;
    for (std::size_t s = 0; s < targets.size(); ++s) {
        for (; done < targets[s]; ++done) {
            step_into(current, next, cfg);
            current.swap(next);
        }
        out.push_back({cfg.snapshot_times[s], static_cast<double>(done) * cfg.dt, GridFunction(cfg.grid, current)});
    }
    return out;
}

double total_mass(const GridFunction& u) { return integrate(u); }

double outer_half_mass_fraction(const GridFunction& u) {
    const double total = weighted_l1_norm(u, 0.0);
    if (total == 0.0) return 0.0;
    const std::size_t half = u.grid.n_cells() / 2;
    const std::span<const double> outer(u.values.data() + half, u.values.size() - half);
    return kernels::parallel::weighted_abs_trapezoid(outer, u.grid.h(), 0.0) / total;
}

}  // namespace mitosis
