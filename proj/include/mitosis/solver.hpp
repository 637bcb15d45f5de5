#pragma once

#include "mitosis/grid.hpp"
#include "mitosis/params.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace mitosis {

/// Treatment of the loss/gain substep  u_t = -b u + 4b u(2x).
enum class ReactionScheme {
    /// u_i <- (1 - b dt) u_i + 4 b dt u(2x_i). First order; positivity needs b dt <= 1.
    explicit_euler,
    /// u_i <- exp(-b dt) u_i + 4 b dt u(2x_i). Total mass is then second-order accurate.
    exponential,
};

struct SolverConfig {
    Grid grid;
    ModelParams params;
    double dt;
    std::vector<double> snapshot_times;
    ReactionScheme scheme = ReactionScheme::explicit_euler;
    /// Receives non-fatal diagnostics (e.g. signed initial data). May be empty.
    std::function<void(std::string_view)> on_warning;
};

/// Config with dt = h/g, i.e. exactly one cell of transport per step.
[[nodiscard]] SolverConfig make_solver_config(const Grid& grid, const ModelParams& p,
                                              std::vector<double> snapshot_times,
                                              ReactionScheme scheme = ReactionScheme::explicit_euler);

/// Checks dt = h/g, positivity of the scheme and sorted nonnegative snapshot times.
void validate(const SolverConfig& cfg);

/// One Lie-split step: exact one-cell transport with u_0 = 0, then the
/// loss/gain substep with u(2x) = 0 beyond x_max.
[[nodiscard]] GridFunction step(const GridFunction& u, const SolverConfig& cfg);

struct Snapshot {
    double requested_time;
    double time;  // steps * dt
    GridFunction u;
};

/// Steps from u0 and copies the state at each snapshot time (rounded to the
/// nearest step boundary).
[[nodiscard]] std::vector<Snapshot> solve(const GridFunction& u0, const SolverConfig& cfg);

/// Signed trapezoid of u: the number of cells N(t).
[[nodiscard]] double total_mass(const GridFunction& u);

/// Fraction of |u| mass lying on [x_max/2, x_max], where the gain term is truncated.
[[nodiscard]] double outer_half_mass_fraction(const GridFunction& u);

}  // namespace mitosis
