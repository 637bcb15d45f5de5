#pragma once

#include "mitosis/eigenbasis.hpp"
#include "mitosis/grid.hpp"
#include "mitosis/solver.hpp"

#include <span>
#include <vector>

namespace mitosis {

/// Dominant spectrum to the right of the abscissa a.
struct ThresholdReport {
    double a;
    double k_a;   ///< minimal weight exponent log2(2b/(b+a))
    int m_a;      ///< index of the last eigenvalue strictly above a
    std::vector<double> dominant_eigenvalues;  ///< lambda_0 .. lambda_{m_a}
};

/// log2(2b / (b + a)); requires -b < a < b.
[[nodiscard]] double k_threshold(double a, const ModelParams& p);

/// m_a = ceil(k_a - 1), the integer with lambda_{m_a+1} <= a < lambda_{m_a}.
[[nodiscard]] int dominant_count(double a, const ModelParams& p);

[[nodiscard]] std::vector<ThresholdReport> spectrum_table(std::span<const double> a_values, const ModelParams& p);

/// alpha_m = <phi_m, u0> on the grid, m = 0..M. Requires basis.size() > M.
[[nodiscard]] std::vector<double> expansion_coefficients(const GridFunction& u0, int M, const Eigenbasis& basis);

struct FitWindow {
    double t_begin;
    double t_end;
};

/// Least-squares slope of log(values) against t over the samples with
/// t in the window and values > 0. Throws NumericalError with fewer than two
/// usable samples.
[[nodiscard]] double fit_decay_rate(std::span<const double> times, std::span<const double> values, FitWindow window);

struct ResidualSample {
    double t;
    double residual;  ///< || u(t) - sum_{m<=M} alpha_m e^{lambda_m t} f_m ||_{L^1_k}
    double floor;     ///< same norm for the run started from sum_{m<=M} alpha_m f_m
};

struct ExpansionReport {
    int order;                        ///< M
    double k;
    std::vector<double> coefficients; ///< alpha_0 .. alpha_M
    double next_coefficient;          ///< alpha_{M+1}, decides whether the rate is observable
    std::vector<ResidualSample> residuals;
    FitWindow window;
    double fitted_rate;
    double target_rate;               ///< lambda_{M+1}
    double floor_estimate;            ///< max floor over the fit window
    bool inconclusive;                ///< |alpha_{M+1}| < 1e-8 ||u0||_{L^1}
    bool weight_below_threshold;      ///< k <= max(1, k_threshold(lambda_{M+1}))
};

/// Coefficient magnitude (relative to ||u0||_{L^1}) below which the next mode
/// is treated as absent.
inline constexpr double kInconclusiveRatio = 1e-8;

/// Default fit window [1/b, 3/b].
[[nodiscard]] FitWindow default_fit_window(const ModelParams& p);

/// Evolves u0, subtracts the first M+1 modes sampled on the grid and fits the
/// decay rate of the weighted residual. basis must hold at least M+2 modes.
[[nodiscard]] ExpansionReport residual_series(const GridFunction& u0, int M, double k, const SolverConfig& cfg,
                                              const Eigenbasis& basis, FitWindow window);

}  // namespace mitosis
