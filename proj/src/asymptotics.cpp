#include "mitosis/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mitosis {

namespace {

void require_abscissa(double a, const ModelParams& p) {
    if (!(a > -p.b && a < p.b)) {
        throw ConfigError("abscissa a=" + std::to_string(a) + " must lie in (-b, b) = (" + std::to_string(-p.b) +
                          ", " + std::to_string(p.b) + ")");
    }
}

}  // namespace

double k_threshold(double a, const ModelParams& p) {
    p.validate();
    require_abscissa(a, p);
    return std::log2(2.0 * p.b / (p.b + a));
}

int dominant_count(double a, const ModelParams& p) {
    const double k_a = k_threshold(a, p);
    int m = std::max(0, static_cast<int>(std::ceil(k_a - 1.0)));
    // k_a carries rounding; settle ties against the eigenvalues themselves.
    while (eigenvalue(m + 1, p) > a) ++m;
    while (m > 0 && eigenvalue(m, p) <= a) --m;
    return m;
}

std::vector<ThresholdReport> spectrum_table(std::span<const double> a_values, const ModelParams& p) {
    std::vector<ThresholdReport> out;
    out.reserve(a_values.size());
    for (double a : a_values) {
        ThresholdReport r{a, k_threshold(a, p), dominant_count(a, p), {}};
        for (int m = 0; m <= r.m_a; ++m) r.dominant_eigenvalues.push_back(eigenvalue(m, p));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<double> expansion_coefficients(const GridFunction& u0, int M, const Eigenbasis& basis) {
    if (M < 0 || M >= basis.size()) {
        throw ConfigError("expansion order " + std::to_string(M) + " needs an eigenbasis with more than M modes");
    }
    std::vector<double> alpha;
    alpha.reserve(M + 1);
    for (int m = 0; m <= M; ++m) alpha.push_back(inner_product_grid(basis.dual(m), u0));
    return alpha;
}

double fit_decay_rate(std::span<const double> times, std::span<const double> values, FitWindow window) {
    double n = 0.0, st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (std::size_t i = 0; i < times.size() && i < values.size(); ++i) {
        const double t = times[i];
        if (t < window.t_begin || t > window.t_end || !(values[i] > 0.0)) continue;
        const double y = std::log(values[i]);
        n += 1.0;
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
    }
    const double denom = n * stt - st * st;
    if (n < 2.0 || !(denom > 0.0)) {
        throw NumericalError("decay fit needs at least two positive residuals at distinct times in [" +
                             std::to_string(window.t_begin) + ", " + std::to_string(window.t_end) + "]");
    }
    return (n * sty - st * sy) / denom;
}

FitWindow default_fit_window(const ModelParams& p) { return {1.0 / p.b, 3.0 / p.b}; }

ExpansionReport residual_series(const GridFunction& u0, int M, double k, const SolverConfig& cfg,
                                const Eigenbasis& basis, FitWindow window) {
    if (M + 1 >= basis.size()) {
        throw ConfigError("residual series of order " + std::to_string(M) + " needs " + std::to_string(M + 2) +
                          " eigenmodes");
    }
    const ModelParams& p = cfg.params;
    ExpansionReport report{};
    report.order = M;
    report.k = k;
    report.window = window;
    report.target_rate = eigenvalue(M + 1, p);

    const auto all = expansion_coefficients(u0, M + 1, basis);
    report.coefficients.assign(all.begin(), all.end() - 1);
    report.next_coefficient = all.back();
    report.inconclusive = std::abs(report.next_coefficient) < kInconclusiveRatio * weighted_l1_norm(u0, 0.0);
    report.weight_below_threshold = !(k > std::max(1.0, k_threshold(report.target_rate, p)));
    if (report.weight_below_threshold && cfg.on_warning) {
        cfg.on_warning("weight exponent k is not above max(1, k_a) for a = lambda_{M+1}; the decay bound may fail");
    }

    std::vector<GridFunction> modes;
    modes.reserve(M + 1);
    for (int m = 0; m <= M; ++m) modes.push_back(sample(basis.primal(m), cfg.grid));

    GridFunction projected(cfg.grid);
    for (int m = 0; m <= M; ++m) projected = linear_combination(1.0, projected, report.coefficients[m], modes[m]);

    SolverConfig quiet = cfg;
    quiet.on_warning = nullptr;
    const auto run = solve(u0, cfg);
    const auto floor_run = solve(projected, quiet);

    std::vector<double> times, values;
    report.residuals.reserve(run.size());
    for (std::size_t s = 0; s < run.size(); ++s) {
        const double t = run[s].time;
        GridFunction mode_sum(cfg.grid);
        for (int m = 0; m <= M; ++m) {
            mode_sum = linear_combination(1.0, mode_sum, report.coefficients[m] * std::exp(eigenvalue(m, p) * t), modes[m]);
        }
        const double r = weighted_l1_norm(linear_combination(1.0, run[s].u, -1.0, mode_sum), k);
        const double fl = weighted_l1_norm(linear_combination(1.0, floor_run[s].u, -1.0, mode_sum), k);
        report.residuals.push_back({t, r, fl});
        times.push_back(t);
        values.push_back(r);
    }

    if (std::none_of(values.begin(), values.end(), [](double v) { return v > 0.0; })) {
        throw NumericalError("all residuals are zero; no decay rate can be fitted");
    }
    report.fitted_rate = fit_decay_rate(times, values, window);
    report.floor_estimate = 0.0;
    for (const auto& r : report.residuals) {
        if (r.t >= window.t_begin && r.t <= window.t_end) report.floor_estimate = std::max(report.floor_estimate, r.floor);
    }
    return report;
}

}  // namespace mitosis
