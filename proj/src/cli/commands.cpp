#include "mitosis/cli.hpp"

#include "csv.hpp"
#include "initial_condition.hpp"
#include "svg.hpp"

#include "mitosis/asymptotics.hpp"
#include "mitosis/eigenbasis.hpp"
#include "mitosis/grid.hpp"
#include "mitosis/solver.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace mitosis::cli {

namespace {

const char* scheme_name(ReactionScheme s) { return s == ReactionScheme::exponential ? "exponential" : "euler"; }

std::string provenance(const RunConfig& cfg) {
    return fmt::format("mitosis {} command={} g={} b={} h={} x_max={} dt={} tol={} scheme={}", kVersion, cfg.command,
                       format_number(cfg.params.g), format_number(cfg.params.b), format_number(cfg.h()),
                       format_number(cfg.x_max), format_number(cfg.dt()), format_number(cfg.tol),
                       scheme_name(cfg.scheme));
}

void prepare_output(const RunConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + cfg.out_dir.string() + ": " + ec.message());
}

std::function<void(std::string_view)> warner(std::ostream& log) {
    return [&log](std::string_view msg) { log << "warning: " << msg << '\n'; };
}

const std::vector<std::string> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

void cmd_eigen(const RunConfig& cfg, std::ostream& log) {
    prepare_output(cfg);
    const ModelParams& p = cfg.params;
    const Eigenbasis basis(p, cfg.modes, cfg.tol);
    const std::string comment = provenance(cfg);

    {
        CsvWriter csv(cfg.out_dir / "eigen_table.csv", comment,
                      {"m", "lambda", "num_terms", "moment_m", "series_coefficients", "series_rates", "dual_coefficients"});
        for (int m = 0; m < basis.size(); ++m) {
            const auto& f = basis.primal(m);
            std::vector<double> coeffs, rates;
            for (const auto& t : f.terms()) {
                coeffs.push_back(t.coeff.value());
                rates.push_back(t.rate);
            }
            const auto dual = basis.dual(m).coeffs();
            csv.row({std::to_string(m), format_number(basis.eigenvalue(m)), std::to_string(f.size()),
                     format_number(moment(f, m)), join_numbers(coeffs, ";"), join_numbers(rates, ";"),
                     join_numbers(dual, ";")});
        }
    }
    {
        std::vector<std::string> names{"n"};
        for (int m = 0; m < basis.size(); ++m) names.push_back("m" + std::to_string(m));
        CsvWriter csv(cfg.out_dir / "biorthogonality.csv", comment, names);
        for (int n = 0; n < basis.size(); ++n) {
            std::vector<std::string> row{std::to_string(n)};
            for (int m = 0; m < basis.size(); ++m) row.push_back(format_number(pairing(basis.dual(n), basis.primal(m))));
            csv.row(row);
        }
    }
    {
        CsvWriter csv(cfg.out_dir / "residuals.csv", comment,
                      {"m", "lambda", "sup_residual", "sup_abs_f", "relative_residual", "boundary_value"});
        constexpr int kSamples = 200;
        const double scale = p.length_scale();
        for (int m = 0; m < basis.size(); ++m) {
            const auto& f = basis.primal(m);
            const auto Lf = apply_L(f, p);
            const double lambda = basis.eigenvalue(m);
            double sup_res = 0.0, sup_f = 0.0;
            for (int i = 0; i < kSamples; ++i) {
                const double x = scale * std::pow(10.0, -4.0 + (std::log10(20.0) + 4.0) * i / (kSamples - 1));
                const double fx = eval(f, x);
                sup_res = std::max(sup_res, std::abs(eval(Lf, x) - lambda * fx));
                sup_f = std::max(sup_f, std::abs(fx));
            }
            csv.row({static_cast<double>(m), lambda, sup_res, sup_f, sup_res / std::max(1.0, sup_f), eval(f, 0.0)});
        }
    }
    {
        PlotSpec plot{"Primal eigenfunctions", "x", "f_m(x) / max |f_m|", false, {}};
        const int shown = std::min(5, basis.size());
        const double x_end = 20.0 * p.length_scale();
        for (int m = 0; m < shown; ++m) {
            PlotSeries s;
            s.label = "f" + std::to_string(m);
            s.color = kPalette[static_cast<std::size_t>(m) % kPalette.size()];
            for (int i = 0; i <= 400; ++i) {
                const double x = x_end * i / 400.0;
                s.x.push_back(x);
                s.y.push_back(eval(basis.primal(m), x));
            }
            double peak = 0.0;
            for (double v : s.y) peak = std::max(peak, std::abs(v));
            if (peak > 0.0) {
                for (double& v : s.y) v /= peak;
            }
            plot.series.push_back(std::move(s));
        }
        write_svg(cfg.out_dir / "eigenfunctions.svg", plot);
    }
    log << "eigen: wrote " << basis.size() << " modes to " << cfg.out_dir.string() << '\n';
}

void cmd_simulate(const RunConfig& cfg, std::ostream& log) {
    prepare_output(cfg);
    const ModelParams& p = cfg.params;
    const Grid grid = make_grid(cfg.x_max, cfg.n_cells);
    const auto warn = warner(log);
    const GridFunction u0 = make_initial_condition(cfg.ic, grid, p, cfg.tol, warn);

    SolverConfig solver = make_solver_config(grid, p, cfg.times, cfg.scheme);
    solver.on_warning = warn;
    const auto snaps = solve(u0, solver);

    const std::string comment = provenance(cfg);
    const double mass0 = total_mass(u0);
    {
        CsvWriter csv(cfg.out_dir / "snapshots.csv", comment, {"t", "x", "u"});
        for (const auto& s : snaps) {
            for (std::size_t i = 0; i < s.u.size(); ++i) csv.row({s.time, grid.node(i), s.u.values[i]});
        }
    }
    {
        CsvWriter csv(cfg.out_dir / "mass.csv", comment, {"t", "total_mass", "expected_mass", "relative_error"});
        for (const auto& s : snaps) {
            const double mass = total_mass(s.u);
            const double expected = mass0 * std::exp(p.b * s.time);
            const double rel = expected != 0.0 ? std::abs(mass - expected) / std::abs(expected) : std::abs(mass);
            csv.row({s.time, mass, expected, rel});
        }
    }
    for (const auto& s : snaps) {
        const double frac = outer_half_mass_fraction(s.u);
        if (frac > 1e-8) {
            warn(fmt::format("t={}: fraction {:.3g} of the mass lies in [x_max/2, x_max]; the division term is "
                             "truncated there, consider a larger --xmax",
                             format_number(s.time), frac));
            break;
        }
    }
    log << "simulate: " << snaps.size() << " snapshots on " << grid.n_nodes() << " nodes\n";
}

void cmd_expansion(const RunConfig& cfg, std::ostream& log) {
    prepare_output(cfg);
    const ModelParams& p = cfg.params;
    const Grid grid = make_grid(cfg.x_max, cfg.n_cells);
    const auto warn = warner(log);
    const GridFunction u0 = make_initial_condition(cfg.ic, grid, p, cfg.tol, warn);
    const Eigenbasis basis(p, cfg.order + 2, cfg.tol);

    SolverConfig solver = make_solver_config(grid, p, cfg.times, cfg.scheme);
    solver.on_warning = warn;
    const FitWindow window{cfg.window[0], cfg.window[1]};
    const ExpansionReport report = residual_series(u0, cfg.order, cfg.k, solver, basis, window);
    if (report.inconclusive) {
        warn(fmt::format("alpha_{} = {} is negligible; the rate check is inconclusive", cfg.order + 1,
                         format_number(report.next_coefficient)));
    }

    const std::string comment = provenance(cfg);
    {
        CsvWriter csv(cfg.out_dir / "expansion.csv", comment,
                      {"order", "k", "coefficients", "next_coefficient", "fitted_rate", "target_rate",
                       "floor_estimate", "window_begin", "window_end", "status"});
        csv.row({std::to_string(report.order), format_number(report.k), join_numbers(report.coefficients, ";"),
                 format_number(report.next_coefficient), format_number(report.fitted_rate),
                 format_number(report.target_rate), format_number(report.floor_estimate),
                 format_number(window.t_begin), format_number(window.t_end),
                 report.inconclusive ? "inconclusive" : "ok"});
    }
    {
        CsvWriter csv(cfg.out_dir / "residual_series.csv", comment, {"t", "residual", "rescaled_residual", "floor"});
        for (const auto& r : report.residuals) csv.row({r.t, r.residual, std::exp(-p.b * r.t) * r.residual, r.floor});
    }
    {
        PlotSpec plot{fmt::format("Order-{} residual in L1 weight k={}", report.order, format_number(report.k)), "t",
                      "residual", true, {}};
        PlotSeries res{"residual", {}, {}, kPalette[0], false};
        PlotSeries floor{"floor", {}, {}, "#7f7f7f", false};
        for (const auto& r : report.residuals) {
            res.x.push_back(r.t);
            res.y.push_back(r.residual);
            floor.x.push_back(r.t);
            floor.y.push_back(r.floor);
        }
        // Fitted line through the window centroid; target slope through the same point.
        double n = 0.0, st = 0.0, sy = 0.0;
        for (const auto& r : report.residuals) {
            if (r.t < window.t_begin || r.t > window.t_end || !(r.residual > 0.0)) continue;
            n += 1.0;
            st += r.t;
            sy += std::log(r.residual);
        }
        const double tc = st / n, yc = sy / n;
        PlotSeries fit{fmt::format("fit {:.4g}", report.fitted_rate), {}, {}, kPalette[1], true};
        PlotSeries target{fmt::format("target {:.4g}", report.target_rate), {}, {}, kPalette[2], true};
        for (double t : {window.t_begin, window.t_end}) {
            fit.x.push_back(t);
            fit.y.push_back(std::exp(yc + report.fitted_rate * (t - tc)));
            target.x.push_back(t);
            target.y.push_back(std::exp(yc + report.target_rate * (t - tc)));
        }
        plot.series = {res, floor, fit, target};
        write_svg(cfg.out_dir / "residual_decay.svg", plot);
    }
    log << fmt::format("expansion: fitted rate {} vs target {}{}\n", format_number(report.fitted_rate),
                       format_number(report.target_rate), report.inconclusive ? " (inconclusive)" : "");
}

void cmd_spectrum(const RunConfig& cfg, std::ostream& log) {
    prepare_output(cfg);
    const auto table = spectrum_table(cfg.a_values, cfg.params);
    CsvWriter csv(cfg.out_dir / "spectrum.csv", provenance(cfg), {"a", "k_a", "m_a", "dominant_eigenvalues"});
    for (const auto& r : table) {
        csv.row({format_number(r.a), format_number(r.k_a), std::to_string(r.m_a), join_numbers(r.dominant_eigenvalues, ",")});
    }
    log << "spectrum: " << table.size() << " abscissae\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& log) {
    try {
        const RunConfig cfg = parse_arguments(args);
        if (cfg.command == "eigen") {
            cmd_eigen(cfg, log);
        } else if (cfg.command == "simulate") {
            cmd_simulate(cfg, log);
        } else if (cfg.command == "expansion") {
            cmd_expansion(cfg, log);
        } else {
            cmd_spectrum(cfg, log);
        }
        return kSuccess;
    } catch (const HelpRequested& h) {
        out << h.text;
        return kSuccess;
    } catch (const ConfigError& e) {
        log << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const NumericalError& e) {
        log << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::exception& e) {
        log << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

}  // namespace mitosis::cli
