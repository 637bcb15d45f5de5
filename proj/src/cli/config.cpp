#include "mitosis/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace mitosis::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse " + what + " from '" + text + "'");
    }
    if (used != t.size() || !std::isfinite(v)) throw ConfigError("cannot parse " + what + " from '" + text + "'");
    return v;
}

long long parse_integer(const std::string& text, const std::string& what) {
    const double v = parse_number(text, what);
    if (v != std::floor(v)) throw ConfigError(what + " must be an integer, got '" + text + "'");
    return static_cast<long long>(v);
}

// key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        std::string key = trim(line.substr(0, eq));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        values[key] = trim(line.substr(eq + 1));
    }
    return values;
}

std::vector<double> default_times(const std::string& command, double b) {
    std::vector<double> t;
    if (command == "simulate") {
        for (int i = 0; i <= 4; ++i) t.push_back(0.5 * i / b);
    } else if (command == "expansion") {
        for (int i = 0; i <= 30; ++i) t.push_back(0.1 * i / b);
    }
    return t;
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    const std::string t = trim(text);
    if (t.empty()) return out;
    if (t.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(t);
        std::string part;
        while (std::getline(ss, part, ':')) parts.push_back(part);
        if (parts.size() != 3) throw ConfigError("range must be start:step:stop, got '" + text + "'");
        const double start = parse_number(parts[0], "range start");
        const double stepv = parse_number(parts[1], "range step");
        const double stop = parse_number(parts[2], "range stop");
        if (!(stepv > 0.0) || stop < start) throw ConfigError("invalid range '" + text + "'");
        const auto count = static_cast<long long>(std::floor((stop - start) / stepv + 1e-9));
        for (long long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * stepv);
        return out;
    }
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item, "list entry"));
    return out;
}

RunConfig parse_arguments(const std::vector<std::string>& args) {
    CLI::App app{"Spectral toolkit for the equal-mitosis growth-division equation"};
    app.name("mitosis");
    app.set_version_flag("--version", kVersion);

    std::map<std::string, std::string> flags;
    std::string config_path;
    app.add_option("--config", config_path, "key=value configuration file");
    const std::vector<std::pair<std::string, std::string>> keys = {
        {"out", "output directory"},
        {"g", "growth speed g"},
        {"b", "division rate b"},
        {"xmax", "domain length (default 30 g/b)"},
        {"cells", "number of grid cells (default: h = 0.005 g/b)"},
        {"dt", "time step; sets h = g*dt and overrides --cells"},
        {"tol", "series truncation tolerance"},
        {"k", "weight exponent of L^1_k"},
        {"order", "expansion order M"},
        {"modes", "number of eigenmodes tabulated by 'eigen'"},
        {"ic", "initial condition: f<m>, gaussian(c,w), indicator(lo,hi), mode-mix(c0,c1,...) or CSV path"},
        {"times", "snapshot times: comma list or start:step:stop"},
        {"a", "abscissae for the spectrum table (comma list)"},
        {"window", "fit window t1,t2 (default 1/b,3/b)"},
        {"scheme", "reaction substep: euler or exponential"},
    };
    std::map<std::string, CLI::Option*> options;
    for (const auto& [key, help] : keys) {
        options[key] = app.add_option("--" + key, flags[key], help);
    }

    std::string command;
    for (const char* name : {"eigen", "simulate", "expansion", "spectrum"}) {
        auto* sub = app.add_subcommand(name);
        sub->fallthrough();
        sub->callback([&command, name] { command = name; });
    }
    app.get_subcommand("eigen")->description("tabulate f_m, phi_m, pairings and eigen-residuals");
    app.get_subcommand("simulate")->description("evolve an initial condition and record mass growth");
    app.get_subcommand("expansion")->description("fit the decay rate of the order-M residual");
    app.get_subcommand("spectrum")->description("tabulate k_a, m_a and the dominant eigenvalues");
    app.require_subcommand(0, 1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::CallForVersion&) {
        throw HelpRequested{std::string(kVersion) + "\n"};
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    if (!config_path.empty()) {
        for (const auto& [key, value] : read_config_file(config_path)) {
            if (key == "command") {
                if (command.empty()) command = value;
                continue;
            }
            const auto it = options.find(key);
            if (it == options.end()) throw ConfigError("unknown config key '" + key + "'");
            if (it->second->count() == 0) flags[key] = value;
        }
    }
    if (command.empty()) throw ConfigError("a command is required: eigen, simulate, expansion or spectrum");
    if (command != "eigen" && command != "simulate" && command != "expansion" && command != "spectrum") {
        throw ConfigError("unknown command '" + command + "'");
    }

    auto has = [&flags](const std::string& key) { return !flags[key].empty(); };
    RunConfig cfg;
    cfg.command = command;
    const double g = has("g") ? parse_number(flags["g"], "g") : 1.0;
    const double b = has("b") ? parse_number(flags["b"], "b") : 1.0;
    cfg.params = ModelParams(g, b);
    const double scale = g / b;

    cfg.x_max = has("xmax") ? parse_number(flags["xmax"], "xmax") : 30.0 * scale;
    if (!(cfg.x_max > 0.0)) throw ConfigError("xmax must be positive");
    if (has("dt")) {
        const double dt = parse_number(flags["dt"], "dt");
        if (!(dt > 0.0)) throw ConfigError("dt must be positive");
        auto cells = static_cast<std::size_t>(std::ceil(cfg.x_max / (g * dt) - 1e-9));
        if (cells % 2 != 0) ++cells;
        cfg.n_cells = cells;
        cfg.x_max = static_cast<double>(cells) * g * dt;
    } else if (has("cells")) {
        const long long cells = parse_integer(flags["cells"], "cells");
        if (cells < 4) throw ConfigError("cells must be at least 4");
        cfg.n_cells = static_cast<std::size_t>(cells + cells % 2);
    } else {
        auto cells = static_cast<std::size_t>(std::ceil(cfg.x_max / (0.005 * scale) - 1e-9));
        cfg.n_cells = std::max<std::size_t>(4, cells + cells % 2);
    }
    if (cfg.n_cells < 4) throw ConfigError("grid needs at least 4 cells");

    if (has("tol")) cfg.tol = parse_number(flags["tol"], "tol");
    if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) throw ConfigError("tol must lie in (0, 1)");
    if (has("k")) cfg.k = parse_number(flags["k"], "k");
    if (has("order")) {
        const long long order = parse_integer(flags["order"], "order");
        if (order < 0 || order > 20) throw ConfigError("order must lie in [0, 20]");
        cfg.order = static_cast<int>(order);
    }
    if (has("modes")) {
        const long long modes = parse_integer(flags["modes"], "modes");
        if (modes < 1 || modes > 20) throw ConfigError("modes must lie in [1, 20]");
        cfg.modes = static_cast<int>(modes);
    }
    if (has("ic")) cfg.ic = flags["ic"];
    cfg.times = has("times") ? parse_list(flags["times"]) : default_times(command, b);
    for (double t : cfg.times) {
        if (!(t >= 0.0)) throw ConfigError("snapshot times must be nonnegative");
    }
    if (!std::is_sorted(cfg.times.begin(), cfg.times.end())) throw ConfigError("snapshot times must be sorted");

    cfg.a_values = has("a") ? parse_list(flags["a"]) : std::vector<double>{0.0, -0.25 * b, -0.5 * b, -0.75 * b, -0.875 * b};
    for (double a : cfg.a_values) {
        if (!(a > -b && a < b)) throw ConfigError("abscissa " + std::to_string(a) + " is outside (-b, b)");
    }
    cfg.window = has("window") ? parse_list(flags["window"]) : std::vector<double>{1.0 / b, 3.0 / b};
    if (cfg.window.size() != 2 || !(cfg.window[0] < cfg.window[1])) {
        throw ConfigError("window must be two increasing times t1,t2");
    }
    if (has("scheme")) {
        const std::string s = flags["scheme"];
        if (s == "euler") {
            cfg.scheme = ReactionScheme::explicit_euler;
        } else if (s == "exponential") {
            cfg.scheme = ReactionScheme::exponential;
        } else {
            throw ConfigError("scheme must be 'euler' or 'exponential'");
        }
    }
    if (cfg.scheme == ReactionScheme::explicit_euler && b * cfg.dt() > 1.0) {
        throw ConfigError("grid too coarse: the explicit reaction step needs b*h/g <= 1");
    }
    if (has("out")) cfg.out_dir = flags["out"];
    return cfg;
}

}  // namespace mitosis::cli
