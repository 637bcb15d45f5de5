#include "initial_condition.hpp"

#include "mitosis/params.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

namespace mitosis::cli {

namespace {

std::vector<double> parse_arguments_list(const std::string& inner) {
    std::vector<double> out;
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("bad initial-condition argument '" + item + "'");
        }
    }
    return out;
}

GridFunction from_csv(const std::string& path, const Grid& grid) {
    std::ifstream in(path);
    if (!in) throw ConfigError("initial condition '" + path + "' is neither a built-in profile nor a readable file");
    std::vector<double> xs, us;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected x,u");
        double x = 0.0, u = 0.0;
        try {
            x = std::stod(line.substr(0, comma));
            u = std::stod(line.substr(comma + 1));
        } catch (const std::exception&) {
            if (xs.empty() && lineno == 1) continue;  // header row
            throw ConfigError(path + ":" + std::to_string(lineno) + ": cannot parse '" + line + "'");
        }
        if (!xs.empty() && !(x > xs.back())) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": x values must be strictly increasing");
        }
        xs.push_back(x);
        us.push_back(u);
    }
    if (xs.size() < 2) throw ConfigError(path + ": need at least two samples");

    GridFunction u0(grid);
    for (std::size_t i = 0; i < u0.size(); ++i) {
        const double x = grid.node(i);
        if (x < xs.front() || x > xs.back()) continue;
        const auto hi = std::upper_bound(xs.begin(), xs.end(), x);
        if (hi == xs.end()) {
            u0.values[i] = us.back();
            continue;
        }
        const std::size_t j = static_cast<std::size_t>(hi - xs.begin());
        const double w = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
        u0.values[i] = (1.0 - w) * us[j - 1] + w * us[j];
    }
    return u0;
}

}  // namespace

GridFunction make_initial_condition(const std::string& spec, const Grid& grid, const ModelParams& p, double tol,
                                    const std::function<void(std::string_view)>& warn) {
    static const std::regex mode_re(R"(f(\d+))");
    static const std::regex call_re(R"(([a-z-]+)\((.*)\))");
    std::smatch match;
    GridFunction u0(grid);
    bool builtin = true;

    if (std::regex_match(spec, match, mode_re)) {
        u0 = sample(primal_eigenfunction(std::stoi(match[1]), p, tol), grid);
    } else if (std::regex_match(spec, match, call_re)) {
        const std::string name = match[1];
        const auto args = parse_arguments_list(match[2]);
        if (name == "gaussian") {
            if (args.size() != 2 || !(args[1] > 0.0)) throw ConfigError("gaussian(center,width) needs width > 0");
            const double c = args[0], w = args[1];
            u0 = sample([c, w](double x) {
                const double z = (x - c) / w;
                return std::exp(-0.5 * z * z) / (w * std::sqrt(2.0 * std::numbers::pi));
            }, grid);
        } else if (name == "indicator") {
            if (args.size() != 2 || !(args[0] < args[1])) throw ConfigError("indicator(lo,hi) needs lo < hi");
            const double lo = args[0], hi = args[1];
            u0 = sample([lo, hi](double x) { return (x >= lo && x <= hi) ? 1.0 : 0.0; }, grid);
        } else if (name == "mode-mix") {
            if (args.empty()) throw ConfigError("mode-mix needs at least one coefficient");
            for (std::size_t m = 0; m < args.size(); ++m) {
                if (args[m] == 0.0) continue;
                u0 = linear_combination(1.0, u0, args[m], sample(primal_eigenfunction(static_cast<int>(m), p, tol), grid));
            }
        } else {
            throw ConfigError("unknown initial-condition profile '" + name + "'");
        }
    } else {
        u0 = from_csv(spec, grid);
        builtin = false;
    }
    if (builtin) u0.values.front() = 0.0;

    if (warn && std::any_of(u0.values.begin(), u0.values.end(), [](double v) { return v < 0.0; })) {
        warn("initial condition '" + spec + "' has negative values");
    }
    return u0;
}

}  // namespace mitosis::cli
