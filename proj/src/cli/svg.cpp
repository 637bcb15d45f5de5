#include "svg.hpp"

#include "mitosis/params.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace mitosis::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string tick_label(double v) { return fmt::format("{:.3g}", v); }

}  // namespace

std::string render_svg(const PlotSpec& spec) {
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    auto y_of = [&](double y) { return spec.log_y ? std::log10(y) : y; };
    for (const auto& s : spec.series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (spec.log_y && !(s.y[i] > 0.0)) continue;
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            x_lo = std::min(x_lo, s.x[i]);
            x_hi = std::max(x_hi, s.x[i]);
            y_lo = std::min(y_lo, y_of(s.y[i]));
            y_hi = std::max(y_hi, y_of(s.y[i]));
        }
    }
    if (!std::isfinite(x_lo)) { x_lo = 0.0; x_hi = 1.0; y_lo = 0.0; y_hi = 1.0; }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    if (y_hi == y_lo) { y_lo -= 0.5; y_hi += 0.5; }
    if (spec.log_y) {
        y_lo = std::floor(y_lo);
        y_hi = std::ceil(y_hi);
    } else {
        const double pad = 0.05 * (y_hi - y_lo);
        y_lo -= pad;
        y_hi += pad;
    }

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return kTop + (1.0 - (y - y_lo) / (y_hi - y_lo)) * ph; };

    std::string svg;
    svg += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n");
    svg += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg += fmt::format("<text x=\"{:.1f}\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
                       kLeft + pw / 2, escape(spec.title));
    svg += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" stroke=\"black\"/>\n",
                       kLeft, kTop, pw, ph);

    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double xv = x_lo + (x_hi - x_lo) * i / kTicks;
        svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"#ddd\"/>\n",
                           px(xv), kTop, kTop + ph);
        svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", px(xv),
                           kTop + ph + 18, tick_label(xv));
    }
    if (spec.log_y) {
        for (double e = y_lo; e <= y_hi + 0.5; e += std::max(1.0, std::ceil((y_hi - y_lo) / 8))) {
            svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"#ddd\"/>\n",
                               kLeft, py(e), kLeft + pw);
            svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">1e{}</text>\n", kLeft - 6,
                               py(e) + 4, static_cast<int>(e));
        }
    } else {
        for (int i = 0; i <= kTicks; ++i) {
            const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
            svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"#ddd\"/>\n",
                               kLeft, py(yv), kLeft + pw);
            svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{}</text>\n", kLeft - 6,
                               py(yv) + 4, tick_label(yv));
        }
    }
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", kLeft + pw / 2,
                       kHeight - 15, escape(spec.x_label));
    svg += fmt::format("<text x=\"20\" y=\"{0:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0:.1f})\">{1}</text>\n",
                       kTop + ph / 2, escape(spec.y_label));

    for (std::size_t k = 0; k < spec.series.size(); ++k) {
        const auto& s = spec.series[k];
        std::string points;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (spec.log_y && !(s.y[i] > 0.0)) continue;
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            points += fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(y_of(s.y[i])));
        }
        if (!points.empty()) points.pop_back();
        svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{} points=\"{}\"/>\n", s.color,
                           s.dashed ? " stroke-dasharray=\"6,4\"" : "", points);
        const double ly = kTop + 14.0 + 20.0 * static_cast<double>(k);
        svg += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"{3}\" stroke-width=\"2\"{4}/>\n",
                           kLeft + pw + 10, ly, kLeft + pw + 35, s.color, s.dashed ? " stroke-dasharray=\"6,4\"" : "");
        svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", kLeft + pw + 40, ly + 4, escape(s.label));
    }
    svg += "</svg>\n";
    return svg;
}

void write_svg(const std::filesystem::path& path, const PlotSpec& spec) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << render_svg(spec);
}

}  // namespace mitosis::cli
