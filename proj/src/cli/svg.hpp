#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace mitosis::cli {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
    bool dashed = false;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
    std::vector<PlotSeries> series;
};

/// Self-contained 800x600 SVG line plot. On a log axis non-positive points are skipped.
[[nodiscard]] std::string render_svg(const PlotSpec& spec);

void write_svg(const std::filesystem::path& path, const PlotSpec& spec);

}  // namespace mitosis::cli
