#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mitosis::cli {

/// 17 significant digits, shortest form of the "%g" family.
[[nodiscard]] std::string format_number(double v);

/// Numbers joined by `sep` (no quoting).
[[nodiscard]] std::string join_numbers(std::span<const double> values, std::string_view sep);

/// Writes one CSV file: a '#' comment line, the header row, then rows.
/// Lines end in '\n' regardless of platform.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, std::string_view comment, const std::vector<std::string>& header);

    /// Appends a row of already formatted fields. Fields containing ',' are quoted.
    void row(const std::vector<std::string>& fields);
    void row(std::initializer_list<double> values);

private:
    std::ofstream out_;
};

}  // namespace mitosis::cli
