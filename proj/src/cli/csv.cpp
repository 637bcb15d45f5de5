#include "csv.hpp"

#include "mitosis/params.hpp"

#include <fmt/format.h>

namespace mitosis::cli {

std::string format_number(double v) {
    if (v == 0.0) return "0";  // no "-0"
    return fmt::format("{:.17g}", v);
}

std::string join_numbers(std::span<const double> values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += format_number(values[i]);
    }
    return out;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::string_view comment,
                     const std::vector<std::string>& header)
    : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw ConfigError("cannot write " + path.string());
    out_ << "# " << comment << '\n';
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        if (fields[i].find(',') != std::string::npos) {
            out_ << '"' << fields[i] << '"';
        } else {
            out_ << fields[i];
        }
    }
    out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out_ << ',';
        out_ << format_number(v);
        first = false;
    }
    out_ << '\n';
}

}  // namespace mitosis::cli
