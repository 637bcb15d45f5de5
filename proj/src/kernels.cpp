#include "mitosis/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace mitosis::kernels {

namespace {

inline double node_x(std::size_t i, double h, std::size_t last, double x_last) {
    return i == last ? x_last : static_cast<double>(i) * h;
}

inline double end_weight(std::size_t i, std::size_t n) { return (i == 0 || i == n) ? 0.5 : 1.0; }

// Sums term(i) over [0, n] in fixed chunks; chunk partials combined in order.
template <class Term>
double chunked_sum(std::size_t count, Term term) {
    const std::size_t chunks = (count + kReductionChunk - 1) / kReductionChunk;
    std::vector<double> partial(chunks, 0.0);
    const auto nchunks = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
        const std::size_t end = std::min(count, begin + kReductionChunk);
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) acc += term(i);
        partial[static_cast<std::size_t>(c)] = acc;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace

namespace reference {

void transport_division_step(std::span<const double> in, std::span<double> out, double decay, double gain) {
    const std::size_t n = in.size() - 1;
    out[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        double v = decay * in[i - 1];
        if (2 * i <= n) v += gain * in[2 * i - 1];
        out[i] = v;
    }
}

double trapezoid(std::span<const double> values, double h) {
    if (values.size() < 2) return 0.0;
    const std::size_t n = values.size() - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i <= n; ++i) acc += end_weight(i, n) * values[i];
    return h * acc;
}

double weighted_abs_trapezoid(std::span<const double> values, double h, double k) {
    if (values.size() < 2) return 0.0;
    const std::size_t n = values.size() - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        acc += end_weight(i, n) * std::abs(values[i]) * std::pow(1.0 + static_cast<double>(i) * h, k);
    }
    return h * acc;
}

double weighted_trapezoid(std::span<const double> values, double h, const std::function<double(double)>& weight) {
    if (values.size() < 2) return 0.0;
    const std::size_t n = values.size() - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i <= n; ++i) acc += end_weight(i, n) * weight(static_cast<double>(i) * h) * values[i];
    return h * acc;
}

void sample(const std::function<double(double)>& f, double h, std::size_t last, double x_last, std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(node_x(i, h, last, x_last));
}

}  // namespace reference

namespace parallel {

void transport_division_step(std::span<const double> in, std::span<double> out, double decay, double gain) {
    const auto n = static_cast<std::int64_t>(in.size()) - 1;
    const double* src = in.data();
    double* dst = out.data();
    dst[0] = 0.0;
    const std::int64_t half = n / 2;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 1; i <= half; ++i) dst[i] = decay * src[i - 1] + gain * src[2 * i - 1];
#pragma omp parallel for schedule(static)
    for (std::int64_t i = half + 1; i <= n; ++i) dst[i] = decay * src[i - 1];
}

double trapezoid(std::span<const double> values, double h) {
    if (values.size() < 2) return 0.0;
    const std::size_t n = values.size() - 1;
    return h * chunked_sum(values.size(), [&](std::size_t i) { return end_weight(i, n) * values[i]; });
}

double weighted_abs_trapezoid(std::span<const double> values, double h, double k) {
    if (values.size() < 2) return 0.0;
    const std::size_t n = values.size() - 1;
    return h * chunked_sum(values.size(), [&](std::size_t i) {
               return end_weight(i, n) * std::abs(values[i]) * std::pow(1.0 + static_cast<double>(i) * h, k);
           });
}

double weighted_trapezoid(std::span<const double> values, double h, const std::function<double(double)>& weight) {
    if (values.size() < 2) return 0.0;
    const std::size_t n = values.size() - 1;
    return h * chunked_sum(values.size(), [&](std::size_t i) {
               return end_weight(i, n) * weight(static_cast<double>(i) * h) * values[i];
           });
}

void sample(const std::function<double(double)>& f, double h, std::size_t last, double x_last, std::span<double> out) {
    const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        out[idx] = f(node_x(idx, h, last, x_last));
    }
}

}  // namespace parallel

}  // namespace mitosis::kernels
