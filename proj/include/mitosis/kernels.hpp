#pragma once

// Inner loops of the solver and of the grid quadratures.
//
// `reference` holds straightforward serial loops kept as the test oracle;
// `parallel` holds the OpenMP versions used by the library. Reductions in
// `parallel` sum fixed-size chunks and combine the partial sums in chunk
// order, so their result does not depend on the number of threads.

#include <cstddef>
#include <functional>
#include <span>

namespace mitosis::kernels {

/// Chunk length of the deterministic parallel reductions.
inline constexpr std::size_t kReductionChunk = 2048;

namespace reference {

/// One split step on nodes 0..n (n even):
///   out[0] = 0,  out[i] = decay * in[i-1] + gain * in[2i-1]   (2i <= n),
///   out[i] = decay * in[i-1]                                   (2i >  n).
/// `in` shifted by one cell is the transported profile, and its node 2i is
/// the value at twice the size of node i.
void transport_division_step(std::span<const double> in, std::span<double> out, double decay, double gain);

/// Composite trapezoid sum of `values` with spacing h.
double trapezoid(std::span<const double> values, double h);

/// Trapezoid of |values_i| (1 + x_i)^k with x_i = i h.
double weighted_abs_trapezoid(std::span<const double> values, double h, double k);

/// Trapezoid of weight(x_i) * values_i with x_i = i h.
double weighted_trapezoid(std::span<const double> values, double h, const std::function<double(double)>& weight);

void sample(const std::function<double(double)>& f, double h, std::size_t last, double x_last, std::span<double> out);

}  // namespace reference

namespace parallel {

void transport_division_step(std::span<const double> in, std::span<double> out, double decay, double gain);
double trapezoid(std::span<const double> values, double h);
double weighted_abs_trapezoid(std::span<const double> values, double h, double k);
double weighted_trapezoid(std::span<const double> values, double h, const std::function<double(double)>& weight);
void sample(const std::function<double(double)>& f, double h, std::size_t last, double x_last, std::span<double> out);

}  // namespace parallel

}  // namespace mitosis::kernels
