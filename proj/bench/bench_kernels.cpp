// Serial reference vs OpenMP kernels. Arguments are grid cell counts.

#include "mitosis/kernels.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

namespace {

using namespace mitosis::kernels;

std::vector<double> profile(std::size_t cells) {
    std::vector<double> v(cells + 1);
    const double h = 30.0 / static_cast<double>(cells);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double x = static_cast<double>(i) * h;
        v[i] = std::exp(-0.5 * (x - 5.0) * (x - 5.0));
    }
    return v;
}

template <auto Step>
void BM_step(benchmark::State& state) {
    const auto cells = static_cast<std::size_t>(state.range(0));
    auto in = profile(cells);
    std::vector<double> out(in.size());
    for (auto _ : state) {
        Step(in, out, 0.995, 0.02);
        in.swap(out);
        benchmark::DoNotOptimize(in.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cells));
}

template <auto Norm>
void BM_weighted_norm(benchmark::State& state) {
    const auto cells = static_cast<std::size_t>(state.range(0));
    const auto v = profile(cells);
    const double h = 30.0 / static_cast<double>(cells);
    for (auto _ : state) benchmark::DoNotOptimize(Norm(v, h, 3.0));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cells));
}

template <auto Sample>
void BM_sample(benchmark::State& state) {
    const auto cells = static_cast<std::size_t>(state.range(0));
    std::vector<double> out(cells + 1);
    const double h = 30.0 / static_cast<double>(cells);
    const auto f = [](double x) { return std::exp(-2.0 * x) - 2.0 * std::exp(-4.0 * x); };
    for (auto _ : state) {
        Sample(f, h, cells, 30.0, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cells));
}

constexpr int64_t kSmall = 1 << 12;
constexpr int64_t kLarge = 1 << 22;

}  // namespace

BENCHMARK(BM_step<reference::transport_division_step>)->Name("step/reference")->RangeMultiplier(8)->Range(kSmall, kLarge);
BENCHMARK(BM_step<parallel::transport_division_step>)->Name("step/parallel")->RangeMultiplier(8)->Range(kSmall, kLarge);
BENCHMARK(BM_weighted_norm<reference::weighted_abs_trapezoid>)->Name("weighted_norm/reference")->RangeMultiplier(8)->Range(kSmall, kLarge);
BENCHMARK(BM_weighted_norm<parallel::weighted_abs_trapezoid>)->Name("weighted_norm/parallel")->RangeMultiplier(8)->Range(kSmall, kLarge);
BENCHMARK(BM_sample<reference::sample>)->Name("sample/reference")->RangeMultiplier(8)->Range(kSmall, kLarge);
BENCHMARK(BM_sample<parallel::sample>)->Name("sample/parallel")->RangeMultiplier(8)->Range(kSmall, kLarge);

BENCHMARK_MAIN();
