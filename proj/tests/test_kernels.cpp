#include "mitosis/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace mitosis::kernels;

namespace {

std::vector<double> random_profile(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("step: serial and parallel agree bit for bit") {
    for (std::size_t cells : {4u, 10u, 4096u, 100000u}) {
        const auto in = random_profile(cells + 1, static_cast<unsigned>(cells));
        std::vector<double> a(in.size(), -7.0), b(in.size(), -7.0);
        reference::transport_division_step(in, a, 0.99, 0.04);
        parallel::transport_division_step(in, b, 0.99, 0.04);
        CHECK(a == b);
        CHECK(a[0] == 0.0);
    }
}

TEST_CASE("step: stencil on a small grid") {
    // n = 4: out = {0, d*in0 + g*in1, d*in1 + g*in3, d*in2, d*in3}
    const std::vector<double> in{1.0, 2.0, 3.0, 4.0, 5.0};
    std::vector<double> out(5);
    reference::transport_division_step(in, out, 0.5, 10.0);
    CHECK(out == std::vector<double>{0.0, 0.5 + 20.0, 1.0 + 40.0, 1.5, 2.0});
}

TEST_CASE("reductions: serial and parallel agree") {
    for (std::size_t n : {5u, 2049u, 300001u}) {
        const auto v = random_profile(n, static_cast<unsigned>(n) + 3);
        const double h = 1e-3;
        const double scale_abs = h * static_cast<double>(n);
        CHECK(std::abs(reference::trapezoid(v, h) - parallel::trapezoid(v, h)) <= 1e-13 * scale_abs);
        for (double k : {0.0, 1.0, 2.5}) {
            const double r = reference::weighted_abs_trapezoid(v, h, k);
            CHECK(parallel::weighted_abs_trapezoid(v, h, k) == doctest::Approx(r).epsilon(1e-13));
        }
        const auto w = [](double x) { return 1.0 - x + 0.5 * x * x; };
        const double r = reference::weighted_trapezoid(v, h, w);
        const double bound = 1e-13 * reference::weighted_abs_trapezoid(v, h, 2.0);
        CHECK(std::abs(parallel::weighted_trapezoid(v, h, w) - r) <= bound);
    }
}

TEST_CASE("reductions: repeatable") {
    const auto v = random_profile(500000, 11);
    const double first = parallel::weighted_abs_trapezoid(v, 1e-4, 2.0);
    for (int i = 0; i < 5; ++i) CHECK(parallel::weighted_abs_trapezoid(v, 1e-4, 2.0) == first);
}

TEST_CASE("trapezoid of a line is exact") {
    std::vector<double> v(101);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = 3.0 * static_cast<double>(i) * 0.01;
    CHECK(reference::trapezoid(v, 0.01) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(parallel::trapezoid(v, 0.01) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("sampling: last node is x_last") {
    std::vector<double> a(11), b(11);
    const auto f = [](double x) { return x * x; };
    reference::sample(f, 0.1, 10, 1.0, a);
    parallel::sample(f, 0.1, 10, 1.0, b);
    CHECK(a == b);
    CHECK(a[10] == 1.0);
    CHECK(a[3] == doctest::Approx(0.09));
}
