#include "mitosis/asymptotics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace mitosis;

namespace {

const ModelParams kUnit{1.0, 1.0};

GridFunction gaussian(const Grid& g, double c, double w) {
    auto u = sample([&](double x) { return std::exp(-0.5 * (x - c) * (x - c) / (w * w)) / (w * std::sqrt(2.0 * std::numbers::pi)); }, g);
    u.values[0] = 0.0;
    return u;
}

std::vector<double> time_grid(double stop, double step) {
    std::vector<double> t;
    for (int i = 0; i * step <= stop + 1e-12; ++i) t.push_back(i * step);
    return t;
}

}  // namespace

TEST_CASE("weight thresholds") {
    CHECK(k_threshold(0.0, kUnit) == 1.0);
    CHECK(k_threshold(-0.25, kUnit) == doctest::Approx(std::log2(8.0 / 3.0)).epsilon(1e-15));
    CHECK(k_threshold(-0.5, kUnit) == 2.0);
    CHECK(k_threshold(-0.75, kUnit) == 3.0);
    CHECK(k_threshold(-0.875, kUnit) == 4.0);
    CHECK(k_threshold(0.5, ModelParams{1.0, 1.0}) == doctest::Approx(std::log2(4.0 / 3.0)));
    CHECK(k_threshold(-1.0, ModelParams{2.0, 4.0}) == doctest::Approx(std::log2(8.0 / 3.0)));
    CHECK_THROWS_AS((void)k_threshold(-1.0, kUnit), ConfigError);
    CHECK_THROWS_AS((void)k_threshold(1.0, kUnit), ConfigError);
    CHECK_THROWS_AS((void)k_threshold(std::nan(""), kUnit), ConfigError);

    CHECK(dominant_count(0.0, kUnit) == 0);
    CHECK(dominant_count(-0.25, kUnit) == 1);
    CHECK(dominant_count(-0.5, kUnit) == 1);
    CHECK(dominant_count(-0.75, kUnit) == 2);
    CHECK(dominant_count(-0.875, kUnit) == 3);
    CHECK(dominant_count(0.9, kUnit) == 0);
}

TEST_CASE("dominant count brackets a") {
    std::mt19937_64 rng(42);
    for (const ModelParams& p : {kUnit, ModelParams{0.3, 2.7}}) {
        std::uniform_real_distribution<double> dist(-p.b, p.b);
        for (int i = 0; i < 10000; ++i) {
            const double a = dist(rng);
            const int m = dominant_count(a, p);
            CHECK(eigenvalue(m + 1, p) <= a);
            CHECK(a < eigenvalue(m, p));
        }
        // nonincreasing in a
        int prev = dominant_count(-0.999 * p.b, p);
        for (double a = -0.999 * p.b; a < p.b; a += 0.001 * p.b) {
            const int m = dominant_count(a, p);
            CHECK(m <= prev);
            prev = m;
        }
    }
}

TEST_CASE("spectrum table") {
    const std::vector<double> a{-0.875, 0.0};
    const auto table = spectrum_table(a, kUnit);
    REQUIRE(table.size() == 2);
    CHECK(table[0].m_a == 3);
    CHECK(table[0].dominant_eigenvalues == std::vector<double>{1.0, 0.0, -0.5, -0.75});
    CHECK(table[1].k_a == 1.0);
    CHECK(table[1].dominant_eigenvalues == std::vector<double>{1.0});
}

TEST_CASE("decay fit") {
    std::vector<double> t, v;
    for (int i = 0; i <= 30; ++i) {
        t.push_back(0.1 * i);
        v.push_back(3.0 * std::exp(-0.7 * t.back()));
    }
    CHECK(fit_decay_rate(t, v, {1.0, 3.0}) == doctest::Approx(-0.7).epsilon(1e-12));
    CHECK(fit_decay_rate(t, v, {0.0, 0.5}) == doctest::Approx(-0.7).epsilon(1e-12));
    CHECK_THROWS_AS((void)fit_decay_rate(t, v, {10.0, 20.0}), NumericalError);
    std::vector<double> zeros(t.size(), 0.0);
    CHECK_THROWS_AS((void)fit_decay_rate(t, zeros, {1.0, 3.0}), NumericalError);
    CHECK(default_fit_window(ModelParams{1.0, 2.0}).t_end == 1.5);
}

TEST_CASE("expansion coefficients") {
    const Eigenbasis basis(kUnit, 4);
    const Grid g = make_grid(60.0, 12000);
    const auto f0 = sample(basis.primal(0), g);
    const auto f1 = sample(basis.primal(1), g);
    const auto a = expansion_coefficients(f0, 2, basis);
    CHECK(a[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(a[1]) <= 1e-6);
    CHECK(std::abs(a[2]) <= 1e-6);

    const auto b = expansion_coefficients(linear_combination(2.0, f0, 3.0, f1), 1, basis);
    CHECK(b[0] == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(b[1] == doctest::Approx(3.0).epsilon(1e-6));

    // alpha_0 of a unit-mass profile is 1 / mass(f0)
    const auto n0 = sample(mass_normalized_f0(kUnit), g);
    CHECK(expansion_coefficients(n0, 0, basis)[0] * moment(basis.primal(0), 0) == doctest::Approx(1.0).epsilon(1e-6));

    CHECK_THROWS_AS((void)expansion_coefficients(f0, 4, basis), ConfigError);
    CHECK_THROWS_AS((void)expansion_coefficients(f0, -1, basis), ConfigError);

    // quadrature error of alpha is second order in h (node 0 left as sampled:
    // zeroing it would add an O(h) term of size h u(0) / 2)
    const auto bump = [](double x) { return std::exp(-0.5 * (x - 5.0) * (x - 5.0)); };
    const auto u_coarse = sample(bump, make_grid(30.0, 1500));
    const auto u_fine = sample(bump, make_grid(30.0, 3000));
    const auto u_finer = sample(bump, make_grid(30.0, 6000));
    const double d1 = expansion_coefficients(u_coarse, 1, basis)[1] - expansion_coefficients(u_fine, 1, basis)[1];
    const double d2 = expansion_coefficients(u_fine, 1, basis)[1] - expansion_coefficients(u_finer, 1, basis)[1];
    CHECK(std::abs(d1 / d2) == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("mode sums sit at the solver floor") {
    const Eigenbasis basis(kUnit, 3);
    const Grid g = make_grid(30.0, 6000);
    const auto u0 = linear_combination(1.0, sample(basis.primal(0), g), 1.0, sample(basis.primal(1), g));
    const auto cfg = make_solver_config(g, kUnit, time_grid(3.0, 0.25));
    const auto report = residual_series(u0, 1, 3.0, cfg, basis, default_fit_window(kUnit));
    CHECK(report.inconclusive);
    // the two runs differ only by the quadrature error of alpha
    for (const auto& r : report.residuals) CHECK(std::abs(r.residual - r.floor) <= 1e-9);
}

TEST_CASE("residual decay of a gaussian") {
    const Eigenbasis basis(kUnit, 4);
    const Grid g = make_grid(30.0, 12000);
    const auto u0 = gaussian(g, 5.0, 1.0);
    const auto cfg = make_solver_config(g, kUnit, time_grid(3.0, 0.1));

    const auto r0 = residual_series(u0, 0, 2.0, cfg, basis, default_fit_window(kUnit));
    CHECK_FALSE(r0.inconclusive);
    CHECK(r0.target_rate == 0.0);
    // the residual tracks alpha_1 f_1, which is stationary
    CHECK(std::abs(r0.fitted_rate) <= 0.05);
    CHECK(r0.fitted_rate - kUnit.b == doctest::Approx(-1.0).epsilon(0.15));

    const auto r1 = residual_series(u0, 1, 3.0, cfg, basis, default_fit_window(kUnit));
    CHECK_FALSE(r1.inconclusive);
    CHECK_FALSE(r1.weight_below_threshold);
    CHECK(r1.target_rate == -0.5);
    CHECK(r1.fitted_rate == doctest::Approx(-0.5).epsilon(0.15));
    CHECK(r1.floor_estimate < r1.residuals.back().residual);

    // more modes removed, smaller residual at late times in the same norm
    const auto r0k3 = residual_series(u0, 0, 3.0, cfg, basis, default_fit_window(kUnit));
    CHECK(r1.residuals.back().residual < r0k3.residuals.back().residual);
    CHECK(r1.coefficients[0] == doctest::Approx(r0.coefficients[0]).epsilon(1e-15));
}

TEST_CASE("low weight is reported") {
    const Eigenbasis basis(kUnit, 3);
    const Grid g = make_grid(30.0, 3000);
    auto cfg = make_solver_config(g, kUnit, time_grid(3.0, 0.5));
    int warnings = 0;
    cfg.on_warning = [&](std::string_view) { ++warnings; };
    // lambda_2 = -1/2 needs k > 2
    const auto r = residual_series(gaussian(g, 5.0, 1.0), 1, 2.0, cfg, basis, default_fit_window(kUnit));
    CHECK(r.weight_below_threshold);
    CHECK(warnings == 1);
    CHECK_THROWS_AS((void)residual_series(gaussian(g, 5.0, 1.0), 2, 3.0, cfg, basis, default_fit_window(kUnit)),
                    ConfigError);
}
