#include "mitosis/solver.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

using namespace mitosis;

namespace {

const ModelParams kUnit{1.0, 1.0};

GridFunction gaussian(const Grid& g, double c, double w) {
    auto u = sample([&](double x) { return std::exp(-0.5 * (x - c) * (x - c) / (w * w)) / (w * std::sqrt(2.0 * std::numbers::pi)); }, g);
    u.values[0] = 0.0;
    return u;
}

double l1_distance(const GridFunction& a, const GridFunction& b) {
    return weighted_l1_norm(linear_combination(1.0, a, -1.0, b), 0.0);
}

double mass_error(std::size_t cells, ReactionScheme scheme) {
    const Grid g = make_grid(30.0, cells);
    const auto u0 = gaussian(g, 5.0, 1.0);
    const auto cfg = make_solver_config(g, kUnit, {2.0}, scheme);
    const auto snaps = solve(u0, cfg);
    const double expected = total_mass(u0) * std::exp(snaps.back().time);
    return std::abs(total_mass(snaps.back().u) - expected) / expected;
}

}  // namespace

TEST_CASE("configuration checks") {
    const Grid g = make_grid(10.0, 100);
    const auto cfg = make_solver_config(g, kUnit, {0.0, 1.0});
    CHECK(cfg.dt == doctest::Approx(0.1).epsilon(1e-15));

    SolverConfig bad = cfg;
    bad.dt = 0.05;
    CHECK_THROWS_AS(validate(bad), ConfigError);
    CHECK_THROWS_AS((void)make_solver_config(g, kUnit, {1.0, 0.5}), ConfigError);
    CHECK_THROWS_AS((void)make_solver_config(g, kUnit, {-1.0}), ConfigError);
    // b dt = 2 > 1: only the exponential variant stays positive
    CHECK_THROWS_AS((void)make_solver_config(g, ModelParams{1.0, 20.0}, {1.0}), ConfigError);
    CHECK_NOTHROW((void)make_solver_config(g, ModelParams{1.0, 20.0}, {1.0}, ReactionScheme::exponential));

    GridFunction other(make_grid(5.0, 100));
    CHECK_THROWS_AS((void)step(other, cfg), ConfigError);
    CHECK_THROWS_AS((void)solve(other, cfg), ConfigError);
}

TEST_CASE("trivial evolutions") {
    const Grid g = make_grid(10.0, 200);
    const auto cfg = make_solver_config(g, kUnit, {0.0, 0.5, 3.0});
    const auto zero = solve(GridFunction(g), cfg);
    for (const auto& s : zero) {
        for (double v : s.u.values) CHECK(v == 0.0);
    }
    const auto u0 = gaussian(g, 3.0, 0.5);
    const auto snaps = solve(u0, cfg);
    REQUIRE(snaps.size() == 3);
    CHECK(snaps[0].time == 0.0);
    CHECK(snaps[0].u.values == u0.values);
    CHECK(snaps[1].time == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(snaps[2].requested_time == 3.0);

    const auto one = step(u0, cfg);
    CHECK(one.values[0] == 0.0);
}

TEST_CASE("positivity and warnings") {
    const Grid g = make_grid(20.0, 2000);
    auto cfg = make_solver_config(g, kUnit, {2.0});
    std::string warned;
    cfg.on_warning = [&](std::string_view m) { warned = m; };
    const auto snaps = solve(gaussian(g, 4.0, 0.3), cfg);
    for (double v : snaps.back().u.values) CHECK(v >= 0.0);
    CHECK(warned.empty());

    auto neg = gaussian(g, 4.0, 0.3);
    neg.values[100] = -1.0;
    (void)solve(neg, cfg);
    CHECK(warned.find("negative") != std::string::npos);
}

TEST_CASE("linearity") {
    const Grid g = make_grid(20.0, 2000);
    const auto cfg = make_solver_config(g, kUnit, {1.5});
    const auto u = gaussian(g, 4.0, 0.7);
    const auto v = sample([](double x) { return x * std::exp(-x); }, g);
    const auto lhs = solve(linear_combination(2.0, u, -3.0, v), cfg).back().u;
    const auto su = solve(u, cfg).back().u;
    const auto sv = solve(v, cfg).back().u;
    const auto rhs = linear_combination(2.0, su, -3.0, sv);
    const double scale = weighted_l1_norm(su, 0.0) + weighted_l1_norm(sv, 0.0);
    CHECK(l1_distance(lhs, rhs) <= 1e-13 * scale);

    // negation commutes with the scheme exactly
    const auto minus = solve(linear_combination(-1.0, u, 0.0, u), cfg).back().u;
    CHECK(total_mass(minus) == -total_mass(su));
}

TEST_CASE("total mass grows like e^{bt}") {
    const double e1 = mass_error(6000, ReactionScheme::explicit_euler);
    const double e2 = mass_error(12000, ReactionScheme::explicit_euler);
    CHECK(e1 < 0.01);
    CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.15));

    const double x1 = mass_error(6000, ReactionScheme::exponential);
    const double x2 = mass_error(12000, ReactionScheme::exponential);
    CHECK(x1 < e1);
    CHECK(x1 / x2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("eigenfunctions evolve by e^{lambda t}") {
    for (int m = 0; m <= 1; ++m) {
        const Eigenbasis basis(kUnit, 2);
        double previous = 0.0;
        for (std::size_t cells : {3000u, 6000u, 12000u}) {
            const Grid g = make_grid(30.0, cells);
            const auto f = sample(basis.primal(m), g);
            const auto cfg = make_solver_config(g, kUnit, {2.0});
            const auto snap = solve(f, cfg).back();
            const double growth = std::exp(basis.eigenvalue(m) * snap.time);
            const auto exact = linear_combination(growth, f, 0.0, f);
            const double err = l1_distance(snap.u, exact);
            CHECK(err <= 5.0 * g.h() * growth);
            // error constant err / (h e^{lambda t}) settles under refinement
            const double constant = err / (g.h() * growth);
            if (previous > 0.0) CHECK(constant == doctest::Approx(previous).epsilon(0.1));
            previous = constant;
        }
    }
}

TEST_CASE("superposition of modes") {
    const Eigenbasis basis(kUnit, 2);
    const Grid g = make_grid(40.0, 8000);
    const auto f0 = sample(basis.primal(0), g);
    const auto f1 = sample(basis.primal(1), g);
    const auto cfg = make_solver_config(g, kUnit, {1.0});
    const auto snap = solve(linear_combination(1.0, f0, 1.0, f1), cfg).back();
    const auto exact = linear_combination(std::exp(snap.time), f0, 1.0, f1);
    CHECK(l1_distance(snap.u, exact) <= 5.0 * g.h() * std::exp(snap.time));
}

TEST_CASE("outer mass fraction") {
    const Grid g = make_grid(10.0, 1000);
    CHECK(outer_half_mass_fraction(GridFunction(g)) == 0.0);
    CHECK(outer_half_mass_fraction(gaussian(g, 2.0, 0.3)) < 1e-15);
    const auto flat = sample([](double) { return 1.0; }, g);
    CHECK(outer_half_mass_fraction(flat) == doctest::Approx(0.5).epsilon(1e-12));
}
