#include "mitosis/grid.hpp"

#include <doctest.h>

#include <cmath>

using namespace mitosis;

namespace {

const ModelParams kUnit{1.0, 1.0};

}  // namespace

TEST_CASE("grid construction") {
    const Grid g = make_grid(10.0, 100);
    CHECK(g.n_cells() == 100);
    CHECK(g.n_nodes() == 101);
    CHECK(g.h() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(g.node(50) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(g.node(100) == 10.0);
    CHECK(2.0 * g.node(25) == g.node(50));

    CHECK(make_grid(1.0, 5).n_cells() == 6);
    CHECK(make_grid(20.0, 2000).h() == doctest::Approx(0.01).epsilon(1e-15));

    CHECK_THROWS_AS((void)make_grid(0.0, 10), ConfigError);
    CHECK_THROWS_AS((void)make_grid(-1.0, 10), ConfigError);
    CHECK_THROWS_AS((void)make_grid(1.0, 2), ConfigError);
    CHECK_THROWS_AS((void)make_grid(std::nan(""), 10), ConfigError);
    CHECK_THROWS_AS(GridFunction(g, std::vector<double>(7)), ConfigError);
}

TEST_CASE("sampling") {
    const Grid g = make_grid(4.0, 40);
    const auto c = sample([](double) { return 2.5; }, g);
    for (double v : c.values) CHECK(v == 2.5);

    const auto id = sample([](double x) { return x; }, g);
    for (std::size_t i = 0; i < id.size(); ++i) CHECK(id.values[i] == g.node(i));

    const auto f0 = primal_eigenfunction(0, kUnit);
    const auto s = sample(f0, g);
    CHECK(std::abs(s.values[0]) <= 1e-14);
    CHECK(s.values[10] == eval(f0, g.node(10)));
}

TEST_CASE("weighted L1 norm of a constant") {
    // int_0^1 (1+x)^k dx = (2^{k+1} - 1) / (k + 1)
    for (std::size_t n : {64u, 128u, 256u}) {
        const Grid g = make_grid(1.0, n);
        const auto one = sample([](double) { return 1.0; }, g);
        const double h2 = g.h() * g.h();
        CHECK(weighted_l1_norm(one, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(weighted_l1_norm(one, 1.0) - 1.5) <= 1e-13);
        CHECK(std::abs(weighted_l1_norm(one, 2.0) - 7.0 / 3.0) <= h2);
        const auto neg = sample([](double) { return -1.0; }, g);
        CHECK(weighted_l1_norm(neg, 2.0) == weighted_l1_norm(one, 2.0));
        CHECK(integrate(neg) == -integrate(one));
    }
}

TEST_CASE("trapezoid converges at second order") {
    // int_0^2 e^{-x} sin(3x) dx in closed form
    const double exact = (3.0 - std::exp(-2.0) * (std::sin(6.0) + 3.0 * std::cos(6.0))) / 10.0;
    auto err = [&](std::size_t n) {
        const Grid g = make_grid(2.0, n);
        return std::abs(integrate(sample([](double x) { return std::exp(-x) * std::sin(3.0 * x); }, g)) - exact);
    };
    const double ratio = err(200) / err(400);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("grid pairings against exact pairings") {
    const Eigenbasis basis(kUnit, 4);
    const Grid g = make_grid(30.0, 3000);
    const auto f0 = sample(basis.primal(0), g);
    const auto f1 = sample(basis.primal(1), g);
    CHECK(inner_product_grid(basis.dual(0), f0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(inner_product_grid(basis.dual(1), f0)) <= 1e-6);
    CHECK(std::abs(inner_product_grid(basis.dual(0), f1)) <= 1e-6);
    CHECK(inner_product_grid(basis.dual(1), f1) == doctest::Approx(1.0).epsilon(1e-6));

    const auto unit_mass = sample(mass_normalized_f0(kUnit), g);
    CHECK(weighted_l1_norm(unit_mass, 0.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(integrate(f0) == doctest::Approx(moment(basis.primal(0), 0)).epsilon(1e-6));

    // f_m decays like exp(-2^{1-m} x), so the higher modes need a longer grid.
    const Grid long_grid = make_grid(200.0, 20000);
    for (int n = 0; n < 4; ++n) {
        for (int m = 0; m < 4; ++m) {
            const auto fm = sample(basis.primal(m), long_grid);
            CHECK(std::abs(inner_product_grid(basis.dual(n), fm) - pairing(basis.dual(n), basis.primal(m))) <= 1e-6);
        }
    }
}

TEST_CASE("linear combination") {
    const Grid g = make_grid(1.0, 10);
    const auto x = sample([](double t) { return t; }, g);
    const auto one = sample([](double) { return 1.0; }, g);
    const auto y = linear_combination(2.0, x, -1.0, one);
    for (std::size_t i = 0; i < y.size(); ++i) CHECK(y.values[i] == 2.0 * g.node(i) - 1.0);
    CHECK_THROWS_AS((void)linear_combination(1.0, x, 1.0, GridFunction(make_grid(2.0, 10))), ConfigError);
}
