#pragma once

#include "mitosis/eigenbasis.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace mitosis {

/// Uniform grid x_i = i h on [0, x_max] with an even number of cells, so the
/// doubling map sends node i to node 2i for i <= n_cells/2.
class Grid {
public:
    [[nodiscard]] double x_max() const { return x_max_; }
    [[nodiscard]] std::size_t n_cells() const { return n_cells_; }
    [[nodiscard]] std::size_t n_nodes() const { return n_cells_ + 1; }
    [[nodiscard]] double h() const { return h_; }
    [[nodiscard]] double node(std::size_t i) const {
        return i == n_cells_ ? x_max_ : static_cast<double>(i) * h_;
    }

    bool operator==(const Grid&) const = default;

private:
    friend Grid make_grid(double x_max, std::size_t n_cells);
    Grid(double x_max, std::size_t n_cells) : x_max_(x_max), n_cells_(n_cells), h_(x_max / n_cells) {}

    double x_max_;
    std::size_t n_cells_;
    double h_;
};

/// Rounds n_cells up to the next even number. Requires x_max > 0, n_cells >= 4.
[[nodiscard]] Grid make_grid(double x_max, std::size_t n_cells);

/// Node values of a function on a Grid.
struct GridFunction {
    Grid grid;
    std::vector<double> values;

    explicit GridFunction(const Grid& g) : grid(g), values(g.n_nodes(), 0.0) {}
    GridFunction(const Grid& g, std::vector<double> v);

    [[nodiscard]] std::size_t size() const { return values.size(); }
};

[[nodiscard]] GridFunction sample(const std::function<double(double)>& f, const Grid& grid);
[[nodiscard]] GridFunction sample(const ExponentialSum& s, const Grid& grid);

/// Composite trapezoid approximation of int_0^{x_max} |u(x)| (1+x)^k dx.
[[nodiscard]] double weighted_l1_norm(const GridFunction& u, double k);

/// Composite trapezoid approximation of int_0^{x_max} phi(x) u(x) dx.
[[nodiscard]] double inner_product_grid(const DualPolynomial& phi, const GridFunction& u);

/// Signed trapezoid of u.
[[nodiscard]] double integrate(const GridFunction& u);

/// a*x + b*y on a shared grid.
[[nodiscard]] GridFunction linear_combination(double a, const GridFunction& x, double b, const GridFunction& y);

}  // namespace mitosis
