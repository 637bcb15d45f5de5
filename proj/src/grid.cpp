#include "mitosis/grid.hpp"

#include "mitosis/kernels.hpp"

#include <cmath>
#include <string>

namespace mitosis {

Grid make_grid(double x_max, std::size_t n_cells) {
    if (!(x_max > 0.0) || !std::isfinite(x_max)) {
        throw ConfigError("grid length x_max must be positive, got " + std::to_string(x_max));
    }
    if (n_cells < 4) throw ConfigError("grid needs at least 4 cells, got " + std::to_string(n_cells));
    if (n_cells % 2 != 0) ++n_cells;
    return Grid(x_max, n_cells);
}

GridFunction::GridFunction(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.n_nodes()) {
        throw ConfigError("grid function has " + std::to_string(values.size()) + " values for " +
                          std::to_string(grid.n_nodes()) + " nodes");
    }
}

GridFunction sample(const std::function<double(double)>& f, const Grid& grid) {
    GridFunction u(grid);
    kernels::parallel::sample(f, grid.h(), grid.n_cells(), grid.x_max(), u.values);
    return u;
}

GridFunction sample(const ExponentialSum& s, const Grid& grid) {
    return sample([&s](double x) { return eval(s, x); }, grid);
}

double weighted_l1_norm(const GridFunction& u, double k) {
    return kernels::parallel::weighted_abs_trapezoid(u.values, u.grid.h(), k);
}

double inner_product_grid(const DualPolynomial& phi, const GridFunction& u) {
    return kernels::parallel::weighted_trapezoid(u.values, u.grid.h(), [&phi](double x) { return phi(x); });
}

double integrate(const GridFunction& u) { return kernels::parallel::trapezoid(u.values, u.grid.h()); }

GridFunction linear_combination(double a, const GridFunction& x, double b, const GridFunction& y) {
    if (!(x.grid == y.grid)) throw ConfigError("linear combination of functions on different grids");
    GridFunction out(x.grid);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a * x.values[i] + b * y.values[i];
    return out;
}

}  // namespace mitosis
