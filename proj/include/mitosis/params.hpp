#pragma once

#include <stdexcept>
#include <string>

namespace mitosis {

/// Thrown when a precondition on user-supplied values is violated.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation cannot produce a meaningful result
/// (e.g. a vanishing normalization moment or an impossible fit).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Growth speed g and division rate b of  u_t + g u_x + b u = 4b u(t, 2x).
struct ModelParams {
    double g = 1.0;
    double b = 1.0;

    ModelParams() = default;
    ModelParams(double growth, double division) : g(growth), b(division) { validate(); }

    void validate() const {
        if (!(g > 0.0) || !(b > 0.0)) {
            throw ConfigError("model parameters require g > 0 and b > 0 (got g=" + std::to_string(g) +
                              ", b=" + std::to_string(b) + ")");
        }
    }

    /// Natural length scale g/b.
    [[nodiscard]] double length_scale() const { return g / b; }

    bool operator==(const ModelParams&) const = default;
};

}  // namespace mitosis
