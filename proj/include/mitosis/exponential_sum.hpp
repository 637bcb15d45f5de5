#pragma once

#include "mitosis/double_double.hpp"
#include "mitosis/params.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mitosis {

/// One term c * exp(-r x) of a Dirichlet-type series.
struct ExpTerm {
    DoubleDouble coeff;
    double rate = 0.0;
};

/// Rates closer than this (relative) are treated as equal and merged.
inline constexpr double kRateMergeTolerance = 1e-12;

/// Finite sum x -> sum_n c_n exp(-r_n x) with strictly positive, strictly
/// increasing rates.
///
/// Construction sorts the terms by rate and merges rates that agree within
/// kRateMergeTolerance, so every instance satisfies the ordering invariant.
/// Coefficients are kept in double-double; see DoubleDouble.
class ExponentialSum {
public:
    ExponentialSum() = default;
    explicit ExponentialSum(std::vector<ExpTerm> terms, double truncation_tol = 0.0);

    /// Convenience constructor from plain (coefficient, rate) pairs.
    static ExponentialSum from_pairs(std::span<const std::pair<double, double>> pairs,
                                     double truncation_tol = 0.0);

    [[nodiscard]] std::span<const ExpTerm> terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool empty() const { return terms_.empty(); }

    /// Relative tolerance used when the series was truncated (0 for exact sums).
    [[nodiscard]] double truncation_tol() const { return truncation_tol_; }

    [[nodiscard]] double operator()(double x) const;

private:
    std::vector<ExpTerm> terms_;
    double truncation_tol_ = 0.0;
};

/// Evaluates the sum at x >= 0. Terms are accumulated in order of
/// decreasing magnitude with double-double compensation.
[[nodiscard]] double eval(const ExponentialSum& s, double x);

/// Term-wise derivative: (c, r) -> (-c r, r).
[[nodiscard]] ExponentialSum derivative(const ExponentialSum& s);

/// x -> s(factor * x): (c, r) -> (c, factor r).
[[nodiscard]] ExponentialSum dilate(const ExponentialSum& s, double factor);

[[nodiscard]] ExponentialSum scale(const ExponentialSum& s, DoubleDouble factor);

/// Sum of two series with equal rates merged. The result keeps the larger
/// truncation tolerance.
[[nodiscard]] ExponentialSum add(const ExponentialSum& a, const ExponentialSum& b);

/// Growth-division operator  L f = -g f' - b f + 4b f(2x).
[[nodiscard]] ExponentialSum apply_L(const ExponentialSum& s, const ModelParams& p);

/// Exact moment  int_0^inf x^n s(x) dx = n! sum_k c_k / r_k^{n+1}.
[[nodiscard]] double moment(const ExponentialSum& s, int n);
[[nodiscard]] DoubleDouble moment_dd(const ExponentialSum& s, int n);

}  // namespace mitosis
