#pragma once

#include "mitosis/double_double.hpp"
#include "mitosis/exponential_sum.hpp"
#include "mitosis/params.hpp"

#include <span>
#include <vector>

namespace mitosis {

/// Default truncation tolerance for the primal series.
inline constexpr double kDefaultSeriesTolerance = 1e-14;

/// lambda_m = (2^{1-m} - 1) b.
[[nodiscard]] double eigenvalue(int m, const ModelParams& p);

/// Primal eigenfunction
///   f_m(x) = sum_n (-1)^n 2^{n(m+1)} / prod_{j<=n}(2^j - 1) * exp(-(b/g) 2^{n+1-m} x),
/// truncated once |c_N| <= tol (leading coefficient is 1) with N >= m+2, which
/// is past the point where consecutive coefficients shrink by more than 2.
/// The geometric tail beyond N is then bounded by |c_N|.
[[nodiscard]] ExponentialSum primal_eigenfunction(int m, const ModelParams& p,
                                                  double tol = kDefaultSeriesTolerance);

/// f_0 scaled to unit L^1 norm.
[[nodiscard]] ExponentialSum mass_normalized_f0(const ModelParams& p,
                                                double tol = kDefaultSeriesTolerance);

/// Dual eigenfunction phi_m(x) = sum_{n<=m} alpha_n x^n of the adjoint
/// L* phi = g phi' - b phi + 2b phi(x/2), normalized so <phi_m, f_m> = 1.
class DualPolynomial {
public:
    DualPolynomial(int m, std::vector<DoubleDouble> coeffs);

    [[nodiscard]] int index() const { return m_; }
    [[nodiscard]] std::span<const DoubleDouble> coeffs_dd() const { return coeffs_; }
    /// alpha_0..alpha_m rounded to double.
    [[nodiscard]] std::vector<double> coeffs() const;

    /// Horner evaluation in double.
    [[nodiscard]] double operator()(double x) const;

private:
    int m_;
    std::vector<DoubleDouble> coeffs_;
};

/// Builds phi_m from the recurrence
///   alpha_{n+1} = (b/g) 2^{1-m} (1 - 2^{m-n}) / (n+1) alpha_n
/// starting at alpha_0 = 1, then rescales so the exact pairing with f_m is 1.
/// Throws NumericalError when |moment(f_m, m)| is below the truncation bound.
[[nodiscard]] DualPolynomial dual_eigenfunction(int m, const ModelParams& p,
                                                const ExponentialSum& f_m);

/// Coefficients of g phi' - b phi + 2b phi(x/2) for an arbitrary polynomial.
[[nodiscard]] std::vector<double> apply_L_star(std::span<const double> coeffs, const ModelParams& p);
[[nodiscard]] std::vector<double> apply_L_star(const DualPolynomial& phi, const ModelParams& p);

/// Exact <phi, s> = sum_j alpha_j moment(s, j).
[[nodiscard]] double pairing(const DualPolynomial& phi, const ExponentialSum& s);
[[nodiscard]] DoubleDouble pairing_dd(const DualPolynomial& phi, const ExponentialSum& s);

/// Primal/dual families f_0..f_{count-1}, phi_0..phi_{count-1} for one parameter set.
class Eigenbasis {
public:
    Eigenbasis(const ModelParams& p, int count, double tol = kDefaultSeriesTolerance);

    [[nodiscard]] const ModelParams& params() const { return params_; }
    [[nodiscard]] int size() const { return static_cast<int>(primal_.size()); }
    [[nodiscard]] double tolerance() const { return tol_; }
    [[nodiscard]] const ExponentialSum& primal(int m) const { return primal_.at(m); }
    [[nodiscard]] const DualPolynomial& dual(int m) const { return dual_.at(m); }
    [[nodiscard]] double eigenvalue(int m) const { return mitosis::eigenvalue(m, params_); }

private:
    ModelParams params_;
    double tol_;
    std::vector<ExponentialSum> primal_;
    std::vector<DualPolynomial> dual_;
};

}  // namespace mitosis
