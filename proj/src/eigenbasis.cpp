#include "mitosis/eigenbasis.hpp"

#include <cmath>
#include <string>

namespace mitosis {

double eigenvalue(int m, const ModelParams& p) {
    if (m < 0) throw ConfigError("eigenvalue index must be nonnegative");
    return (std::ldexp(1.0, 1 - m) - 1.0) * p.b;
}

ExponentialSum primal_eigenfunction(int m, const ModelParams& p, double tol) {
    if (m < 0) throw ConfigError("eigenfunction index must be nonnegative");
    if (!(tol > 0.0 && tol < 1.0)) {
        throw ConfigError("series truncation tolerance must lie in (0, 1), got " + std::to_string(tol));
    }
    p.validate();
    const double base_rate = p.b / p.g;

    // c_n = -c_{n-1} 2^{m+1} / (2^n - 1),  r_n = (b/g) 2^{n+1-m}
    std::vector<ExpTerm> terms;
    DoubleDouble c(1.0);
    terms.push_back({c, std::ldexp(base_rate, 1 - m)});
    constexpr int kMaxTerms = 200;
    for (int n = 1; n < kMaxTerms; ++n) {
        c = -ldexp(c, m + 1) / DoubleDouble(std::ldexp(1.0, n) - 1.0);
        terms.push_back({c, std::ldexp(base_rate, n + 1 - m)});
        if (n >= m + 2 && std::abs(c.hi) <= tol) break;
    }
    return ExponentialSum(std::move(terms), tol);
}

ExponentialSum mass_normalized_f0(const ModelParams& p, double tol) {
    const ExponentialSum f0 = primal_eigenfunction(0, p, tol);
    return scale(f0, DoubleDouble(1.0) / moment_dd(f0, 0));
}

DualPolynomial::DualPolynomial(int m, std::vector<DoubleDouble> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
    if (m_ < 0 || coeffs_.size() != static_cast<std::size_t>(m_) + 1) {
        throw ConfigError("dual polynomial of index m needs exactly m+1 coefficients");
    }
    if (coeffs_.back().hi == 0.0) throw ConfigError("dual polynomial leading coefficient must be nonzero");
}

std::vector<double> DualPolynomial::coeffs() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a.value());
    return out;
}

double DualPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = std::fma(acc, x, it->value());
    return acc;
}

DualPolynomial dual_eigenfunction(int m, const ModelParams& p, const ExponentialSum& f_m) {
    if (m < 0) throw ConfigError("dual index must be nonnegative");
    const DoubleDouble ratio = DoubleDouble(p.b) / DoubleDouble(p.g);

    std::vector<DoubleDouble> alpha;
    alpha.reserve(m + 1);
    alpha.emplace_back(1.0);
    for (int n = 0; n < m; ++n) {
        const double factor = 1.0 - std::ldexp(1.0, m - n);  // exact integer
        alpha.push_back(ldexp(ratio, 1 - m) * DoubleDouble(factor) / DoubleDouble(n + 1.0) * alpha.back());
    }

    // Lower moments vanish, so the provisional pairing is alpha_m * moment(f_m, m).
    const DoubleDouble top = moment_dd(f_m, m);
    double bound = f_m.truncation_tol() > 0.0 ? f_m.truncation_tol() : kDefaultSeriesTolerance;
    for (int j = 1; j <= m; ++j) bound *= j;
    bound *= std::pow(p.g / p.b, m + 1);
    if (!(std::abs(top.value()) > bound)) {
        throw NumericalError("moment of order " + std::to_string(m) + " of f_" + std::to_string(m) +
                             " is " + std::to_string(top.value()) + ", below the truncation bound; "
                             "the series does not match the requested index");
    }
    const DoubleDouble norm = alpha.back() * top;
    for (auto& a : alpha) a /= norm;
    return DualPolynomial(m, std::move(alpha));
}

namespace {

std::vector<DoubleDouble> adjoint_coeffs(std::span<const DoubleDouble> a, const ModelParams& p) {
    // coefficient j: g (j+1) a_{j+1} - b a_j + 2b 2^{-j} a_j
    std::vector<DoubleDouble> out(a.size());
    const DoubleDouble g(p.g);
    const DoubleDouble b(p.b);
    for (std::size_t j = 0; j < a.size(); ++j) {
        DoubleDouble v = (ldexp(b, 1 - static_cast<int>(j)) - b) * a[j];
        if (j + 1 < a.size()) v += g * DoubleDouble(static_cast<double>(j + 1)) * a[j + 1];
        out[j] = v;
    }
    return out;
}

std::vector<double> rounded(const std::vector<DoubleDouble>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.value());
    return out;
}

}  // namespace

std::vector<double> apply_L_star(std::span<const double> coeffs, const ModelParams& p) {
    std::vector<DoubleDouble> a(coeffs.begin(), coeffs.end());
    return rounded(adjoint_coeffs(a, p));
}

std::vector<double> apply_L_star(const DualPolynomial& phi, const ModelParams& p) {
    return rounded(adjoint_coeffs(phi.coeffs_dd(), p));
}

DoubleDouble pairing_dd(const DualPolynomial& phi, const ExponentialSum& s) {
    DoubleDouble acc;
    const auto a = phi.coeffs_dd();
    for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * moment_dd(s, static_cast<int>(j));
    return acc;
}

double pairing(const DualPolynomial& phi, const ExponentialSum& s) { return pairing_dd(phi, s).value(); }

Eigenbasis::Eigenbasis(const ModelParams& p, int count, double tol) : params_(p), tol_(tol) {
    if (count < 1) throw ConfigError("eigenbasis needs at least one mode");
    primal_.reserve(count);
    dual_.reserve(count);
    for (int m = 0; m < count; ++m) {
        primal_.push_back(primal_eigenfunction(m, p, tol));
        dual_.push_back(dual_eigenfunction(m, p, primal_.back()));
    }
}

}  // namespace mitosis
