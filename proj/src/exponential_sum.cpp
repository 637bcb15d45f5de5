#include "mitosis/exponential_sum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mitosis {

namespace {

bool same_rate(double a, double b) {
    return std::abs(a - b) <= kRateMergeTolerance * std::max(std::abs(a), std::abs(b));
}

// e^{-r x} to roughly 64 bits: the exponent is formed exactly, its high part
// goes through long double exp and the low part enters to first order. Large terms of
// a cancelling series need more than a double's worth of exp().
DoubleDouble exp_neg_product(double r, double x) {
    const DoubleDouble a = dd_detail::two_prod(-r, x);
    const long double e = std::exp(static_cast<long double>(a.hi)) * (1.0L + a.lo);
    const auto hi = static_cast<double>(e);
    return {hi, static_cast<double>(e - hi)};
}

}  // namespace

ExponentialSum::ExponentialSum(std::vector<ExpTerm> terms, double truncation_tol)
    : truncation_tol_(truncation_tol) {
    for (const auto& t : terms) {
        if (!(t.rate > 0.0) || !std::isfinite(t.rate)) {
            throw ConfigError("exponential sum rates must be finite and positive (got " +
                              std::to_string(t.rate) + ")");
        }
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const ExpTerm& a, const ExpTerm& b) { return a.rate < b.rate; });
    terms_.reserve(terms.size());
    for (const auto& t : terms) {
        if (!terms_.empty() && same_rate(terms_.back().rate, t.rate)) {
            terms_.back().coeff += t.coeff;
        } else {
            terms_.push_back(t);
        }
    }
}

ExponentialSum ExponentialSum::from_pairs(std::span<const std::pair<double, double>> pairs,
                                          double truncation_tol) {
    std::vector<ExpTerm> terms;
    terms.reserve(pairs.size());
    for (const auto& [c, r] : pairs) terms.push_back({DoubleDouble(c), r});
    return ExponentialSum(std::move(terms), truncation_tol);
}

double ExponentialSum::operator()(double x) const { return eval(*this, x); }

double eval(const ExponentialSum& s, double x) {
    const auto terms = s.terms();
    std::vector<DoubleDouble> values;
    values.reserve(terms.size());
    for (const auto& t : terms) {
        values.push_back(t.coeff * exp_neg_product(t.rate, x));
    }
    std::sort(values.begin(), values.end(),
              [](const DoubleDouble& a, const DoubleDouble& b) { return std::abs(a.hi) > std::abs(b.hi); });
    DoubleDouble acc;
    for (const auto& v : values) acc += v;
    return acc.value();
}

ExponentialSum derivative(const ExponentialSum& s) {
    std::vector<ExpTerm> out;
    out.reserve(s.size());
    for (const auto& t : s.terms()) out.push_back({-(t.coeff * DoubleDouble(t.rate)), t.rate});
    return ExponentialSum(std::move(out), s.truncation_tol());
}

ExponentialSum dilate(const ExponentialSum& s, double factor) {
    if (!(factor > 0.0)) throw ConfigError("dilation factor must be positive");
    std::vector<ExpTerm> out;
    out.reserve(s.size());
    for (const auto& t : s.terms()) out.push_back({t.coeff, factor * t.rate});
    return ExponentialSum(std::move(out), s.truncation_tol());
}

ExponentialSum scale(const ExponentialSum& s, DoubleDouble factor) {
    std::vector<ExpTerm> out;
    out.reserve(s.size());
    for (const auto& t : s.terms()) out.push_back({t.coeff * factor, t.rate});
    return ExponentialSum(std::move(out), s.truncation_tol());
}

ExponentialSum add(const ExponentialSum& a, const ExponentialSum& b) {
    std::vector<ExpTerm> out(a.terms().begin(), a.terms().end());
    out.insert(out.end(), b.terms().begin(), b.terms().end());
    return ExponentialSum(std::move(out), std::max(a.truncation_tol(), b.truncation_tol()));
}

ExponentialSum apply_L(const ExponentialSum& s, const ModelParams& p) {
    // -g f' contributes g r c; -b f contributes -b c; 4b f(2x) moves c to rate 2r.
    std::vector<ExpTerm> out;
    out.reserve(2 * s.size());
    const DoubleDouble g(p.g);
    const DoubleDouble b(p.b);
    for (const auto& t : s.terms()) {
        out.push_back({t.coeff * (g * DoubleDouble(t.rate) - b), t.rate});
        out.push_back({t.coeff * ldexp(b, 2), 2.0 * t.rate});
    }
    return ExponentialSum(std::move(out), s.truncation_tol());
}

DoubleDouble moment_dd(const ExponentialSum& s, int n) {
    if (n < 0) throw ConfigError("moment order must be nonnegative");
    DoubleDouble factorial(1.0);
    for (int j = 2; j <= n; ++j) factorial *= DoubleDouble(static_cast<double>(j));

    std::vector<DoubleDouble> values;
    values.reserve(s.size());
    for (const auto& t : s.terms()) {
        const DoubleDouble r(t.rate);
        DoubleDouble power = r;
        for (int j = 0; j < n; ++j) power *= r;
        values.push_back(t.coeff / power);
    }
    std::sort(values.begin(), values.end(),
              [](const DoubleDouble& a, const DoubleDouble& b) { return std::abs(a.hi) > std::abs(b.hi); });
    DoubleDouble acc;
    for (const auto& v : values) acc += v;
    return factorial * acc;
}

double moment(const ExponentialSum& s, int n) { return moment_dd(s, n).value(); }

}  // namespace mitosis
