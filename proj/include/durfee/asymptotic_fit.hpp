#ifndef DURFEE_ASYMPTOTIC_FIT_HPP
#define DURFEE_ASYMPTOTIC_FIT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "moments.hpp"

namespace durfee {

/// An exponent e = twice / 2 in the basis n^e.
class half_integer {
public:
    constexpr half_integer() = default;
    constexpr explicit half_integer(int twice) : twice_(twice) {}

    static half_integer from_double(double e)
    {
        const double twice = 2.0 * e;
        if (!std::isfinite(twice) || std::abs(twice - std::round(twice)) > 1e-12)
            throw validation_error("exponent " + std::to_string(e) + " is not a half-integer");
        return half_integer(static_cast<int>(std::lround(twice)));
    }

    // Accepts "1/2", "-3/2", "0.5", "-1".
    static half_integer parse(const std::string& text)
    {
        const auto slash = text.find('/');
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                const double v = std::stod(text, &used);
                if (used != text.size())
                    throw validation_error("bad exponent '" + text + "'");
                return from_double(v);
            }
            const int num = std::stoi(text.substr(0, slash), &used);
            if (used != slash)
                throw validation_error("bad exponent '" + text + "'");
            const auto den_text = text.substr(slash + 1);
            const int den = std::stoi(den_text, &used);
            if (used != den_text.size() || (den != 1 && den != 2))
                throw validation_error("bad exponent '" + text + "'");
            return half_integer(den == 1 ? 2 * num : num);
        } catch (const std::logic_error&) {
            throw validation_error("bad exponent '" + text + "'");
        }
    }

    constexpr int twice() const noexcept { return twice_; }
    constexpr double value() const noexcept { return twice_ / 2.0; }

    std::string str() const
    {
        return twice_ % 2 == 0 ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
    }

    friend constexpr auto operator<=>(half_integer, half_integer) = default;

private:
    int twice_ = 0;
};

using basis = std::vector<half_integer>;

inline basis make_basis(std::initializer_list<int> twice)
{
    basis b;
    for (int t : twice)
        b.emplace_back(t);
    return b;
}

// n^{1/2}, n^0, n^{-1/2}, n^{-1}
inline basis default_moment_basis() { return make_basis({1, 0, -1, -2}); }
// n^0, n^{-1/2}, n^{-1}
inline basis default_alpha_basis() { return make_basis({0, -1, -2}); }

inline void validate_basis(const basis& exps)
{
    if (exps.empty())
        throw validation_error("basis must contain at least one exponent");
    for (std::size_t i = 1; i < exps.size(); ++i)
        if (!(exps[i] < exps[i - 1]))
            throw validation_error("basis exponents must be strictly descending");
}

/// sum_e c_e n^e over a descending set of half-integer exponents.
struct asymptotic_model {
    basis exponents;
    std::vector<double> coefficients;

    void validate() const
    {
        validate_basis(exponents);
        if (exponents.size() != coefficients.size())
            throw validation_error("model has " + std::to_string(exponents.size()) +
                                   " exponents but " + std::to_string(coefficients.size()) +
                                   " coefficients");
    }

    double coefficient(half_integer e) const
    {
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] == e)
                return coefficients[i];
        throw misuse_error("exponent " + e.str() + " is not in the model");
    }
};

inline double power_of(double n, half_integer e)
{
    const double root = std::sqrt(n);
    return std::pow(root, e.twice());
}

inline double evaluate_model(const asymptotic_model& model, double n)
{
    model.validate();
    if (!(n >= 1))
        throw validation_error("models are evaluated at n >= 1");
    double s = 0;
    for (std::size_t i = 0; i < model.exponents.size(); ++i)
        s += model.coefficients[i] * power_of(n, model.exponents[i]);
    return s;
}

// Values are carried in extended precision so that exact moments lose as
// little as possible before the solve.
struct sample_point {
    std::size_t n = 0;
    long double value = 0;
};

struct fit_result {
    asymptotic_model model;
    std::vector<std::size_t> sample;
    double residual_rms = 0;
    double max_abs_residual = 0;
};

/// Linear least squares of the samples onto {n^e}.
///
/// Columns are scaled to unit norm and the system is solved by a
/// column-pivoted Householder QR in extended precision; the normal equations
/// would square the condition number of this Vandermonde-like design.
inline fit_result fit_sqrt_series(std::span<const sample_point> samples, const basis& exponents)
{
    using matrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    using vector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

    validate_basis(exponents);
    const auto rows = static_cast<Eigen::Index>(samples.size());
    const auto cols = static_cast<Eigen::Index>(exponents.size());
    if (samples.size() < exponents.size())
        throw arity_error("fit needs at least " + std::to_string(exponents.size()) +
                          " samples, got " + std::to_string(samples.size()));

    std::set<std::size_t> seen;
    for (const auto& s : samples) {
        if (s.n == 0)
            throw validation_error("sample n must be positive");
        if (!std::isfinite(s.value))
            throw validation_error("sample value at n = " + std::to_string(s.n) +
                                   " is not finite");
        if (!seen.insert(s.n).second)
            throw conditioning_error("duplicate sample n = " + std::to_string(s.n) +
                                     " makes the design rank-deficient");
    }

    matrix design(rows, cols);
    vector rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const long double root = std::sqrt(static_cast<long double>(samples[i].n));
        for (Eigen::Index j = 0; j < cols; ++j)
            design(i, j) = std::pow(root, static_cast<long double>(exponents[j].twice()));
        rhs(i) = samples[i].value;
    }

    vector scale(cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        scale(j) = design.col(j).norm();
        design.col(j) /= scale(j);
    }

    Eigen::ColPivHouseholderQR<matrix> qr(design);
    qr.setThreshold(1e-14L);
    if (qr.rank() < cols)
        throw conditioning_error("least-squares design has rank " + std::to_string(qr.rank()) +
                                 " < " + std::to_string(cols));
    const vector solution = qr.solve(rhs);

    fit_result out;
    out.model.exponents = exponents;
    out.model.coefficients.resize(exponents.size());
    for (Eigen::Index j = 0; j < cols; ++j)
        out.model.coefficients[j] = static_cast<double>(solution(j) / scale(j));

    const vector residual = design * solution - rhs;
    long double sum_sq = 0;
    long double worst = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
        sum_sq += residual(i) * residual(i);
        worst = std::max(worst, std::abs(residual(i)));
    }
    out.residual_rms = static_cast<double>(std::sqrt(sum_sq / rows));
    out.max_abs_residual = static_cast<double>(worst);
    out.sample.reserve(samples.size());
    for (const auto& s : samples)
        out.sample.push_back(s.n);
    return out;
}

/// Coefficient of n^0 of a fit with no growing terms: the estimated limit.
inline double limit_estimate(const fit_result& fit)
{
    const auto& exps = fit.model.exponents;
    for (auto e : exps)
        if (e.twice() > 0)
            throw misuse_error("fit has growing term n^" + e.str() + "; it has no finite limit");
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i].twice() == 0)
            return fit.model.coefficients[i];
    throw misuse_error("fit has no constant term");
}

/// Leading variance coefficient over leading mean coefficient.
inline double concentration_ratio(const fit_result& mean_fit, const fit_result& var_fit)
{
    const half_integer sqrt_n(1);
    if (mean_fit.model.exponents.empty() || var_fit.model.exponents.empty() ||
        mean_fit.model.exponents.front() != sqrt_n || var_fit.model.exponents.front() != sqrt_n)
        throw misuse_error("concentration ratio needs fits led by n^1/2");
    return var_fit.model.coefficients.front() / mean_fit.model.coefficients.front();
}

/// sqrt(6) ln 2 / pi, the exact leading constant of the mean.
inline double reference_mean_constant()
{
    return std::sqrt(6.0) * std::numbers::ln2 / std::numbers::pi;
}

/// Absolute PASS/FAIL tolerance for each fitted limit.
///
/// Orders without an explicit entry fall back to fallback_relative times the
/// normal moment (even k) or times the next even normal moment (odd k, whose
/// target is zero).
struct tolerance_set {
    std::map<unsigned, double> absolute;
    double fallback_relative = 0.02;

    static tolerance_set defaults()
    {
        tolerance_set t;
        t.absolute = {{3, 0.05}, {4, 0.02}, {5, 0.3}, {6, 0.2}, {8, 1.5}};
        return t;
    }

    double for_order(unsigned k) const
    {
        if (auto it = absolute.find(k); it != absolute.end())
            return it->second;
        const auto scale = normal_moment(k % 2 == 0 ? k : k + 1);
        return fallback_relative * static_cast<double>(scale);
    }
};

struct normality_entry {
    unsigned k = 0;
    double limit = 0;
    double target = 0;
    double abs_deviation = 0;
    double rel_deviation = 0; // zero for odd k
    double tolerance = 0;
    bool pass = false;
    fit_result fit;
};

struct normality_report {
    std::vector<normality_entry> entries; // k = 3 .. order
    std::vector<std::size_t> sample;
    basis exponents;
    unsigned order = 0;

    bool all_pass() const
    {
        return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
    }

    const normality_entry& at(unsigned k) const
    {
        for (const auto& e : entries)
            if (e.k == k)
                return e;
        throw range_error("report has no order " + std::to_string(k));
    }
};

inline std::vector<sample_point> alpha_samples(std::span<const moment_record> records, unsigned k)
{
    std::vector<sample_point> pts;
    pts.reserve(records.size());
    for (const auto& r : records)
        pts.push_back({r.n, r.alpha(k)});
    return pts;
}

inline normality_report make_normality_report(std::span<const moment_record> records,
                                              unsigned order, const basis& exponents,
                                              const tolerance_set& tolerances = tolerance_set::defaults())
{
    if (order < 3)
        throw validation_error("normality report needs order >= 3");
    validate_basis(exponents);
    if (records.size() < exponents.size())
        throw arity_error("normality report needs at least " + std::to_string(exponents.size()) +
                          " records, got " + std::to_string(records.size()));
    for (const auto& r : records) {
        if (r.n < 4)
            throw validation_error("record for n = " + std::to_string(r.n) +
                                   " has a degenerate law");
        if (r.order < order)
            throw validation_error("record for n = " + std::to_string(r.n) + " stops at order " +
                                   std::to_string(r.order));
    }

    normality_report rep;
    rep.order = order;
    rep.exponents = exponents;
    for (const auto& r : records)
        rep.sample.push_back(r.n);
    for (unsigned k = 3; k <= order; ++k) {
        normality_entry e;
        e.k = k;
        const auto pts = alpha_samples(records, k);
        e.fit = fit_sqrt_series(pts, exponents);
        e.limit = limit_estimate(e.fit);
        e.target = static_cast<double>(normal_moment(k));
        e.abs_deviation = std::abs(e.limit - e.target);
        e.rel_deviation = e.target != 0 ? e.abs_deviation / e.target : 0.0;
        e.tolerance = tolerances.for_order(k);
        e.pass = e.abs_deviation <= e.tolerance;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace durfee

#endif
