#ifndef DURFEE_MOMENTS_HPP
#define DURFEE_MOMENTS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "partition_series.hpp"

namespace durfee {

/// Law of the Durfee size under the uniform distribution on partitions of n.
struct probability_row {
    std::size_t n = 0;
    std::map<std::size_t, rational> probs;
};

inline probability_row pgf_row(const durfee_table& table, std::size_t n)
{
    if (n > table.nmax())
        throw range_error("n = " + std::to_string(n) + " exceeds table nmax = " +
                          std::to_string(table.nmax()));
    const big_int& total = table.total(n);
    if (total <= 0)
        throw validation_error("row " + std::to_string(n) + " has no partitions");
    probability_row row{n, {}};
    for (auto& [k, c] : table.counts(n))
        row.probs.emplace(k, rational(c, total));
    return row;
}

inline rational mean(const probability_row& row)
{
    rational a = 0;
    for (const auto& [k, p] : row.probs)
        a += p * static_cast<unsigned long>(k);
    return a;
}

// sum_j p_j (j - a)^k. This is (t d/dt)^k applied to P_n(t) t^{-a} at t = 1,
// evaluated without ever forming the fractional power.
inline rational central_moment(const probability_row& row, const rational& a, unsigned k)
{
    if (k == 0)
        throw validation_error("central moment order must be positive");
    rational m = 0;
    for (const auto& [j, p] : row.probs) {
        const rational d = rational(static_cast<unsigned long>(j)) - a;
        rational pw = 1;
        for (unsigned i = 0; i < k; ++i)
            pw *= d;
        m += p * pw;
    }
    return m;
}

/// m_k / m_2^{k/2} as a double with relative error below 2^-52.
///
/// Even k is a single exact quotient. Odd k goes through the exact square
/// m_k^2 / m_2^k, whose conversion error is halved by the square root.
inline double standardized_moment(const rational& m2, const rational& mk, unsigned k)
{
    if (m2 <= 0)
        throw degenerate_error("standardized moment undefined: variance is zero");
    if (k == 0)
        throw validation_error("standardized moment order must be positive");
    if (mk == 0)
        return 0.0;
    const unsigned half = k / 2;
    rational m2_pow = 1;
    for (unsigned i = 0; i < half; ++i)
        m2_pow *= m2;
    if (k % 2 == 0)
        return to_double(mk / m2_pow);
    const rational squared = (mk * mk) / (m2_pow * m2_pow * m2);
    const double magnitude = std::sqrt(to_double(squared));
    return mk < 0 ? -magnitude : magnitude;
}

inline constexpr unsigned max_normal_moment_order = 34;

/// k-th moment of the standard normal: 0 for odd k, (k-1)!! for even k.
inline std::uint64_t normal_moment(unsigned k)
{
    if (k == 0)
        throw validation_error("normal moment order must be positive");
    if (k % 2 == 1)
        return 0;
    if (k > max_normal_moment_order)
        throw range_error("normal moment of order " + std::to_string(k) +
                          " does not fit in 64 bits");
    std::uint64_t m = 1;
    for (std::uint64_t j = k - 1; j > 1; j -= 2)
        m *= j;
    return m;
}

struct moment_record {
    std::size_t n = 0;
    unsigned order = 0;
    rational mean;
    std::vector<rational> central;   // m_1 .. m_order
    std::vector<double> standardized; // alpha_3 .. alpha_order

    const rational& m(unsigned k) const { return central.at(k - 1); }
    double alpha(unsigned k) const { return standardized.at(k - 3); }
};

inline moment_record compute_moments(const durfee_table& table, std::size_t n, unsigned order)
{
    if (order < 2)
        throw validation_error("moment order must be at least 2");
    const auto row = pgf_row(table, n);
    moment_record rec;
    rec.n = n;
    rec.order = order;
    rec.mean = mean(row);
    rec.central.reserve(order);
    for (unsigned k = 1; k <= order; ++k)
        rec.central.push_back(central_moment(row, rec.mean, k));
    if (rec.m(2) == 0)
        throw degenerate_error("Durfee size is deterministic for n = " + std::to_string(n) +
                               "; standardized moments are undefined");
    for (unsigned k = 3; k <= order; ++k)
        rec.standardized.push_back(standardized_moment(rec.m(2), rec.m(k), k));
    return rec;
}

inline std::vector<moment_record> moment_sweep(const durfee_table& table,
                                               std::span<const std::size_t> ns, unsigned order)
{
    std::vector<moment_record> out;
    out.reserve(ns.size());
    for (auto n : ns)
        out.push_back(compute_moments(table, n, order));
    return out;
}

} // namespace durfee

#endif
