#ifndef DURFEE_PARTITION_SERIES_HPP
#define DURFEE_PARTITION_SERIES_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"

namespace durfee {

/// Dense power series in q truncated after q^order.
///
/// The coefficient type only needs value-initialisation to zero, `+=` and
/// construction from an int, so the same code serves the arbitrary-precision
/// pipeline and small fixed-width checks.
template <typename Coeff = big_int>
class truncated_series {
public:
    explicit truncated_series(std::size_t order) : coeffs_(order + 1) {}

    static truncated_series one(std::size_t order)
    {
        truncated_series s(order);
        s.coeffs_[0] = Coeff(1);
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Coeff& operator[](std::size_t j) const { return coeffs_[j]; }
    Coeff& operator[](std::size_t j) { return coeffs_[j]; }

    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

    // Multiplies in 1/(1 - q^stride) = 1 + q^stride + q^(2 stride) + ...,
    // which is a prefix sum along each residue class mod stride.
    void multiply_geometric(std::size_t stride)
    {
        for (std::size_t m = stride; m < coeffs_.size(); ++m)
            coeffs_[m] += coeffs_[m - stride];
    }

    // Drops every coefficient above q^order.
    void truncate(std::size_t order)
    {
        if (order < this->order())
            coeffs_.resize(order + 1);
    }

    friend bool operator==(const truncated_series&, const truncated_series&) = default;

private:
    std::vector<Coeff> coeffs_;
};

/// prod_{j=1}^{k} (1 - q^j)^{-2} up to q^order. The coefficient of q^m counts
/// ordered pairs of partitions with parts at most k and total size m.
template <typename Coeff = big_int>
truncated_series<Coeff> inv_square_factor_series(std::size_t k, std::size_t order)
{
    auto s = truncated_series<Coeff>::one(order);
    for (std::size_t j = 1; j <= k && j <= order; ++j) {
        s.multiply_geometric(j);
        s.multiply_geometric(j);
    }
    return s;
}

/// Number of partitions of n with Durfee square of side k, for all n <= nmax.
///
/// Row n is stored densely over k in [0, isqrt(n)]; d(n, 0) is zero except
/// for the empty partition.
class durfee_table {
public:
    using row_type = std::vector<big_int>;

    durfee_table() : durfee_table(std::vector<row_type>{row_type{big_int(1)}}) {}

    // Takes ownership of precomputed rows; row n must have isqrt(n) + 1
    // entries. Used by the builder and by fault-injection tests.
    explicit durfee_table(std::vector<row_type> rows) : rows_(std::move(rows))
    {
        if (rows_.empty())
            throw validation_error("durfee table needs at least row 0");
        totals_.reserve(rows_.size());
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            if (rows_[n].size() != isqrt(n) + 1)
                throw validation_error("durfee table row " + std::to_string(n) +
                                       " has the wrong width");
            big_int sum = 0;
            for (const auto& c : rows_[n])
                sum += c;
            totals_.push_back(std::move(sum));
        }
    }

    std::size_t nmax() const noexcept { return rows_.size() - 1; }

    const row_type& row(std::size_t n) const
    {
        check_range(n);
        return rows_[n];
    }

    big_int count(std::size_t n, std::size_t k) const
    {
        const auto& r = row(n);
        return k < r.size() ? r[k] : big_int(0);
    }

    // Sparse view: only the nonzero d(n, k).
    std::map<std::size_t, big_int> counts(std::size_t n) const
    {
        std::map<std::size_t, big_int> out;
        const auto& r = row(n);
        for (std::size_t k = 0; k < r.size(); ++k)
            if (r[k] != 0)
                out.emplace(k, r[k]);
        return out;
    }

    const big_int& total(std::size_t n) const
    {
        check_range(n);
        return totals_[n];
    }

    std::span<const big_int> totals() const noexcept { return totals_; }

private:
    void check_range(std::size_t n) const
    {
        if (n >= rows_.size())
            throw range_error("n = " + std::to_string(n) + " is outside the table (nmax = " +
                              std::to_string(nmax()) + ")");
    }

    std::vector<row_type> rows_;
    std::vector<big_int> totals_;
};

/// Expands sum_k q^{k^2} t^k / prod_{j<=k} (1 - q^j)^2 up to q^nmax.
///
/// Terms with k^2 > nmax cannot contribute, so k stops at isqrt(nmax). The
/// factor series is updated in place from k - 1 to k and shrunk to the order
/// still needed (nmax - k^2), which keeps the total work at O(nmax^{3/2}).
inline durfee_table make_durfee_table(std::size_t nmax)
{
    std::vector<durfee_table::row_type> rows(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n)
        rows[n].resize(isqrt(n) + 1);

    rows[0][0] = 1;
    auto factor = truncated_series<>::one(nmax);
    const std::size_t kmax = isqrt(nmax);
    for (std::size_t k = 1; k <= kmax; ++k) {
        const std::size_t shift = k * k;
        factor.truncate(nmax - shift);
        factor.multiply_geometric(k);
        factor.multiply_geometric(k);
        for (std::size_t m = 0; m + shift <= nmax; ++m)
            rows[m + shift][k] = factor[m];
    }
    return durfee_table(std::move(rows));
}

/// p(0..nmax) from Euler's pentagonal-number recurrence.
inline std::vector<big_int> partition_numbers(std::size_t nmax)
{
    std::vector<big_int> p(nmax + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= nmax; ++n) {
        big_int acc = 0;
        for (std::size_t j = 1;; ++j) {
            const std::size_t g1 = j * (3 * j - 1) / 2;
            if (g1 > n)
                break;
            const std::size_t g2 = j * (3 * j + 1) / 2;
            big_int term = p[n - g1];
            if (g2 <= n)
                term += p[n - g2];
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[n] = std::move(acc);
    }
    return p;
}

/// Rough upper estimate of the heap used by make_durfee_table(nmax), based on
/// log2 p(n) <= pi sqrt(2n/3) / ln 2.
inline double estimated_table_bytes(std::size_t nmax)
{
    constexpr double per_entry_overhead = sizeof(big_int) + 16.0;
    double bytes = 0;
    for (std::size_t n = 0; n <= nmax; ++n) {
        const double bits = std::numbers::pi * std::sqrt(2.0 * static_cast<double>(n) / 3.0) /
                            std::numbers::ln2;
        const double limb_bytes = 8.0 * std::ceil((bits + 1.0) / 64.0);
        bytes += static_cast<double>(isqrt(n) + 1) * (per_entry_overhead + limb_bytes);
    }
    return bytes;
}

/// A partition lambda_1 >= ... >= lambda_m >= 1. The empty partition is valid.
class partition {
public:
    partition() = default;

    explicit partition(std::vector<std::size_t> parts) : parts_(std::move(parts))
    {
        validate(parts_);
    }

    std::span<const std::size_t> parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }

    std::size_t weight() const noexcept
    {
        std::size_t s = 0;
        for (auto p : parts_)
            s += p;
        return s;
    }

    static void validate(std::span<const std::size_t> parts)
    {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] == 0)
                throw validation_error("partition has a zero part at position " +
                                       std::to_string(i + 1));
            if (i > 0 && parts[i] > parts[i - 1])
                throw validation_error("partition parts increase at position " +
                                       std::to_string(i + 1));
        }
    }

    friend bool operator==(const partition&, const partition&) = default;

private:
    std::vector<std::size_t> parts_;
};

/// Side of the Durfee square (the h-index): the largest i with lambda_i >= i.
inline std::size_t durfee_size(std::span<const std::size_t> parts)
{
    partition::validate(parts);
    std::size_t h = 0;
    while (h < parts.size() && parts[h] >= h + 1)
        ++h;
    return h;
}

inline std::size_t durfee_size(const partition& lambda)
{
    return durfee_size(lambda.parts());
}

} // namespace durfee

#endif
