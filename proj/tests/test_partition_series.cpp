#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include <durfee/partition_series.hpp>

using namespace durfee;

namespace {

// Number of partitions of m into parts <= cap, by direct recursion on the
// largest part. Test-only; shares nothing with the series code.
std::uint64_t count_bounded(std::size_t m, std::size_t cap)
{
    if (m == 0)
        return 1;
    std::uint64_t c = 0;
    for (std::size_t part = std::min(m, cap); part >= 1; --part)
        c += count_bounded(m - part, part);
    return c;
}

// #{(mu, nu) : parts <= k, |mu| + |nu| = m}.
std::uint64_t count_pairs(std::size_t m, std::size_t k)
{
    if (k == 0)
        return m == 0 ? 1 : 0;
    std::uint64_t c = 0;
    for (std::size_t a = 0; a <= m; ++a)
        c += count_bounded(a, k) * count_bounded(m - a, k);
    return c;
}

std::vector<big_int> coeffs_of(const truncated_series<>& s)
{
    return {s.coeffs().begin(), s.coeffs().end()};
}

std::vector<big_int> ints(std::initializer_list<long> v)
{
    std::vector<big_int> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST(InvSquareFactorSeries, EmptyProductIsOne)
{
    const auto s = inv_square_factor_series(0, 3);
    EXPECT_EQ(s.order(), 3u);
    EXPECT_EQ(coeffs_of(s), ints({1, 0, 0, 0}));
}

TEST(InvSquareFactorSeries, SingleFactorIsBinomialSeries)
{
    EXPECT_EQ(coeffs_of(inv_square_factor_series(1, 4)), ints({1, 2, 3, 4, 5}));
}

TEST(InvSquareFactorSeries, CountsPairsOfBoundedPartitions)
{
    // Frozen from count_pairs(m, 2), m = 0..4.
    EXPECT_EQ(coeffs_of(inv_square_factor_series(2, 4)), ints({1, 2, 5, 8, 14}));
    for (std::size_t m = 0; m <= 4; ++m)
        EXPECT_EQ(inv_square_factor_series(2, 4)[m], count_pairs(m, 2)) << "m = " << m;
}

TEST(InvSquareFactorSeries, MatchesBruteForcePairsForSeveralK)
{
    for (std::size_t k = 0; k <= 6; ++k) {
        const auto s = inv_square_factor_series(k, 18);
        ASSERT_EQ(s.coeffs().size(), 19u);
        for (std::size_t m = 0; m <= 18; ++m)
            EXPECT_EQ(s[m], count_pairs(m, k)) << "k = " << k << ", m = " << m;
    }
}

TEST(InvSquareFactorSeries, PositiveCoefficientsForPositiveK)
{
    for (std::size_t k = 1; k <= 12; ++k) {
        const auto s = inv_square_factor_series(k, 200);
        for (const auto& c : s.coeffs())
            EXPECT_GT(c, 0);
    }
}

TEST(InvSquareFactorSeries, FixedWidthCoefficientsAgree)
{
    const auto wide = inv_square_factor_series(5, 60);
    const auto narrow = inv_square_factor_series<std::int64_t>(5, 60);
    for (std::size_t m = 0; m <= 60; ++m)
        EXPECT_EQ(wide[m], narrow[m]);
}

TEST(TruncatedSeries, TruncateOnlyShrinks)
{
    auto s = inv_square_factor_series(1, 10);
    s.truncate(20);
    EXPECT_EQ(s.order(), 10u);
    s.truncate(3);
    EXPECT_EQ(coeffs_of(s), ints({1, 2, 3, 4}));
}

TEST(PartitionNumbers, SmallValues)
{
    EXPECT_EQ(partition_numbers(0), ints({1}));
    EXPECT_EQ(partition_numbers(5), ints({1, 1, 2, 3, 5, 7}));
    EXPECT_EQ(partition_numbers(10).back(), 42);
    for (std::size_t n = 0; n <= 30; ++n)
        EXPECT_EQ(partition_numbers(30)[n], count_bounded(n, n)) << "n = " << n;
}

TEST(PartitionNumbers, LargeValuesFromRademacherSeries)
{
    // Frozen from an independent Hardy-Ramanujan-Rademacher evaluation.
    const auto p = partition_numbers(6400);
    EXPECT_EQ(p[100], big_int("190569292"));
    EXPECT_EQ(p[1000], big_int("24061467864032622473692149727991"));
    EXPECT_EQ(p[6400], big_int("2961289220573735487865399779740561874081799956999864821635708504984"
                               "607831165182799000"));
}

TEST(DurfeeTable, EmptyPartitionRow)
{
    const auto t = make_durfee_table(0);
    EXPECT_EQ(t.nmax(), 0u);
    EXPECT_EQ(t.counts(0), (std::map<std::size_t, big_int>{{0, 1}}));
    EXPECT_EQ(t.total(0), 1);
}

TEST(DurfeeTable, RowFour)
{
    const auto t = make_durfee_table(4);
    EXPECT_EQ(t.counts(4), (std::map<std::size_t, big_int>{{1, 4}, {2, 1}}));
    EXPECT_EQ(t.total(4), 5);
}

TEST(DurfeeTable, TotalAtTen)
{
    EXPECT_EQ(make_durfee_table(10).total(10), 42);
}

TEST(DurfeeTable, RowSumsMatchPentagonalRecurrence)
{
    const std::size_t N = 2500;
    const auto t = make_durfee_table(N);
    const auto p = partition_numbers(N);
    for (std::size_t n = 0; n <= N; ++n)
        ASSERT_EQ(t.total(n), p[n]) << "n = " << n;
}

TEST(DurfeeTable, SupportIsExactlyKSquaredAtMostN)
{
    const auto t = make_durfee_table(400);
    for (std::size_t n = 0; n <= 400; ++n) {
        for (std::size_t k = 0; k <= 21; ++k) {
            const bool expected = (n == 0 && k == 0) || (k >= 1 && k * k <= n);
            EXPECT_EQ(t.count(n, k) > 0, expected) << "n = " << n << ", k = " << k;
        }
    }
}

TEST(DurfeeTable, TruncationConsistency)
{
    const std::vector<std::size_t> orders = {0, 1, 3, 15, 16, 17, 99, 100, 257};
    const auto big = make_durfee_table(257);
    for (auto N : orders) {
        const auto small = make_durfee_table(N);
        for (std::size_t n = 0; n <= N; ++n)
            ASSERT_EQ(small.row(n), big.row(n)) << "N = " << N << ", n = " << n;
    }
}

TEST(DurfeeTable, ColumnsAreShiftedFactorSeries)
{
    const std::size_t N = 300;
    const auto t = make_durfee_table(N);
    for (std::size_t k = 1; k * k <= N; ++k) {
        const auto f = inv_square_factor_series(k, N - k * k);
        for (std::size_t m = 0; m + k * k <= N; ++m)
            ASSERT_EQ(t.count(m + k * k, k), f[m]) << "k = " << k << ", m = " << m;
    }
}

TEST(DurfeeTable, OutOfRangeRowThrows)
{
    const auto t = make_durfee_table(5);
    EXPECT_THROW((void)t.row(6), range_error);
    EXPECT_EQ(t.count(5, 7), 0);
}

TEST(DurfeeTable, RejectsMisshapenRows)
{
    std::vector<durfee_table::row_type> rows = {{1}, {0, 1}, {0, 2, 0}};
    EXPECT_THROW(durfee_table{rows}, validation_error);
    EXPECT_THROW(durfee_table{std::vector<durfee_table::row_type>{}}, validation_error);
}

TEST(DurfeeTable, MemoryEstimateGrows)
{
    EXPECT_GT(estimated_table_bytes(6400), estimated_table_bytes(100));
    EXPECT_LT(estimated_table_bytes(6400), 512.0 * 1024 * 1024);
}

TEST(DurfeeSize, Examples)
{
    EXPECT_EQ(durfee_size(partition({1, 1, 1, 1})), 1u);
    EXPECT_EQ(durfee_size(partition({2, 2})), 2u);
    EXPECT_EQ(durfee_size(partition({3, 3, 3})), 3u);
    EXPECT_EQ(durfee_size(partition()), 0u);
    EXPECT_EQ(durfee_size(partition({5})), 1u);
    EXPECT_EQ(durfee_size(partition({4, 4, 2, 1})), 2u);
}

TEST(DurfeeSize, RejectsMalformedPartitions)
{
    const std::vector<std::size_t> increasing = {1, 2};
    const std::vector<std::size_t> zero_part = {3, 0};
    EXPECT_THROW((void)durfee_size(increasing), validation_error);
    EXPECT_THROW((void)durfee_size(zero_part), validation_error);
    EXPECT_THROW(partition({2, 3}), validation_error);
}

TEST(Partition, Weight)
{
    EXPECT_EQ(partition({3, 2, 2, 1}).weight(), 8u);
    EXPECT_EQ(partition().weight(), 0u);
}
