#ifndef DURFEE_ORACLE_HPP
#define DURFEE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition_series.hpp"

namespace durfee {

struct oracle_options {
    std::size_t safety_bound = 60;
    bool allow_large = false;

    void admit(std::size_t n) const
    {
        if (n > safety_bound && !allow_large)
            throw refusal_error("brute-force enumeration of n = " + std::to_string(n) +
                                " exceeds the safety bound " + std::to_string(safety_bound) +
                                "; pass an explicit override to proceed");
    }
};

/// All partitions of n in reverse-lexicographic order, starting from (n) and
/// ending with (1, ..., 1). n = 0 yields the empty partition once.
class partition_stream {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const partition*;
        using reference = const partition&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator& operator++()
        {
            advance();
            return *this;
        }

        void operator++(int) { advance(); }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class partition_stream;

        explicit iterator(std::size_t n)
        {
            parts_.clear();
            if (n > 0)
                parts_.push_back(n);
            current_ = partition(parts_);
        }

        void advance()
        {
            // Rightmost part larger than one; everything after it is a 1.
            std::size_t i = parts_.size();
            while (i > 0 && parts_[i - 1] == 1)
                --i;
            if (i == 0) {
                done_ = true;
                return;
            }
            --i;
            std::size_t rest = parts_.size() - i; // trailing ones plus the unit taken off
            const std::size_t cap = --parts_[i];
            parts_.resize(i + 1);
            while (rest > cap) {
                parts_.push_back(cap);
                rest -= cap;
            }
            if (rest > 0)
                parts_.push_back(rest);
            current_ = partition(parts_);
        }

        std::vector<std::size_t> parts_;
        partition current_;
        bool done_ = false;
    };

    explicit partition_stream(std::size_t n) : n_(n) {}

    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const { return {}; }

private:
    std::size_t n_;
};

inline partition_stream enumerate_partitions(std::size_t n, const oracle_options& opts = {})
{
    opts.admit(n);
    return partition_stream(n);
}

struct brute_histogram {
    std::size_t n = 0;
    std::map<std::size_t, std::uint64_t> counts;
    std::uint64_t total = 0;
};

inline brute_histogram brute_durfee_histogram(std::size_t n, const oracle_options& opts = {})
{
    brute_histogram h;
    h.n = n;
    for (const auto& lambda : enumerate_partitions(n, opts)) {
        ++h.counts[durfee_size(lambda)];
        ++h.total;
    }
    return h;
}

struct oracle_mismatch {
    std::size_t n = 0;
    std::size_t k = 0; // unused when what == total
    enum class kind { count, total } what = kind::count;
    std::string expected; // brute force / pentagonal recurrence
    std::string actual;   // table
};

struct cross_check_report {
    std::size_t upto = 0;
    std::optional<oracle_mismatch> mismatch;

    bool ok() const noexcept { return !mismatch.has_value(); }
};

/// Compares rows 0..upto of `table` against brute force and p(n).
inline cross_check_report cross_check(const durfee_table& table, std::size_t upto,
                                      const oracle_options& opts = {})
{
    opts.admit(upto);
    if (upto > table.nmax())
        throw range_error("cross check up to " + std::to_string(upto) +
                          " needs a table of at least that order");
    const auto p = partition_numbers(upto);
    cross_check_report rep{upto, std::nullopt};
    for (std::size_t n = 0; n <= upto; ++n) {
        const auto brute = brute_durfee_histogram(n, opts);
        const auto& row = table.row(n);
        for (std::size_t k = 0; k < row.size() || brute.counts.contains(k); ++k) {
            const big_int expected = brute.counts.contains(k) ? big_int(brute.counts.at(k)) : big_int(0);
            const big_int actual = k < row.size() ? row[k] : big_int(0);
            if (expected != actual) {
                rep.mismatch = oracle_mismatch{n, k, oracle_mismatch::kind::count,
                                               expected.str(), actual.str()};
                return rep;
            }
        }
        if (table.total(n) != p[n]) {
            rep.mismatch = oracle_mismatch{n, 0, oracle_mismatch::kind::total, p[n].str(),
                                           table.total(n).str()};
            return rep;
        }
    }
    return rep;
}

inline cross_check_report cross_check(std::size_t upto, const oracle_options& opts = {})
{
    opts.admit(upto);
    return cross_check(make_durfee_table(upto), upto, opts);
}

} // namespace durfee

#endif
