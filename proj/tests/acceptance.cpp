// End-to-end acceptance run. Prints one PASS/FAIL line per criterion (with
// the measured values) and exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include <durfee/asymptotic_fit.hpp>
#include <durfee/moments.hpp>
#include <durfee/oracle.hpp>
#include <durfee/partition_series.hpp>

using namespace durfee;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start)
{
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

class scoreboard {
public:
    void record(const std::string& id, bool pass, const std::string& detail)
    {
        std::printf("[%s] %-4s %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
        std::fflush(stdout);
        failures_ += pass ? 0 : 1;
        ++total_;
    }

    int finish() const
    {
        std::printf("%d/%d criteria passed\n", total_ - failures_, total_);
        return failures_ == 0 ? 0 : 1;
    }

private:
    int failures_ = 0;
    int total_ = 0;
};

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

// Model value in extended precision, computed independently of evaluate_model.
long double exact_value(const asymptotic_model& m, std::size_t n)
{
    const long double root = std::sqrt(static_cast<long double>(n));
    long double s = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        s += static_cast<long double>(m.coefficients[i]) *
             std::pow(root, static_cast<long double>(m.exponents[i].twice()));
    return s;
}

std::vector<std::size_t> default_sample()
{
    std::vector<std::size_t> ns;
    for (std::size_t i = 40; i <= 80; ++i)
        ns.push_back(i * i);
    return ns;
}

} // namespace

int main()
{
    scoreboard board;

    // 1. Oracle equivalence up to 40.
    {
        const auto start = clock_type::now();
        const auto table = make_durfee_table(40);
        bool equal = true;
        std::size_t bad_n = 0;
        for (std::size_t n = 0; n <= 40 && equal; ++n) {
            const auto brute = brute_durfee_histogram(n);
            std::map<std::size_t, big_int> expected;
            for (const auto& [k, c] : brute.counts)
                expected.emplace(k, big_int(c));
            if (expected != table.counts(n)) {
                equal = false;
                bad_n = n;
            }
        }
        const double t = seconds_since(start);
        board.record("1", equal && t <= 30.0,
                     fmt::format("brute-force histograms equal table rows for n <= 40{} ({:.3f} s, limit 30 s)",
                                 equal ? "" : fmt::format(" -- mismatch at n = {}", bad_n), t));
    }

    // 2. Partition identity up to 6400.
    const auto build_start = clock_type::now();
    const auto table = make_durfee_table(6400);
    const double build_seconds = seconds_since(build_start);
    {
        const auto p = partition_numbers(6400);
        std::size_t first_bad = 0;
        bool ok = true;
        for (std::size_t n = 0; n <= 6400; ++n)
            if (table.total(n) != p[n]) {
                ok = false;
                first_bad = n;
                break;
            }
        const bool spots = p[10] == 42 && p[5] == 7 && brute_durfee_histogram(10).total == 42 &&
                           brute_durfee_histogram(5).total == 7;
        board.record("2", ok && spots && build_seconds <= 300.0,
                     fmt::format("sum_k d(n,k) = p(n) for all n <= 6400{}; p(10) = {}, p(5) = {}; "
                                 "table build {:.3f} s (limit 300 s)",
                                 ok ? "" : fmt::format(" -- first mismatch n = {}", first_bad),
                                 p[10].str(), p[5].str(), build_seconds));
    }

    const auto ns = default_sample();
    const auto records = moment_sweep(table, ns, 12);
    std::vector<sample_point> mean_pts;
    std::vector<sample_point> var_pts;
    for (const auto& r : records) {
        mean_pts.push_back({r.n, to_long_double(r.mean)});
        var_pts.push_back({r.n, to_long_double(r.m(2))});
    }
    const auto mean_fit = fit_sqrt_series(mean_pts, default_moment_basis());
    const auto var_fit = fit_sqrt_series(var_pts, default_moment_basis());

    // 3. Mean constant.
    {
        const double lead = mean_fit.model.coefficient(half_integer(1));
        const double constant = mean_fit.model.coefficient(half_integer(0));
        const double reference = reference_mean_constant();
        const bool ok = within(lead, 0.5404446395, 2e-3) && within(lead, reference, 2e-3) &&
                        within(constant, 0.085691, 2e-2);
        board.record("3", ok,
                     fmt::format("a_n ~ {:.10f} sqrt(n) + {:.6f}; |lead - 0.5404446395| = {:.2e}, "
                                 "|lead - sqrt(6) ln2/pi| = {:.2e} (tol 2e-3); |const - 0.085691| = {:.2e} (tol 2e-2)",
                                 lead, constant, std::abs(lead - 0.5404446395),
                                 std::abs(lead - reference), std::abs(constant - 0.085691)));
    }

    // 4. Variance constant.
    {
        const double lead = var_fit.model.coefficient(half_integer(1));
        board.record("4", within(lead, 0.081057, 2e-3),
                     fmt::format("m_2(n) ~ {:.8f} sqrt(n); |lead - 0.081057| = {:.2e} (tol 2e-3)", lead,
                                 std::abs(lead - 0.081057)));
    }

    const auto report = make_normality_report(records, 12, default_alpha_basis());

    // 5. Even standardized-moment limits.
    {
        const auto& e4 = report.at(4);
        board.record("5a", e4.abs_deviation <= 0.02,
                     fmt::format("beta_4 = {:.8f}, |beta_4 - 3| = {:.2e} (tol 0.02)", e4.limit,
                                 e4.abs_deviation));
        const double slope = e4.fit.model.coefficient(half_integer(-1));
        board.record("5b", within(slope, -0.0848, 0.05),
                     fmt::format("alpha_4 coefficient of 1/sqrt(n) = {:.6f}, target -0.0848 (tol 0.05)",
                                 slope));
        const auto& e6 = report.at(6);
        board.record("5c", e6.abs_deviation <= 0.2,
                     fmt::format("beta_6 = {:.6f}, |beta_6 - 15| = {:.2e} (tol 0.2)", e6.limit,
                                 e6.abs_deviation));
        const auto& e8 = report.at(8);
        board.record("5d", e8.abs_deviation <= 1.5,
                     fmt::format("beta_8 = {:.6f}, |beta_8 - 105| = {:.2e} (tol 1.5)", e8.limit,
                                 e8.abs_deviation));
        const auto& e10 = report.at(10);
        board.record("5e", e10.abs_deviation <= 945 * 0.02,
                     fmt::format("beta_10 = {:.5f}, |beta_10 - 945| = {:.3e} (tol {:.1f})", e10.limit,
                                 e10.abs_deviation, 945 * 0.02));
        const auto& e12 = report.at(12);
        board.record("5f", e12.abs_deviation <= 10395 * 0.02,
                     fmt::format("beta_12 = {:.4f}, |beta_12 - 10395| = {:.3e} (tol {:.1f})", e12.limit,
                                 e12.abs_deviation, 10395 * 0.02));
    }

    // 6. Odd limits.
    {
        const double b3 = report.at(3).limit;
        const double b5 = report.at(5).limit;
        board.record("6", std::abs(b3) <= 0.05 && std::abs(b5) <= 0.3,
                     fmt::format("beta_3 = {:.6f} (tol 0.05), beta_5 = {:.6f} (tol 0.3)", b3, b5));
    }

    // 7. Concentration ratio.
    {
        const double ratio = concentration_ratio(mean_fit, var_fit);
        board.record("7", within(ratio, 0.1501, 0.005),
                     fmt::format("variance/mean leading ratio = {:.6f}, target 0.1501 (tol 0.005)", ratio));
    }

    // 8. Desk-scale exact spot checks.
    {
        const auto small = make_durfee_table(4);
        const bool counts = small.counts(4) == std::map<std::size_t, big_int>{{1, 4}, {2, 1}};
        const auto rec = compute_moments(small, 4, 4);
        const bool exact = rec.mean == rational(6, 5) && rec.m(2) == rational(4, 25);
        const bool alpha = rec.alpha(4) == 3.25;
        const auto brute = brute_durfee_histogram(4);
        const bool brute_ok = brute.counts == std::map<std::size_t, std::uint64_t>{{1, 4}, {2, 1}};
        board.record("8", counts && exact && alpha && brute_ok,
                     fmt::format("counts[4] = {{1:4, 2:1}}, mean(4) = {}, m_2(4) = {}, alpha_4(4) = {}",
                                 to_fraction(rec.mean), to_fraction(rec.m(2)), rec.alpha(4)));
    }

    // 9. Property suite.
    {
        std::mt19937_64 rng(6400);
        std::uniform_real_distribution<double> coef(-5.0, 5.0);
        double worst = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto b = trial % 2 == 0 ? default_moment_basis() : default_alpha_basis();
            asymptotic_model truth{b, {}};
            for (std::size_t i = 0; i < b.size(); ++i) {
                double c = coef(rng);
                truth.coefficients.push_back(std::abs(c) < 0.1 ? c + 1.0 : c);
            }
            std::vector<sample_point> pts;
            for (auto n : ns)
                pts.push_back({n, exact_value(truth, n)});
            const auto fit = fit_sqrt_series(pts, b);
            for (std::size_t i = 0; i < b.size(); ++i)
                worst = std::max(worst, std::abs(fit.model.coefficients[i] - truth.coefficients[i]) /
                                            std::abs(truth.coefficients[i]));
        }
        board.record("9a", worst <= 1e-10,
                     fmt::format("exact recovery of 100 synthetic models: worst relative error {:.2e} (tol 1e-10)",
                                 worst));

        bool consistent = true;
        for (std::size_t N : {0u, 1u, 4u, 99u, 100u, 1000u, 4097u}) {
            const auto t = make_durfee_table(N);
            for (std::size_t n = 0; n <= N && consistent; ++n)
                consistent = t.row(n) == table.row(n);
        }
        board.record("9b", consistent, "tables for nmax in {0,1,4,99,100,1000,4097} agree with nmax = 6400");

        bool normalized = true;
        bool centered = true;
        std::size_t bad = 0;
        for (std::size_t n = 0; n <= 6400; ++n) {
            const auto row = pgf_row(table, n);
            rational total = 0;
            for (const auto& [k, p] : row.probs)
                total += p;
            if (total != 1) {
                normalized = false;
                bad = n;
            }
            if (central_moment(row, mean(row), 1) != 0) {
                centered = false;
                bad = n;
            }
        }
        for (const auto& r : records)
            centered = centered && r.m(1) == 0;
        board.record("9c", normalized,
                     fmt::format("sum_k p(n,k) = 1 exactly for all n <= 6400{}", normalized ? "" : fmt::format(" -- fails at {}", bad)));
        board.record("9d", centered,
                     fmt::format("m_1(n) = 0 exactly for all n <= 6400{}", centered ? "" : fmt::format(" -- fails at {}", bad)));
    }

    return board.finish();
}
