#ifndef DURFEE_TOOLS_CLI_HPP
#define DURFEE_TOOLS_CLI_HPP

// Command-line driver. Kept in a header so the tests can run commands
// in-process against string streams.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include <durfee/asymptotic_fit.hpp>
#include <durfee/moments.hpp>
#include <durfee/oracle.hpp>
#include <durfee/partition_series.hpp>

namespace durfee::cli {

enum exit_code : int { ok = 0, fail = 1, usage = 2, resource = 3 };

enum class output_format { csv, json };

/// n = i^2 for i in [first, last].
struct squares_range {
    std::size_t first = 40;
    std::size_t last = 80;
};

using sample_spec = std::variant<squares_range, std::vector<std::size_t>>;

inline std::size_t parse_size(const std::string& text, const std::string& what)
{
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        if (text.empty() || text.front() == '-' || text.front() == '+')
            throw std::invalid_argument(text);
        v = std::stoull(text, &used);
    } catch (const std::logic_error&) {
        throw validation_error("bad " + what + " '" + text + "'");
    }
    if (used != text.size())
        throw validation_error("bad " + what + " '" + text + "'");
    return static_cast<std::size_t>(v);
}

inline std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        out.push_back(item);
    if (!text.empty() && text.back() == sep)
        out.emplace_back();
    return out;
}

// "squares:40..80" or "1600,1681,1764".
inline sample_spec parse_sample(const std::string& text)
{
    const std::string prefix = "squares:";
    if (text.rfind(prefix, 0) == 0) {
        const auto body = text.substr(prefix.size());
        const auto dots = body.find("..");
        if (dots == std::string::npos)
            throw validation_error("sample '" + text + "' must look like squares:MIN..MAX");
        squares_range r{parse_size(body.substr(0, dots), "sample bound"),
                        parse_size(body.substr(dots + 2), "sample bound")};
        if (r.first > r.last)
            throw validation_error("sample '" + text + "' is empty");
        if (r.first * r.first < 4)
            throw validation_error("sample '" + text + "' starts below n = 4");
        return r;
    }
    std::vector<std::size_t> ns;
    if (!text.empty())
        for (const auto& item : split(text, ','))
            ns.push_back(parse_size(item, "sample entry"));
    return ns;
}

inline std::vector<std::size_t> expand_sample(const sample_spec& spec)
{
    if (const auto* r = std::get_if<squares_range>(&spec)) {
        std::vector<std::size_t> ns;
        for (std::size_t i = r->first; i <= r->last; ++i)
            ns.push_back(i * i);
        return ns;
    }
    return std::get<std::vector<std::size_t>>(spec);
}

inline std::string describe(const sample_spec& spec)
{
    if (const auto* r = std::get_if<squares_range>(&spec))
        return "squares:" + std::to_string(r->first) + ".." + std::to_string(r->last);
    std::string s;
    for (auto n : std::get<std::vector<std::size_t>>(spec))
        s += (s.empty() ? "" : ",") + std::to_string(n);
    return s;
}

inline basis parse_basis(const std::string& text)
{
    basis b;
    for (const auto& item : split(text, ','))
        b.push_back(half_integer::parse(item));
    validate_basis(b);
    return b;
}

/// Reads {"absolute": {"4": 0.02, ...}, "fallback_relative": 0.02}. Entries
/// present in the file override the defaults; the rest are kept.
inline tolerance_set load_tolerances(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw validation_error("cannot open tolerance file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("tolerance file '" + path + "': " + e.what());
    }
    auto tol = tolerance_set::defaults();
    try {
        if (doc.contains("absolute"))
            for (auto& [key, value] : doc.at("absolute").items())
                tol.absolute[static_cast<unsigned>(parse_size(key, "tolerance order"))] =
                    value.get<double>();
        if (doc.contains("fallback_relative"))
            tol.fallback_relative = doc.at("fallback_relative").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("tolerance file '" + path + "': " + e.what());
    }
    for (const auto& [k, v] : tol.absolute)
        if (!(v >= 0))
            throw validation_error("tolerance for order " + std::to_string(k) + " is negative");
    if (!(tol.fallback_relative >= 0))
        throw validation_error("fallback_relative tolerance is negative");
    return tol;
}

struct run_config {
    std::size_t nmax = 6400;
    bool nmax_given = false;
    unsigned moment_order = 12;
    sample_spec sample = squares_range{};
    basis moment_basis = default_moment_basis();
    basis alpha_basis = default_alpha_basis();
    double precision = 0x1p-50;
    output_format format = output_format::csv;
    std::optional<std::string> out;
    bool squares_only = false;
    bool normalized = false;
    tolerance_set tolerances = tolerance_set::defaults();
    bool allow_large_oracle = false;
    bool header = true;
    std::size_t upto = 40;
    std::size_t min_fit_n = 1600;
    double memory_budget = 4.0 * 1024 * 1024 * 1024;
};

inline std::string fmt_float(double x) { return fmt::format("{:.17g}", x); }

inline std::string timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class command_runner {
public:
    command_runner(run_config cfg, std::ostream& out) : cfg_(std::move(cfg)), out_(out) {}

    int table()
    {
        const auto t = build_table(cfg_.nmax);
        const bool csv = cfg_.format == output_format::csv;
        if (csv) {
            csv_preamble();
            out_ << (cfg_.normalized ? "n,k,probability\n" : "n,k,count\n");
        } else {
            json_open("table");
            out_ << ",\"nmax\":" << cfg_.nmax << ",\"normalized\":" << (cfg_.normalized ? "true" : "false")
                 << ",\"squares_only\":" << (cfg_.squares_only ? "true" : "false") << ",\"rows\":[";
        }
        bool first = true;
        for (std::size_t n = 0; n <= t.nmax(); ++n) {
            if (cfg_.squares_only && (n == 0 || isqrt(n) * isqrt(n) != n))
                continue;
            const auto counts = t.counts(n);
            if (csv) {
                for (const auto& [k, c] : counts) {
                    out_ << n << ',' << k << ',';
                    if (cfg_.normalized)
                        out_ << to_fraction(rational(c, t.total(n)));
                    else
                        out_ << to_decimal(c);
                    out_ << '\n';
                }
                continue;
            }
            nlohmann::ordered_json row;
            row["n"] = n;
            row["total"] = to_decimal(t.total(n));
            auto& cells = row[cfg_.normalized ? "probabilities" : "counts"];
            cells = nlohmann::ordered_json::object();
            for (const auto& [k, c] : counts)
                cells[std::to_string(k)] = cfg_.normalized ? to_fraction(rational(c, t.total(n)))
                                                           : to_decimal(c);
            out_ << (first ? "" : ",") << row.dump();
            first = false;
        }
        if (!csv)
            out_ << "]}\n";
        return ok;
    }

    int moments()
    {
        const auto ns = sample_for_moments();
        const auto t = build_table(table_order(ns));
        const unsigned K = cfg_.moment_order;
        const bool csv = cfg_.format == output_format::csv;
        if (csv) {
            csv_preamble();
            out_ << "n,mean_exact,mean";
            for (unsigned k = 2; k <= K; ++k)
                out_ << ",m" << k;
            for (unsigned k = 3; k <= K; ++k)
                out_ << ",alpha" << k;
            out_ << '\n';
        } else {
            json_open("moments");
            out_ << ",\"order\":" << K << ",\"sample\":" << nlohmann::json(describe(cfg_.sample)).dump()
                 << ",\"records\":[";
        }
        bool first = true;
        for (auto n : ns) {
            const auto rec = compute_moments(t, n, K);
            if (csv) {
                out_ << n << ',' << to_fraction(rec.mean) << ',' << fmt_float(to_double(rec.mean));
                for (unsigned k = 2; k <= K; ++k)
                    out_ << ',' << fmt_float(to_double(rec.m(k)));
                for (unsigned k = 3; k <= K; ++k)
                    out_ << ',' << fmt_float(rec.alpha(k));
                out_ << '\n';
                continue;
            }
            nlohmann::ordered_json row;
            row["n"] = n;
            row["mean_exact"] = to_fraction(rec.mean);
            row["mean"] = to_double(rec.mean);
            auto& central = row["central"];
            central = nlohmann::ordered_json::object();
            for (unsigned k = 2; k <= K; ++k)
                central[std::to_string(k)] = to_double(rec.m(k));
            auto& alpha = row["standardized"];
            alpha = nlohmann::ordered_json::object();
            for (unsigned k = 3; k <= K; ++k)
                alpha[std::to_string(k)] = rec.alpha(k);
            out_ << (first ? "" : ",") << row.dump();
            first = false;
        }
        if (!csv)
            out_ << "]}\n";
        return ok;
    }

    int fit()
    {
        const auto records = fit_records();
        std::vector<sample_point> mean_pts;
        std::vector<sample_point> var_pts;
        for (const auto& r : records) {
            mean_pts.push_back({r.n, to_long_double(r.mean)});
            var_pts.push_back({r.n, to_long_double(r.m(2))});
        }
        std::vector<std::pair<std::string, fit_result>> fits;
        fits.emplace_back("mean", fit_sqrt_series(mean_pts, cfg_.moment_basis));
        fits.emplace_back("m2", fit_sqrt_series(var_pts, cfg_.moment_basis));
        for (unsigned k = 3; k <= cfg_.moment_order; ++k)
            fits.emplace_back("alpha" + std::to_string(k),
                              fit_sqrt_series(alpha_samples(records, k), cfg_.alpha_basis));

        std::optional<double> ratio;
        const auto& mean_fit = fits[0].second;
        const auto& var_fit = fits[1].second;
        if (mean_fit.model.exponents.front() == half_integer(1) &&
            var_fit.model.exponents.front() == half_integer(1))
            ratio = concentration_ratio(mean_fit, var_fit);
        const double reference = reference_mean_constant();

        if (cfg_.format == output_format::csv) {
            csv_preamble();
            out_ << "target,exponent,coefficient,residual_rms,max_abs_residual,samples\n";
            for (const auto& [name, f] : fits)
                for (std::size_t i = 0; i < f.model.exponents.size(); ++i)
                    out_ << name << ',' << f.model.exponents[i].str() << ','
                         << fmt_float(f.model.coefficients[i]) << ',' << fmt_float(f.residual_rms)
                         << ',' << fmt_float(f.max_abs_residual) << ',' << f.sample.size() << '\n';
            out_ << "reference_mean_constant,," << fmt_float(reference) << ",,,\n";
            if (ratio)
                out_ << "concentration_ratio,," << fmt_float(*ratio) << ",,,\n";
            return ok;
        }
        json_open("fit");
        nlohmann::ordered_json body;
        body["sample"] = records_n(records);
        body["fits"] = nlohmann::ordered_json::array();
        for (const auto& [name, f] : fits)
            body["fits"].push_back(fit_json(name, f));
        body["reference_mean_constant"] = reference;
        body["concentration_ratio"] = ratio ? nlohmann::ordered_json(*ratio) : nlohmann::ordered_json();
        json_splice(body);
        return ok;
    }

    int check()
    {
        oracle_options opts;
        opts.allow_large = cfg_.allow_large_oracle;
        opts.admit(cfg_.upto);
        const auto rep = cross_check(cfg_.upto, opts);
        if (cfg_.format == output_format::csv) {
            csv_preamble();
            out_ << "upto,status,n,k,kind,expected,actual\n" << rep.upto << ',';
            if (rep.ok())
                out_ << "PASS,,,,,\n";
            else
                out_ << "FAIL," << rep.mismatch->n << ',' << rep.mismatch->k << ','
                     << kind_name(*rep.mismatch) << ',' << rep.mismatch->expected << ','
                     << rep.mismatch->actual << '\n';
        } else {
            json_open("check");
            nlohmann::ordered_json body;
            body["upto"] = rep.upto;
            body["status"] = rep.ok() ? "PASS" : "FAIL";
            if (!rep.ok())
                body["mismatch"] = {{"n", rep.mismatch->n},
                                    {"k", rep.mismatch->k},
                                    {"kind", kind_name(*rep.mismatch)},
                                    {"expected", rep.mismatch->expected},
                                    {"actual", rep.mismatch->actual}};
            json_splice(body);
        }
        return rep.ok() ? ok : fail;
    }

    int report()
    {
        const auto records = fit_records();
        const auto rep = make_normality_report(records, cfg_.moment_order, cfg_.alpha_basis,
                                               cfg_.tolerances);
        if (cfg_.format == output_format::csv) {
            csv_preamble();
            out_ << "k,limit,target,abs_deviation,rel_deviation,tolerance,status\n";
            for (const auto& e : rep.entries)
                out_ << e.k << ',' << fmt_float(e.limit) << ',' << fmt_float(e.target) << ','
                     << fmt_float(e.abs_deviation) << ',' << fmt_float(e.rel_deviation) << ','
                     << fmt_float(e.tolerance) << ',' << (e.pass ? "PASS" : "FAIL") << '\n';
            out_ << "\nn";
            for (unsigned k = 3; k <= rep.order; ++k)
                out_ << ",alpha" << k;
            out_ << '\n';
            for (const auto& r : records) {
                out_ << r.n;
                for (unsigned k = 3; k <= rep.order; ++k)
                    out_ << ',' << fmt_float(r.alpha(k));
                out_ << '\n';
            }
        } else {
            json_open("report");
            nlohmann::ordered_json body;
            body["order"] = rep.order;
            body["sample"] = rep.sample;
            body["basis"] = basis_json(rep.exponents);
            body["pass"] = rep.all_pass();
            body["entries"] = nlohmann::ordered_json::array();
            for (const auto& e : rep.entries) {
                nlohmann::ordered_json j;
                j["k"] = e.k;
                j["limit"] = e.limit;
                j["target"] = e.target;
                j["abs_deviation"] = e.abs_deviation;
                j["rel_deviation"] = e.rel_deviation;
                j["tolerance"] = e.tolerance;
                j["status"] = e.pass ? "PASS" : "FAIL";
                j["fit"] = fit_json("alpha" + std::to_string(e.k), e.fit);
                body["entries"].push_back(std::move(j));
            }
            auto& series = body["series"];
            series = nlohmann::ordered_json::object();
            for (unsigned k = 3; k <= rep.order; ++k) {
                auto& s = series["alpha" + std::to_string(k)];
                s = nlohmann::ordered_json::array();
                for (const auto& r : records)
                    s.push_back({r.n, r.alpha(k)});
            }
            json_splice(body);
        }
        return rep.all_pass() ? ok : fail;
    }

private:
    durfee_table build_table(std::size_t nmax) const
    {
        const double need = estimated_table_bytes(nmax);
        if (need > cfg_.memory_budget)
            throw resource_error(fmt::format(
                "a table to nmax = {} needs about {:.1f} MiB, over the {:.1f} MiB budget; "
                "lower --nmax or raise --memory-budget",
                nmax, need / (1024.0 * 1024.0), cfg_.memory_budget / (1024.0 * 1024.0)));
        return make_durfee_table(nmax);
    }

    std::vector<std::size_t> sample_for_moments() const
    {
        const auto ns = expand_sample(cfg_.sample);
        if (ns.empty())
            throw validation_error("sample is empty");
        for (auto n : ns)
            if (n <= 3)
                throw validation_error("sample contains n = " + std::to_string(n) +
                                       "; the Durfee size is deterministic for n <= 3");
        return ns;
    }

    std::size_t table_order(const std::vector<std::size_t>& ns) const
    {
        const auto top = *std::max_element(ns.begin(), ns.end());
        if (top > cfg_.nmax)
            throw validation_error("sample reaches n = " + std::to_string(top) + " but nmax is " +
                                   std::to_string(cfg_.nmax));
        return cfg_.nmax_given ? cfg_.nmax : top;
    }

    std::vector<moment_record> fit_records() const
    {
        auto ns = sample_for_moments();
        std::erase_if(ns, [&](std::size_t n) { return n < cfg_.min_fit_n; });
        if (ns.empty())
            throw arity_error("no sample point is at or above the fit cutoff n = " +
                              std::to_string(cfg_.min_fit_n));
        const auto t = build_table(table_order(ns));
        return moment_sweep(t, ns, cfg_.moment_order);
    }

    static std::vector<std::size_t> records_n(const std::vector<moment_record>& records)
    {
        std::vector<std::size_t> ns;
        for (const auto& r : records)
            ns.push_back(r.n);
        return ns;
    }

    static nlohmann::ordered_json basis_json(const basis& b)
    {
        auto j = nlohmann::ordered_json::array();
        for (auto e : b)
            j.push_back(e.str());
        return j;
    }

    static nlohmann::ordered_json fit_json(const std::string& name, const fit_result& f)
    {
        nlohmann::ordered_json j;
        j["target"] = name;
        j["exponents"] = basis_json(f.model.exponents);
        j["coefficients"] = f.model.coefficients;
        j["residual_rms"] = f.residual_rms;
        j["max_abs_residual"] = f.max_abs_residual;
        j["samples"] = f.sample.size();
        return j;
    }

    static const char* kind_name(const oracle_mismatch& m)
    {
        return m.what == oracle_mismatch::kind::count ? "count" : "total";
    }

    void csv_preamble()
    {
        if (cfg_.header)
            out_ << "# generated_at=" << timestamp() << '\n';
    }

    // Opens a top-level object; the caller appends ",..." members.
    void json_open(const char* command)
    {
        out_ << "{\"command\":\"" << command << '"';
        if (cfg_.header)
            out_ << ",\"generated_at\":\"" << timestamp() << '"';
    }

    void json_splice(const nlohmann::ordered_json& body)
    {
        for (const auto& [key, value] : body.items())
            out_ << ',' << nlohmann::json(key).dump() << ':' << value.dump();
        out_ << "}\n";
    }

    run_config cfg_;
    std::ostream& out_;
};

inline void validate_order(unsigned order)
{
    if (order < 4 || order % 2 != 0)
        throw validation_error("--order must be even and at least 4, got " + std::to_string(order));
}

/// Parses argv, runs one subcommand and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Durfee-square (h-index) statistics over integer partitions"};
    app.require_subcommand(1);

    struct raw_options {
        std::size_t nmax = 6400;
        unsigned order = 12;
        std::string sample = "squares:40..80";
        std::string basis;
        std::string moment_basis;
        std::string format = "csv";
        std::string out;
        std::string tolerances;
        bool squares_only = false;
        bool normalized = false;
        bool allow_large = false;
        bool no_header = false;
        std::size_t upto = 40;
        std::size_t min_fit_n = 1600;
        double precision = 0x1p-50;
        double memory_budget_mib = 4096;
    } raw;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", raw.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", raw.out, "write output to FILE instead of stdout");
        sub->add_flag("--no-header", raw.no_header, "omit the generated_at timestamp");
        sub->add_option("--memory-budget", raw.memory_budget_mib, "table memory budget in MiB");
    };
    std::vector<CLI::Option*> nmax_options;
    auto sampled = [&](CLI::App* sub) {
        nmax_options.push_back(
            sub->add_option("--nmax", raw.nmax, "table order (default: largest sampled n)"));
        sub->add_option("--order", raw.order, "highest moment order (even, >= 4)");
        sub->add_option("--sample", raw.sample, "squares:MIN..MAX or a comma-separated n list");
        sub->add_option("--precision", raw.precision, "float conversion relative error bound");
    };
    auto fitted = [&](CLI::App* sub) {
        sub->add_option("--basis", raw.basis, "exponents for alpha_k fits, e.g. 0,-1/2,-1");
        sub->add_option("--moment-basis", raw.moment_basis,
                        "exponents for mean and variance fits, e.g. 1/2,0,-1/2,-1");
        sub->add_option("--min-fit-n", raw.min_fit_n, "drop sample points below this n");
        sub->add_option("--tolerances", raw.tolerances, "JSON file of PASS/FAIL tolerances");
    };

    auto* table = app.add_subcommand("table", "exact Durfee counts d(n,k)");
    common(table);
    table->add_option("--nmax", raw.nmax, "largest n");
    table->add_flag("--squares-only", raw.squares_only, "only rows with n a positive square");
    table->add_flag("--normalized", raw.normalized, "emit p(n,k) as num/den");

    auto* moments = app.add_subcommand("moments", "exact mean, central and standardized moments");
    common(moments);
    sampled(moments);

    auto* fit = app.add_subcommand("fit", "asymptotic fits in powers of n^-1/2");
    common(fit);
    sampled(fit);
    fitted(fit);

    auto* check = app.add_subcommand("check", "brute-force cross check of the table");
    common(check);
    check->add_option("--upto", raw.upto, "check all n up to this bound");
    check->add_flag("--allow-large-oracle", raw.allow_large, "lift the enumeration safety bound");

    auto* report = app.add_subcommand("report", "normality report with PASS/FAIL per order");
    common(report);
    sampled(report);
    fitted(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        run_config cfg;
        cfg.nmax = raw.nmax;
        cfg.nmax_given = app.got_subcommand(table) ||
                         std::any_of(nmax_options.begin(), nmax_options.end(),
                                     [](const CLI::Option* o) { return o->count() > 0; });
        cfg.moment_order = raw.order;
        cfg.format = raw.format == "json" ? output_format::json : output_format::csv;
        cfg.header = !raw.no_header;
        cfg.squares_only = raw.squares_only;
        cfg.normalized = raw.normalized;
        cfg.allow_large_oracle = raw.allow_large;
        cfg.upto = raw.upto;
        cfg.min_fit_n = raw.min_fit_n;
        cfg.precision = raw.precision;
        if (!(raw.memory_budget_mib > 0))
            throw validation_error("--memory-budget must be positive");
        cfg.memory_budget = raw.memory_budget_mib * 1024.0 * 1024.0;

        const bool uses_sample = app.got_subcommand(moments) || app.got_subcommand(fit) ||
                                 app.got_subcommand(report);
        if (uses_sample) {
            validate_order(cfg.moment_order);
            if (cfg.moment_order > max_normal_moment_order)
                throw validation_error("--order above " + std::to_string(max_normal_moment_order) +
                                       " is not supported");
            cfg.sample = parse_sample(raw.sample);
            if (!(cfg.precision >= conversion_error_bound))
                throw validation_error(fmt::format(
                    "--precision {} is tighter than the guaranteed conversion bound 2^-52",
                    cfg.precision));
        }
        if (!raw.basis.empty())
            cfg.alpha_basis = parse_basis(raw.basis);
        if (!raw.moment_basis.empty())
            cfg.moment_basis = parse_basis(raw.moment_basis);
        if (!raw.tolerances.empty())
            cfg.tolerances = load_tolerances(raw.tolerances);

        std::ofstream file;
        std::ostream* sink = &out;
        if (!raw.out.empty()) {
            file.open(raw.out, std::ios::binary);
            if (!file)
                throw validation_error("cannot open output file '" + raw.out + "'");
            sink = &file;
        }

        command_runner runner(std::move(cfg), *sink);
        int code = ok;
        if (app.got_subcommand(table))
            code = runner.table();
        else if (app.got_subcommand(moments))
            code = runner.moments();
        else if (app.got_subcommand(fit))
            code = runner.fit();
        else if (app.got_subcommand(check))
            code = runner.check();
        else
            code = runner.report();
        sink->flush();
        return code;
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << '\n';
        return resource;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

} // namespace durfee::cli

#endif
