#include <fibbern/cli.hpp>

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <fibbern/bernoulli.hpp>
#include <fibbern/egf.hpp>
#include <fibbern/grid.hpp>
#include <fibbern/ledger.hpp>
#include <fibbern/report.hpp>
#include <fibbern/sequences.hpp>

namespace fibbern
{

namespace
{

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<IdentityId> select_ids(const std::string &filter)
{
    std::vector<IdentityId> ids;
    const auto patterns = split(filter, ',');
    if (patterns.empty()) {
        throw UsageError("--ids: empty identity filter");
    }
    for (const auto &pat : patterns) {
        bool matched = false;
        for (const auto &info : identity_catalog()) {
            if (fnmatch(pat.c_str(), std::string(info.tag).c_str(), 0) == 0) {
                ids.push_back(info.id);
                matched = true;
            }
        }
        if (!matched) {
            throw UsageError("--ids: no identity matches '" + pat + "'");
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

long parse_long(const std::string &s, const std::string &flag)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used == s.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw UsageError(flag + ": not an integer: '" + s + "'");
}

std::pair<long, long> parse_range(const std::string &s, const std::string &flag)
{
    const auto colon = s.find(':', 1);
    if (colon == std::string::npos) {
        throw UsageError(flag + ": expected a:b, got '" + s + "'");
    }
    const long a = parse_long(s.substr(0, colon), flag);
    const long b = parse_long(s.substr(colon + 1), flag);
    if (a > b) {
        throw UsageError(flag + ": empty range '" + s + "'");
    }
    return {a, b};
}

// "alpha", "beta", "p/q", or "p/q:r/s" for p/q + (r/s) sqrt5.
QuadExt parse_quad(const std::string &s, const std::string &flag)
{
    if (s == "alpha") {
        return golden_alpha();
    }
    if (s == "beta") {
        return golden_beta();
    }
    try {
        const auto colon = s.find(':');
        if (colon == std::string::npos) {
            return QuadExt(Rational::parse(s));
        }
        return QuadExt(Rational::parse(s.substr(0, colon)), Rational::parse(s.substr(colon + 1)));
    } catch (const std::exception &) {
        throw UsageError(flag + ": not a number of Q(sqrt5): '" + s + "'");
    }
}

unsigned default_jobs()
{
    if (const char *env = std::getenv("FIBBERN_JOBS"); env && *env) {
        const long v = parse_long(env, "FIBBERN_JOBS");
        if (v < 1) {
            throw UsageError("FIBBERN_JOBS must be at least 1");
        }
        return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

struct VerifyArgs {
    std::string ids = "*";
    long n_max = 30;
    long j_max = 8;
    std::string m_range = "-5:5";
    long q_max = 6;
    long order = 32;
    std::string format = "text";
    std::string out_path;
    long jobs = 0;
    bool values = false;
    bool no_oracle = false;
    std::string fault;
};

// Writes to --out when given, otherwise to the command's stream.
void emit(const std::string &path, std::ostream &out, const std::function<void(std::ostream &)> &write)
{
    if (path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("--out: cannot open '" + path + "'");
    }
    write(file);
}

int run_verify(const VerifyArgs &a, std::ostream &out)
{
    const auto ids = select_ids(a.ids);
    GridSpec spec;
    if (a.n_max < 0) {
        throw UsageError("--n-max must be non-negative");
    }
    if (a.j_max < 1) {
        throw UsageError("--j-max must be at least 1");
    }
    if (a.q_max < 2) {
        throw UsageError("--q-max must be at least 2");
    }
    if (a.order < 0) {
        throw UsageError("--order must be non-negative");
    }
    spec.n_max = a.n_max;
    spec.j_max = a.j_max;
    std::tie(spec.m_min, spec.m_max) = parse_range(a.m_range, "--m-range");
    spec.q_max = a.q_max;

    VerifyOptions options;
    if (a.jobs < 0) {
        throw UsageError("--jobs must be at least 1");
    }
    options.jobs = a.jobs > 0 ? static_cast<unsigned>(a.jobs) : default_jobs();
    options.with_oracle = !a.no_oracle;
    options.oracle_order = a.order;
    if (!a.fault.empty()) {
        const auto id = parse_identity_tag(a.fault);
        if (!id) {
            throw UsageError("--inject-fault: unknown identity '" + a.fault + "'");
        }
        options.eval.fault = *id;
    }

    ReportOptions ro;
    ro.all_values = a.values;
    if (a.format == "json") {
        ro.format = ReportFormat::json;
    } else if (a.format == "csv") {
        ro.format = ReportFormat::csv;
    } else if (a.format == "text") {
        ro.format = ReportFormat::text;
    } else {
        throw UsageError("--format: expected text, json or csv");
    }

    const auto report = verify_grid(ids, spec, options);
    emit(a.out_path, out, [&](std::ostream &o) { write_report(o, report, ro); });
    return report.passed() ? exit_ok : exit_failed;
}

struct SeriesArgs {
    std::string eq;
    long j = 1;
    long order = 32;
    std::string x;
};

int run_series(const SeriesArgs &a, std::ostream &out)
{
    const auto eq = parse_functional_equation(a.eq);
    if (!eq) {
        throw UsageError("--eq: unknown functional equation '" + a.eq + "'");
    }
    if (a.j < 1) {
        throw UsageError("--j must be at least 1");
    }
    if (a.order < 0) {
        throw UsageError("--order must be non-negative");
    }
    std::optional<QuadExt> x;
    if (!a.x.empty()) {
        x = parse_quad(a.x, "--x");
    } else if (*eq == FunctionalEquation::H_RELATION) {
        throw UsageError("--x is required for H_RELATION");
    }
    const auto v = check_functional_equation(*eq, a.j, a.order, x);
    out << functional_equation_name(*eq) << " j=" << a.j << ": ";
    if (v.confirmed) {
        out << "confirmed to order " << v.order << '\n';
        return exit_ok;
    }
    const long k = *v.first_mismatch;
    out << "mismatch at coefficient " << k << "\n  lhs: " << egf_coeff(v.lhs, k).to_string()
        << "\n  rhs: " << egf_coeff(v.rhs, k).to_string() << '\n';
    return exit_failed;
}

struct TableArgs {
    std::string seq;
    long max = 12;
    long min = 0;
};

int run_table(const TableArgs &a, std::ostream &out)
{
    std::function<std::string(long)> value;
    if (a.seq == "bernoulli") {
        if (a.min < 0) {
            throw UsageError("--min must be non-negative for bernoulli");
        }
        value = [](long n) { return bernoulli_number(n).to_string(); };
    } else if (a.seq == "fibonacci") {
        value = [](long n) { return fib(n).get_str(); };
    } else if (a.seq == "lucas") {
        value = [](long n) { return lucas(n).get_str(); };
    } else {
        throw UsageError("--seq: expected bernoulli, fibonacci or lucas");
    }
    if (a.max < a.min) {
        throw UsageError("--max must not be below --min");
    }
    for (long n = a.min; n <= a.max; ++n) {
        out << n << ": " << value(n) << '\n';
    }
    return exit_ok;
}

struct BenchArgs {
    long bern_max = 200;
    long fib_max = 100000;
};

template <class Fn>
double seconds(Fn f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_bench(const BenchArgs &a, std::ostream &out)
{
    if (a.bern_max < 0 || a.fib_max < 0) {
        throw UsageError("bench limits must be non-negative");
    }
    // Bernoulli is timed on a cold memo table; nothing is printed until both
    // kernels have been cross-checked exactly against their second path.
    const auto n = static_cast<unsigned long>(a.fib_max);
    const double tb = seconds([&] { bernoulli_number(a.bern_max); });
    for (long k = 0; k <= a.bern_max; ++k) {
        if (bernoulli_number(k) != bernoulli_akiyama_tanigawa(k)) {
            out << "bernoulli paths disagree at n=" << k << '\n';
            return exit_failed;
        }
    }
    BigInt fast;
    BigInt slow;
    const double tf = seconds([&] { fast = fib(static_cast<long>(n)); });
    const double ti = seconds([&] { slow = fib_iterative(n); });
    if (fast != slow) {
        out << "fibonacci paths disagree at n=" << n << '\n';
        return exit_failed;
    }
    char line[128];
    std::snprintf(line, sizeof line, "bernoulli_number(0..%ld)      %10.6f s\n", a.bern_max, tb);
    out << line;
    std::snprintf(line, sizeof line, "fib(%lu) fast doubling   %10.6f s\n", n, tf);
    out << line;
    std::snprintf(line, sizeof line, "fib(%lu) iteration       %10.6f s\n", n, ti);
    out << line;
    return exit_ok;
}

int run_ledger(std::ostream &out)
{
    const auto entries = discrepancy_ledger();
    write_ledger(out, entries);
    const bool all = std::all_of(entries.begin(), entries.end(), [](const auto &e) { return e.confirmed; });
    return all ? exit_ok : exit_failed;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of Fibonacci-Lucas-Bernoulli identities over Q(sqrt5)", "fibbern"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Check identities over a parameter grid");
    verify->add_option("--ids", va.ids, "Comma-separated tag globs")->capture_default_str();
    verify->add_option("--n-max", va.n_max, "Largest n")->capture_default_str();
    verify->add_option("--j-max", va.j_max, "Largest j")->capture_default_str();
    verify->add_option("--m-range", va.m_range, "m range a:b")->capture_default_str();
    verify->add_option("--q-max", va.q_max, "Largest q")->capture_default_str();
    verify->add_option("--order", va.order, "Generating-series truncation order")->capture_default_str();
    verify->add_option("--format", va.format, "text, json or csv")->capture_default_str();
    verify->add_option("--out", va.out_path, "Write the report to this file");
    verify->add_option("--jobs", va.jobs, "Worker threads (FIBBERN_JOBS, else all cores)");
    verify->add_flag("--values", va.values, "Include exact values for every record");
    verify->add_flag("--no-oracle", va.no_oracle, "Skip the independent recomputation");
    verify->add_option("--inject-fault", va.fault, "Add 1 to this identity's right-hand side");

    SeriesArgs sa;
    auto *series = app.add_subcommand("series", "Check a generating-function identity coefficient by coefficient");
    series->add_option("--eq", sa.eq, "EGF_F_SQ, EGF_L_SQ, FL_ID, TANH_FORM, COTH_FORM or H_RELATION")->required();
    series->add_option("--j", sa.j, "Index step j")->capture_default_str();
    series->add_option("--order", sa.order, "Truncation order")->capture_default_str();
    series->add_option("--x", sa.x, "Point x for H_RELATION: alpha, beta, p/q or p/q:r/s");

    TableArgs ta;
    auto *table = app.add_subcommand("table", "Print sequence values");
    table->add_option("--seq", ta.seq, "bernoulli, fibonacci or lucas")->required();
    table->add_option("--min", ta.min, "First index")->capture_default_str();
    table->add_option("--max", ta.max, "Last index")->capture_default_str();

    BenchArgs ba;
    auto *bench = app.add_subcommand("bench", "Time the sequence kernels");
    bench->add_option("--bern-max", ba.bern_max, "Bernoulli numbers up to this index")->capture_default_str();
    bench->add_option("--fib-max", ba.fib_max, "Fibonacci index")->capture_default_str();

    auto *ledger = app.add_subcommand("ledger", "Print the corrections table with fresh evidence");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    try {
        if (verify->parsed()) {
            return run_verify(va, out);
        }
        if (series->parsed()) {
            return run_series(sa, out);
        }
        if (table->parsed()) {
            return run_table(ta, out);
        }
        if (bench->parsed()) {
            return run_bench(ba, out);
        }
        if (ledger->parsed()) {
            return run_ledger(out);
        }
    } catch (const UsageError &e) {
        const CLI::App *sub = app.get_subcommands().front();
        err << "error: " << e.what() << '\n' << sub->help();
        return exit_usage;
    }
    return exit_usage;
}

} // namespace fibbern
