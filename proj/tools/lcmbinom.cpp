// lcmbinom: command-line front end for the lcm-binomial triangle.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error.

#include <lcmbinom/analysis.hpp>
#include <lcmbinom/core.hpp>
#include <lcmbinom/oeis.hpp>
#include <lcmbinom/periods.hpp>
#include <lcmbinom/render.hpp>
#include <lcmbinom/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>

namespace {

using namespace lcmbinom;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

int cmd_entry(std::uint64_t n, std::uint64_t k)
{
    const TriangleEntry e = make_entry(n, k);
    std::cout << "n = " << e.n << "\nk = " << e.k << "\nlcm_binom = " << e.lcm_binom << "\nbinom = " << e.binom
              << "\nratio = " << e.ratio << "\ndiffers = " << (e.differs ? "true" : "false") << '\n';
    return exit_ok;
}

int cmd_column(std::uint64_t k, std::uint64_t count)
{
    std::cout << "n lcm_binom binom ratio\n";
    for (std::uint64_t n = k; n < k + count; ++n) {
        const TriangleEntry e = make_entry(n, k);
        std::cout << n << ' ' << e.lcm_binom << ' ' << e.binom << ' ' << e.ratio << '\n';
    }
    return exit_ok;
}

int cmd_diagonal(std::uint64_t k, std::uint64_t count)
{
    const auto entries = diagonal(k, count);
    std::uint64_t max_omega = 0;
    std::cout << "n value omega\n";
    for (const auto& e : entries) {
        std::cout << e.n << ' ' << e.value << ' ' << e.omega << '\n';
        max_omega = std::max(max_omega, e.omega);
    }
    std::cout << "# max omega on D_" << k << " over " << count << " entries: " << max_omega << " (bound " << k
              << ")\n";
    return exit_ok;
}

int cmd_period(std::uint64_t k, std::uint64_t horizon)
{
    PeriodReport report = exact_period(k);
    report = horizon == 0 ? confirm(std::move(report)) : confirm(std::move(report), horizon);
    std::cout << "k = " << k << "\nT_k = " << report.exact_period << "\nexponents:";
    if (report.prime_exponents.empty()) std::cout << " (none)";
    for (const auto& [p, alpha] : report.prime_exponents) std::cout << ' ' << p << '^' << alpha;
    std::cout << "\nP_(k-1) = " << (k >= 1 ? farhi_kane_period(k - 1).str() : std::string("n/a"))
              << "\nbrute-force confirmed = " << (report.bruteforce_confirmed ? "true" : "false")
              << " (horizon n <= " << report.horizon << ")\n";
    return report.bruteforce_confirmed ? exit_ok : exit_check_failed;
}

int cmd_ratios(std::uint64_t k, std::uint64_t count)
{
    if (count == 0) return exit_ok;
    const RatioSequence seq = ratio_sequence(k, k + count - 1);
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
        std::cout << (i ? " " : "") << seq.values[i];
    }
    std::cout << '\n';
    return exit_ok;
}

int cmd_equality(std::uint64_t max_n)
{
    const auto records = equality_set(max_n);
    for (const auto& r : records) std::cout << r.n << ' ' << r.k << '\n';
    std::cout << "# " << records.size() << " pairs with lcm-binomial == binomial for n <= " << max_n << '\n';
    return exit_ok;
}

int cmd_bound(std::uint64_t n)
{
    const LcmBound b = check_lcm_upper_bound(n);
    std::cout << "lcm(1.." << n << ") = " << b.lcm << "\n2^n lcm(1..ceil(n/2)) = " << b.halving_bound
              << "\nn 4^n = " << b.bound << "\nholds = " << (b.holds ? "true" : "false") << '\n';
    return b.holds ? exit_ok : exit_check_failed;
}

int cmd_oeis_check(const std::string& path, const std::string& id)
{
    const OeisSnapshot snap = load_bfile(path, id);
    const OeisReport report = oeis_check(snap);
    std::cout << format_report(report);
    return report.ok() ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"lcm-binomial triangle: [n k] = lcm(n, ..., n-k+1) / lcm(1, ..., k)"};
    app.require_subcommand(1);

    std::uint64_t n = 0, k = 0;
    std::uint64_t rows = 13, count = 20, max_n = 300, max_k = 12, horizon = 0, diagonal_count = 200;
    std::string format = "text", what = "lcm_binomial", suite, file, id = "A093430";
    bool highlight = false, color = false;

    auto* entry = app.add_subcommand("entry", "One cell with its binomial counterpart");
    entry->add_option("N", n)->required();
    entry->add_option("K", k)->required();

    auto* triangle = app.add_subcommand("triangle", "Render rows 0 .. rows-1");
    triangle->add_option("--rows", rows)->check(CLI::PositiveNumber);
    triangle->add_option("--format", format, "text, csv, json or bfile");
    triangle->add_option("--what", what, "lcm_binomial, binomial or ratio");
    triangle->add_flag("--highlight", highlight, "Mark cells that differ from the binomial triangle");
    triangle->add_flag("--color", color, "Mark with ANSI green instead of *v*");

    auto* column = app.add_subcommand("column", "Column K for n = K .. K+count-1");
    column->add_option("K", k)->required();
    column->add_option("--count", count);

    auto* diag = app.add_subcommand("diagonal", "Diagonal D_K with prime-factor counts");
    diag->add_option("K", k)->required();
    diag->add_option("--count", count);

    auto* period = app.add_subcommand("period", "Exact period of the ratio column K, confirmed by brute force");
    period->add_option("K", k)->required();
    period->add_option("--horizon", horizon, "Largest n scanned (default K + 4 lcm(1..K-1))");

    auto* ratios = app.add_subcommand("ratios", "Ratio column C(n,K)/[n K] for n = K .. K+count-1");
    ratios->add_option("K", k)->required();
    ratios->add_option("--count", count);

    auto* equality = app.add_subcommand("equality", "Pairs with lcm-binomial equal to binomial");
    equality->add_option("--max-n", max_n);

    auto* bound = app.add_subcommand("bound", "lcm(1..N) against n 4^n");
    bound->add_option("N", n)->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("SUITE", suite, "integrality, divisibility, period, omega, bounds or all")->required();
    verify->add_option("--max-n", max_n);
    verify->add_option("--max-k", max_k);
    verify->add_option("--count", diagonal_count, "Entries per diagonal (omega suite)");

    auto* oeis = app.add_subcommand("oeis-check", "Compare a b-file snapshot with the computed triangle");
    oeis->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    oeis->add_option("--id", id);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*entry) return cmd_entry(n, k);
        if (*triangle) {
            RenderOptions opts;
            opts.rows = rows;
            opts.format = parse_format(format);
            opts.what = parse_quantity(what);
            opts.highlight = highlight || color;
            opts.ansi = color;
            std::cout << render_triangle(opts);
            return exit_ok;
        }
        if (*column) return cmd_column(k, count);
        if (*diag) return cmd_diagonal(k, count);
        if (*period) return cmd_period(k, horizon);
        if (*ratios) return cmd_ratios(k, count);
        if (*equality) return cmd_equality(max_n);
        if (*bound) return cmd_bound(n);
        if (*verify) {
            VerifyOptions opts;
            opts.max_n = max_n;
            opts.max_k = max_k;
            opts.count = diagonal_count;
            const auto results = run_verify(parse_suite(suite), opts, std::cout);
            const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
            return ok ? exit_ok : exit_check_failed;
        }
        if (*oeis) return cmd_oeis_check(file, id);
    } catch (const lcmbinom::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
