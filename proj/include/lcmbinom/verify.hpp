#ifndef LCMBINOM_VERIFY_HPP
#define LCMBINOM_VERIFY_HPP

// Invariant suites run by `lcmbinom verify SUITE`. Each check that fails
// records a witness naming the offending (n, k, p).

#include <lcmbinom/analysis.hpp>
#include <lcmbinom/core.hpp>
#include <lcmbinom/periods.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lcmbinom {

enum class Suite { integrality, divisibility, period, omega, bounds, all };

inline Suite parse_suite(std::string_view s)
{
    if (s == "integrality") return Suite::integrality;
    if (s == "divisibility") return Suite::divisibility;
    if (s == "period") return Suite::period;
    if (s == "omega") return Suite::omega;
    if (s == "bounds") return Suite::bounds;
    if (s == "all") return Suite::all;
    throw error(errc::invalid_format, "unknown suite '" + std::string(s) + "'");
}

struct VerifyOptions {
    std::uint64_t max_n = 300;
    std::uint64_t max_k = 12;
    /// Entries per diagonal in the omega suite.
    std::uint64_t count = 200;
    /// Row cap for the sum inequality in the bounds suite.
    std::uint64_t power_sum_max_n = 60;
    /// Valuation cross-check scale in the divisibility suite.
    std::uint64_t valuation_max_n = 120;
    std::uint64_t valuation_max_p = 50;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;
    double seconds = 0;

    bool passed() const { return failures.empty(); }

    void expect(bool ok, const std::string& witness)
    {
        ++checks;
        if (!ok) failures.push_back(witness);
    }
};

namespace detail {

inline std::string at(std::uint64_t n, std::uint64_t k)
{
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

inline std::string at(std::uint64_t n, std::uint64_t k, std::uint64_t p)
{
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", p=" + std::to_string(p) + ")";
}

inline void integrality_suite(const VerifyOptions& o, SuiteResult& r)
{
    for (std::uint64_t n = 0; n <= o.max_n; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            r.expect(lcm_range(n - k + 1, n) % lcm_range(1, k) == 0, "integrality " + at(n, k));
        }
        const auto row = lcm_binomial_row(n);
        r.expect(row.front() == 1 && row.back() == 1, "boundary columns " + at(n, n));
        if (n >= 1) r.expect(row[1] == n, "column 1 " + at(n, 1));
        for (std::uint64_t k = 1; k <= n; ++k) {
            r.expect(binomial(n, k) == binomial(n - 1, k - 1) + (k <= n - 1 ? binomial(n - 1, k) : Natural(0)),
                     "Pascal rule " + at(n, k));
        }
    }
}

inline void divisibility_suite(const VerifyOptions& o, SuiteResult& r)
{
    for (std::uint64_t n = 0; n <= o.max_n; ++n) {
        const auto row = lcm_binomial_row(n);
        Natural c = 1;
        for (std::uint64_t k = 0; k <= n; ++k) {
            if (k > 0) c = c * (n - k + 1) / k;
            r.expect(c % row[k] == 0, "lcm-binomial divides binomial " + at(n, k));
        }
    }
    const std::uint64_t vn = std::min(o.max_n, o.valuation_max_n);
    for (std::uint64_t n = 1; n <= vn; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
            const Natural c = binomial(n, k);
            const Natural l = lcm_binomial(n, k);
            for (std::uint64_t p = 2; p <= std::min(n, o.valuation_max_p); ++p) {
                if (!is_prime(p)) continue;
                const auto legendre = vp_binomial_legendre(n, k, p);
                const auto window = vp_lcm_binomial(n, k, p);
                r.expect(legendre == vp(c, p), "Legendre valuation " + at(n, k, p));
                r.expect(window == vp(l, p), "lcm valuation " + at(n, k, p));
                r.expect(legendre >= window, "valuation inequality " + at(n, k, p));
            }
        }
    }
}

inline void period_suite(const VerifyOptions& o, SuiteResult& r, std::ostream& log)
{
    log << "   k  T_k  horizon  confirmed\n";
    for (std::uint64_t k = 0; k <= o.max_k; ++k) {
        const PeriodReport formula = exact_period(k);
        const std::uint64_t horizon = to_u64_horizon(default_horizon(k));
        const RatioSequence seq = ratio_sequence(k, horizon);
        const std::uint64_t found = minimal_period(seq);
        const bool agree = Natural(found) == formula.exact_period;
        r.expect(agree, "brute-force period " + std::to_string(found) + " != formula " +
                            formula.exact_period.str() + " at k=" + std::to_string(k));
        log << "  " << (k < 10 ? " " : "") << k << "  " << formula.exact_period << "  " << horizon << "  "
            << (agree ? "yes" : "NO") << '\n';

        if (k >= 1) {
            r.expect(formula.exact_period == farhi_kane_period(k - 1),
                     "T_k != P_{k-1} at k=" + std::to_string(k));
        }
        const auto period = static_cast<std::uint64_t>(formula.exact_period);
        if (period < seq.values.size()) {
            r.expect(verify_period(seq, period), "formula period fails at k=" + std::to_string(k));
        }
        for (std::uint64_t d = 1; d < period; ++d) {
            if (period % d == 0) {
                r.expect(!verify_period(seq, d), "proper divisor " + std::to_string(d) +
                                                     " is a period at k=" + std::to_string(k));
            }
        }
        if (k >= 2) {
            const Natural cor = lcm_range(1, k - 1);
            r.expect(cor % formula.exact_period == 0, "T_k does not divide lcm(1..k-1) at k=" + std::to_string(k));
            r.expect(verify_period(seq, static_cast<std::uint64_t>(cor)),
                     "lcm(1..k-1) is not a period at k=" + std::to_string(k));
        }
    }
}

inline void omega_suite(const VerifyOptions& o, SuiteResult& r)
{
    // prefix[m] = lcm(1..m), step[m] = lcm_step(m)
    const std::uint64_t top = o.count + o.max_k;
    std::vector<Natural> prefix{1};
    std::vector<Natural> step;
    for (std::uint64_t m = 1; m <= top; ++m) prefix.push_back(lcm(prefix.back(), Natural(m)));
    for (std::uint64_t m = 0; m < top; ++m) {
        const Factorization f = factorize(Natural(m) + 1);
        step.push_back(f.is_prime_power() ? f.factors.front().prime : Natural(1));
        r.expect(step.back() * prefix[m] == prefix[m + 1], "lcm step at n=" + std::to_string(m));
    }
    for (std::uint64_t k = 0; k <= o.max_k; ++k) {
        for (const auto& e : diagonal_entries(k, o.count)) {
            r.expect(e.omega <= k, "Omega bound on diagonal " + at(e.n + k, e.n));
            // value | lcm(1..n+k)/lcm(1..n) = product of k lcm steps
            const Natural quotient = prefix[e.n + k] / prefix[e.n];
            Natural steps = 1;
            for (std::uint64_t i = 0; i < k; ++i) steps *= step[e.n + i];
            r.expect(quotient == steps && quotient % e.value == 0, "step product " + at(e.n + k, e.n));
        }
    }
}

inline void bounds_suite(const VerifyOptions& o, SuiteResult& r)
{
    for (std::uint64_t n = 1; n <= o.max_n; ++n) {
        const LcmBound b = check_lcm_upper_bound(n);
        r.expect(b.halving_holds, "lcm(1..n) <= 2^n lcm(1..ceil(n/2)) at n=" + std::to_string(n));
        r.expect(b.holds, "lcm(1..n) <= n 4^n at n=" + std::to_string(n));
        const Natural chain = Natural(1) << halving_exponent(n);
        r.expect(b.lcm <= chain && chain <= b.bound, "halving chain at n=" + std::to_string(n));
    }
    const std::uint64_t pn = std::min(o.max_n, o.power_sum_max_n);
    const std::pair<int, int> xs[] = {{0, 1}, {1, 2}, {1, 1}, {2, 1}, {7, 3}};
    for (std::uint64_t n = 0; n <= pn; ++n) {
        for (const auto& [num, den] : xs) {
            r.expect(check_power_sum_inequality(n, num, den),
                     "sum inequality at n=" + std::to_string(n) + ", x=" + std::to_string(num) + "/" +
                         std::to_string(den));
        }
    }
}

} // namespace detail

inline SuiteResult run_suite(Suite suite, const VerifyOptions& opts, std::ostream& log)
{
    static constexpr const char* names[] = {"integrality", "divisibility", "period", "omega", "bounds", "all"};
    SuiteResult r;
    r.name = names[static_cast<int>(suite)];
    const auto start = std::chrono::steady_clock::now();
    switch (suite) {
    case Suite::integrality: detail::integrality_suite(opts, r); break;
    case Suite::divisibility: detail::divisibility_suite(opts, r); break;
    case Suite::period: detail::period_suite(opts, r, log); break;
    case Suite::omega: detail::omega_suite(opts, r); break;
    case Suite::bounds: detail::bounds_suite(opts, r); break;
    case Suite::all:
        throw error(errc::invalid_format, "run_suite takes a single suite; use run_verify for 'all'");
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Runs one suite (or every suite for Suite::all) and prints a line per suite.
inline std::vector<SuiteResult> run_verify(Suite suite, const VerifyOptions& opts, std::ostream& log)
{
    std::vector<Suite> todo;
    if (suite == Suite::all) {
        todo = {Suite::integrality, Suite::divisibility, Suite::period, Suite::omega, Suite::bounds};
    } else {
        todo = {suite};
    }
    std::vector<SuiteResult> results;
    for (Suite s : todo) {
        SuiteResult r = run_suite(s, opts, log);
        log << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << (r.checks - r.failures.size()) << "/"
            << r.checks << " checks passed in " << r.seconds << " s\n";
        constexpr std::size_t shown = 10;
        for (std::size_t i = 0; i < r.failures.size() && i < shown; ++i) log << "  violated: " << r.failures[i] << '\n';
        if (r.failures.size() > shown) log << "  ... " << (r.failures.size() - shown) << " more\n";
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace lcmbinom

#endif // LCMBINOM_VERIFY_HPP
