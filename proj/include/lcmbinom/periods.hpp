#ifndef LCMBINOM_PERIODS_HPP
#define LCMBINOM_PERIODS_HPP

// Periodicity of the column ratios C(n,k) / [n k].
//
// The ratio column k equals g_{k-1}(n-k+1) / g_{k-1}(1), where
//
//   g_k(n) = n (n+1) ... (n+k) / lcm(n, n+1, ..., n+k)
//
// so its exact period T_k is the exact period P_{k-1} of g_{k-1}. Both closed
// forms live here next to brute-force scans that check them from the
// definitions alone.

#include <lcmbinom/core.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lcmbinom {

/// g_k(n) for n >= 1.
inline Natural g(std::uint64_t k, std::uint64_t n)
{
    if (n == 0) {
        throw error(errc::zero_input, "g_k(0)");
    }
    Natural product = 1;
    for (std::uint64_t i = 0; i <= k; ++i) product *= n + i;
    return detail::exact_divide(product, lcm_range(n, n + k), "g_k integrality");
}

/// C(n,k) / [n k].
inline Natural ratio(std::uint64_t n, std::uint64_t k)
{
    return detail::exact_divide(binomial(n, k), lcm_binomial(n, k), "lcm-binomial divides binomial");
}

/// The same ratio through g: g_{k-1}(n-k+1) / g_{k-1}(1).
inline Natural ratio_via_g(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        throw error(errc::k_exceeds_n, "ratio_via_g(" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
    if (k == 0) {
        throw error(errc::zero_k, "ratio_via_g needs k >= 1");
    }
    return detail::exact_divide(g(k - 1, n - k + 1), g(k - 1, 1), "g_k(1) divides g_k(n)");
}

/// max_{1 <= i <= limit} v_p(i), i.e. the largest alpha with p^alpha <= limit.
inline std::uint64_t max_valuation_upto(std::uint64_t limit, std::uint64_t p)
{
    std::uint64_t alpha = 0;
    detail::for_each_prime_power_upto(limit, p, [&](std::uint64_t) { ++alpha; });
    return alpha;
}

namespace detail {

inline std::uint64_t small_vp(std::uint64_t x, std::uint64_t p)
{
    std::uint64_t alpha = 0;
    while (x % p == 0) {
        x /= p;
        ++alpha;
    }
    return alpha;
}

/// Exponents of prod_{p prime, p <= m} p^{e_p} with e_p = 0 when
/// v_p(m+1) >= max_{i <= m} v_p(i), and that maximum otherwise.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> period_exponents(std::uint64_t m)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 2; p <= m; ++p) {
        if (!is_prime(p)) continue;
        const std::uint64_t top = max_valuation_upto(m, p);
        const std::uint64_t alpha = small_vp(m + 1, p) >= top ? 0 : top;
        out.emplace_back(p, alpha);
    }
    return out;
}

} // namespace detail

struct PeriodReport {
    std::uint64_t k = 0;
    Natural exact_period = 1;
    /// (p, alpha_p) for every prime p < k.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_exponents;
    bool bruteforce_confirmed = false;
    /// Largest n inspected by the confirming scan; 0 while unconfirmed.
    std::uint64_t horizon = 0;
};

/// T_k from the closed form. Columns 0 and 1 give the empty product.
inline PeriodReport exact_period(std::uint64_t k)
{
    PeriodReport report;
    report.k = k;
    if (k >= 2) report.prime_exponents = detail::period_exponents(k - 1);
    for (const auto& [p, alpha] : report.prime_exponents) {
        report.exact_period *= boost::multiprecision::pow(Natural(p), static_cast<unsigned>(alpha));
    }
    return report;
}

/// P_k, the exact period of g_k.
inline Natural farhi_kane_period(std::uint64_t k)
{
    Natural period = 1;
    for (const auto& [p, alpha] : detail::period_exponents(k)) {
        period *= boost::multiprecision::pow(Natural(p), static_cast<unsigned>(alpha));
    }
    return period;
}

/// Ratio column k sampled at n = k, k+1, ..., last_n.
struct RatioSequence {
    std::uint64_t k = 0;
    std::uint64_t start_n = 0;
    std::vector<Natural> values;

    std::uint64_t last_n() const noexcept { return start_n + values.size() - 1; }
    const Natural& at(std::uint64_t n) const { return values.at(n - start_n); }
};

inline RatioSequence ratio_sequence(std::uint64_t k, std::uint64_t last_n)
{
    RatioSequence seq;
    seq.k = k;
    seq.start_n = k;
    if (last_n >= k) seq.values.reserve(last_n - k + 1);
    for (std::uint64_t n = k; n <= last_n; ++n) seq.values.push_back(ratio(n, k));
    return seq;
}

/// k + 4 * lcm(1, ..., max(k-1, 1)): four full copies of the Corollary-1 period.
inline Natural default_horizon(std::uint64_t k)
{
    return k + 4 * lcm_range(1, k >= 2 ? k - 1 : 1);
}

namespace detail {

inline bool sequence_has_period(const RatioSequence& seq, std::uint64_t candidate)
{
    const auto& v = seq.values;
    for (std::size_t i = 0; i + candidate < v.size(); ++i) {
        if (v[i + candidate] != v[i]) return false;
    }
    return true;
}

inline std::uint64_t to_u64_horizon(const Natural& h)
{
    if (!fits_u64(h)) throw error(errc::horizon_too_small, "horizon does not fit in 64 bits");
    return static_cast<std::uint64_t>(h);
}

} // namespace detail

/// True iff the sampled column repeats with period `candidate` over every
/// pair (n, n + candidate) it holds.
inline bool verify_period(const RatioSequence& seq, std::uint64_t candidate)
{
    if (candidate == 0) {
        throw error(errc::zero_input, "period candidate 0");
    }
    if (seq.values.size() <= candidate) {
        throw error(errc::horizon_too_small, "sequence shorter than candidate period");
    }
    return detail::sequence_has_period(seq, candidate);
}

/// ratio(n + candidate, k) == ratio(n, k) for all n in [k, horizon - candidate].
inline bool verify_period(std::uint64_t k, std::uint64_t candidate, std::uint64_t horizon)
{
    if (candidate == 0) {
        throw error(errc::zero_input, "period candidate 0");
    }
    if (horizon <= k + candidate) {
        throw error(errc::horizon_too_small, "horizon " + std::to_string(horizon) + " <= k + candidate");
    }
    return verify_period(ratio_sequence(k, horizon), candidate);
}

/// Smallest T such that the sampled column repeats with period T.
inline std::uint64_t minimal_period(const RatioSequence& seq)
{
    const std::uint64_t span = seq.values.size();
    for (std::uint64_t t = 1; t < span; ++t) {
        if (detail::sequence_has_period(seq, t)) return t;
    }
    return span == 0 ? 1 : span;
}

/// Brute-force minimal period of column k over n in [k, horizon].
inline std::uint64_t minimal_period_bruteforce(std::uint64_t k, std::uint64_t horizon)
{
    const Natural needed = default_horizon(k);
    if (Natural(horizon) < needed) {
        throw error(errc::horizon_too_small,
                    "horizon " + std::to_string(horizon) + " < " + needed.str() + " for k = " + std::to_string(k));
    }
    return minimal_period(ratio_sequence(k, horizon));
}

/// Runs the brute-force scan up to `horizon` and marks the report confirmed
/// when the scanned minimal period equals the closed form.
inline PeriodReport confirm(PeriodReport report, std::uint64_t horizon)
{
    const std::uint64_t found = minimal_period_bruteforce(report.k, horizon);
    report.horizon = horizon;
    report.bruteforce_confirmed = Natural(found) == report.exact_period;
    return report;
}

inline PeriodReport confirm(PeriodReport report)
{
    const std::uint64_t horizon = detail::to_u64_horizon(default_horizon(report.k));
    return confirm(std::move(report), horizon);
}

} // namespace lcmbinom

#endif // LCMBINOM_PERIODS_HPP
