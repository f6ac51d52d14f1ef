#ifndef LCMBINOM_ANALYSIS_HPP
#define LCMBINOM_ANALYSIS_HPP

#include <lcmbinom/core.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcmbinom {

/// lcm(1..n+1) / lcm(1..n): p when n+1 is a power of the prime p, else 1.
inline Natural lcm_step(std::uint64_t n)
{
    const Factorization f = factorize(Natural(n) + 1);
    Natural step = f.is_prime_power() ? f.factors.front().prime : Natural(1);
    if (step * lcm_range(1, n) != lcm_range(1, n + 1)) {
        throw std::logic_error("lcm step mismatch at n = " + std::to_string(n));
    }
    return step;
}

/// Entry n of diagonal D_k: [n+k over n] = lcm(k+1..k+n) / lcm(1..n).
struct DiagonalEntry {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    Natural value;
    std::uint64_t omega = 0;
};

namespace detail {

inline std::vector<DiagonalEntry> diagonal_entries(std::uint64_t k, std::uint64_t count)
{
    std::vector<DiagonalEntry> out;
    out.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        DiagonalEntry e{k, n, lcm_binomial(n + k, n), 0};
        e.omega = omega(e.value);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace detail

/// Entries n = 0 .. count-1 of D_k. Throws std::logic_error if some entry
/// has more than k prime factors.
inline std::vector<DiagonalEntry> diagonal(std::uint64_t k, std::uint64_t count)
{
    auto entries = detail::diagonal_entries(k, count);
    for (const auto& e : entries) {
        if (e.omega > k) {
            throw std::logic_error("Omega(" + e.value.str() + ") = " + std::to_string(e.omega) +
                                   " > " + std::to_string(k) + " on diagonal " + std::to_string(k));
        }
    }
    return entries;
}

inline bool omega_diagonal_check(std::uint64_t k, std::uint64_t count)
{
    for (const auto& e : detail::diagonal_entries(k, count)) {
        if (e.omega > k) return false;
    }
    return true;
}

struct EqualityRecord {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    bool equal = false;

    friend bool operator==(const EqualityRecord&, const EqualityRecord&) = default;
};

/// Every (n, k) with k <= n <= max_n and [n k] == C(n,k), row-major.
inline std::vector<EqualityRecord> equality_set(std::uint64_t max_n)
{
    std::vector<EqualityRecord> out;
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            if (lcm_binomial(n, k) == binomial(n, k)) out.push_back({n, k, true});
        }
    }
    return out;
}

/// Both sides of sum_k [n k] x^k <= (1 + x)^n at x = x_num / x_den, scaled
/// by x_den^n so that they are integers.
struct PowerSumSides {
    Natural lhs;
    Natural rhs;

    bool holds() const { return lhs <= rhs; }
};

inline PowerSumSides power_sum_sides(std::uint64_t n, const Natural& x_num, const Natural& x_den)
{
    if (x_den == 0) {
        throw error(errc::zero_denominator, "x = " + x_num.str() + "/0");
    }
    PowerSumSides sides;
    const unsigned e = static_cast<unsigned>(n);
    const std::vector<Natural> row = lcm_binomial_row(n);
    // sum_k row[k] num^k den^(n-k)
    Natural num_pow = 1;
    Natural den_pow = boost::multiprecision::pow(x_den, e);
    for (std::uint64_t k = 0; k <= n; ++k) {
        sides.lhs += row[k] * num_pow * den_pow;
        num_pow *= x_num;
        if (k < n) den_pow /= x_den;
    }
    sides.rhs = boost::multiprecision::pow(Natural(x_den + x_num), e);
    return sides;
}

inline bool check_power_sum_inequality(std::uint64_t n, const Natural& x_num, const Natural& x_den)
{
    return power_sum_sides(n, x_num, x_den).holds();
}

/// lcm(1..n) against 2^n lcm(1..ceil(n/2)) and against n 4^n.
struct LcmBound {
    Natural lcm;
    Natural bound;
    Natural halving_bound;
    bool halving_holds = false;
    bool holds = false;
};

inline LcmBound check_lcm_upper_bound(std::uint64_t n)
{
    if (n == 0) {
        throw error(errc::zero_input, "lcm bound needs n >= 1");
    }
    LcmBound r;
    r.lcm = lcm_range(1, n);
    r.bound = Natural(n) << (2 * n);
    r.halving_bound = lcm_range(1, (n + 1) / 2) << n;
    r.halving_holds = r.lcm <= r.halving_bound;
    r.holds = r.halving_holds && r.lcm <= r.bound;
    return r;
}

/// n + ceil(n/2) + ceil(n/4) + ... down to the term 1 (excluded), the
/// exponent reached by unrolling lcm(1..n) <= 2^n lcm(1..ceil(n/2)).
inline std::uint64_t halving_exponent(std::uint64_t n)
{
    std::uint64_t e = 0;
    while (n > 1) {
        e += n;
        n = (n + 1) / 2;
    }
    return e;
}

struct CompositionTriple {
    Natural left;
    Natural right;
    Natural result;

    friend bool operator==(const CompositionTriple&, const CompositionTriple&) = default;
};

struct NoLawWitness {
    CompositionTriple first;
    CompositionTriple second;

    /// Same operands, different results: no binary law x * y reproduces the rows.
    bool contradicts() const
    {
        return first.left == second.left && first.right == second.right && first.result != second.result;
    }
};

/// ([2 1], [2 2], [3 2]) and ([4 3], [4 4], [5 4]), computed live.
inline NoLawWitness no_composition_law_witness()
{
    return {{lcm_binomial(2, 1), lcm_binomial(2, 2), lcm_binomial(3, 2)},
            {lcm_binomial(4, 3), lcm_binomial(4, 4), lcm_binomial(5, 4)}};
}

} // namespace lcmbinom

#endif // LCMBINOM_ANALYSIS_HPP
