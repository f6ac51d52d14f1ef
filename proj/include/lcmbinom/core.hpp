#ifndef LCMBINOM_CORE_HPP
#define LCMBINOM_CORE_HPP

// Exact integer machinery for the lcm-binomial triangle:
//
//   [n k] = lcm(n, n-1, ..., n-k+1) / lcm(1, 2, ..., k)
//
// together with the ordinary binomial C(n,k), p-adic valuations and
// prime-factor counting. Everything here is a pure function.

#include <lcmbinom/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcmbinom {

/// Arbitrary-precision integer; every value we hand out is nonnegative.
using Natural = boost::multiprecision::cpp_int;

namespace detail {

inline std::string str(const Natural& x) { return x.str(); }

/// q = num / den, throwing std::logic_error when den does not divide num.
/// `what` names the identity that guarantees exactness.
inline Natural exact_divide(const Natural& num, const Natural& den, const char* what)
{
    Natural q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw std::logic_error(std::string("inexact division (") + what + "): " + num.str() +
                               " / " + den.str());
    }
    return q;
}

inline bool fits_u64(const Natural& x)
{
    return x <= Natural(std::numeric_limits<std::uint64_t>::max());
}

} // namespace detail

inline Natural gcd(const Natural& a, const Natural& b)
{
    return boost::multiprecision::gcd(a, b);
}

/// lcm of two positive values.
inline Natural lcm(const Natural& a, const Natural& b)
{
    if (a == 0 || b == 0) {
        throw error(errc::zero_input, "lcm of zero");
    }
    return a / gcd(a, b) * b;
}

/// lcm(lo, lo+1, ..., hi), with lcm of an empty range (lo > hi) equal to 1.
inline Natural lcm_range(std::uint64_t lo, std::uint64_t hi)
{
    if (lo == 0) {
        throw error(errc::range_contains_zero, "lcm range [0, " + std::to_string(hi) + "]");
    }
    Natural acc = 1;
    for (std::uint64_t m = lo; m <= hi; ++m) {
        // acc is a multiple of every earlier term, so only gcd(acc, m) is needed.
        const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(acc % m), m);
        acc *= m / g;
        if (m == hi) break;
    }
    return acc;
}

/// C(n, k) by the running product r <- r * (n - i) / (i + 1), integral at every step.
inline Natural binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        throw error(errc::k_exceeds_n, "binomial(" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
    k = std::min(k, n - k);
    Natural r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

/// [n k]. The division is checked: a remainder would falsify integrality.
inline Natural lcm_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        throw error(errc::k_exceeds_n,
                    "lcm_binomial(" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
    return detail::exact_divide(lcm_range(n - k + 1, n), lcm_range(1, k), "lcm-binomial integrality");
}

/// Row n of the triangle, [n 0] .. [n n], growing both lcm's one term at a time.
inline std::vector<Natural> lcm_binomial_row(std::uint64_t n)
{
    std::vector<Natural> row;
    row.reserve(n + 1);
    Natural window = 1; // lcm(n-k+1 .. n)
    Natural head = 1;   // lcm(1 .. k)
    row.push_back(1);
    for (std::uint64_t k = 1; k <= n; ++k) {
        window = lcm(window, Natural(n - k + 1));
        head = lcm(head, Natural(k));
        row.push_back(detail::exact_divide(window, head, "lcm-binomial integrality"));
    }
    return row;
}

/// Deterministic trial division.
constexpr bool is_prime(std::uint64_t p) noexcept
{
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (std::uint64_t d = 5; d <= p / d; d += 6) {
        if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
}

namespace detail {

inline void require_prime(std::uint64_t p)
{
    if (!is_prime(p)) {
        throw error(errc::not_prime, std::to_string(p));
    }
}

/// floor(n / p^alpha) for alpha = 1, 2, ... while p^alpha <= n, without overflow.
template <class F>
void for_each_prime_power_upto(std::uint64_t n, std::uint64_t p, F&& f)
{
    for (std::uint64_t pa = p; pa <= n;) {
        f(pa);
        if (pa > n / p) break;
        pa *= p;
    }
}

} // namespace detail

/// p-adic valuation of x >= 1.
inline std::uint64_t vp(const Natural& x, std::uint64_t p)
{
    if (x == 0) {
        throw error(errc::zero_input, "vp of 0");
    }
    detail::require_prime(p);
    std::uint64_t alpha = 0;
    Natural q = x, r;
    const Natural prime = p;
    for (;;) {
        Natural next;
        boost::multiprecision::divide_qr(q, prime, next, r);
        if (r != 0) break;
        q = std::move(next);
        ++alpha;
    }
    return alpha;
}

/// v_p(C(n,k)) as the Legendre floor sum
///   sum_{alpha >= 1} floor(n/p^a) - floor(k/p^a) - floor((n-k)/p^a).
inline std::uint64_t vp_binomial_legendre(std::uint64_t n, std::uint64_t k, std::uint64_t p)
{
    if (k > n) {
        throw error(errc::k_exceeds_n, "vp_binomial_legendre");
    }
    detail::require_prime(p);
    std::uint64_t total = 0;
    detail::for_each_prime_power_upto(n, p, [&](std::uint64_t pa) {
        total += n / pa - k / pa - (n - k) / pa;
    });
    return total;
}

/// Largest alpha such that p^alpha divides some integer of (n-k, n].
inline std::uint64_t vp_lcm_window(std::uint64_t n, std::uint64_t k, std::uint64_t p)
{
    std::uint64_t a = 0;
    detail::for_each_prime_power_upto(n, p, [&](std::uint64_t pa) {
        if (n / pa - (n - k) / pa >= 1) ++a;
    });
    return a;
}

/// v_p([n k]) = a - b, where a is the top exponent of p hit by (n-k, n]
/// and b the top exponent hit by [1, k].
inline std::uint64_t vp_lcm_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p)
{
    if (k > n) {
        throw error(errc::k_exceeds_n, "vp_lcm_binomial");
    }
    detail::require_prime(p);
    // The window count floor(n/p^a) - floor((n-k)/p^a) is non-increasing in a,
    // so counting the a's with a hit yields the maximum.
    const std::uint64_t a = vp_lcm_window(n, k, p);
    const std::uint64_t b = vp_lcm_window(k, k, p);
    if (a < b) {
        throw std::logic_error("lcm-binomial valuation a < b at n=" + std::to_string(n) +
                               " k=" + std::to_string(k) + " p=" + std::to_string(p));
    }
    return a - b;
}

struct PrimePower {
    Natural prime;
    std::uint64_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
struct Factorization {
    std::vector<PrimePower> factors;

    /// Big omega: prime factors counted with multiplicity.
    std::uint64_t omega() const noexcept
    {
        std::uint64_t total = 0;
        for (const auto& f : factors) total += f.exponent;
        return total;
    }

    Natural value() const
    {
        Natural v = 1;
        for (const auto& f : factors) v *= boost::multiprecision::pow(f.prime, static_cast<unsigned>(f.exponent));
        return v;
    }

    bool is_prime_power() const noexcept { return factors.size() == 1; }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

// 2, 3, 5 and then a mod-30 wheel starting at 7.
inline constexpr std::uint64_t wheel_steps[8] = {4, 2, 4, 2, 4, 6, 2, 6};

inline void factor_u64(std::uint64_t x, Factorization& out)
{
    auto take = [&](std::uint64_t d) {
        if (x % d != 0) return;
        PrimePower pp{d, 0};
        while (x % d == 0) {
            x /= d;
            ++pp.exponent;
        }
        out.factors.push_back(std::move(pp));
    };
    take(2);
    take(3);
    take(5);
    std::uint64_t d = 7;
    for (std::size_t i = 0; d <= x / d; d += wheel_steps[i], i = (i + 1) % 8) {
        take(d);
    }
    if (x > 1) out.factors.push_back({x, 1});
}

} // namespace detail

/// Trial-division factorization; meant for desk-scale inputs.
inline Factorization factorize(const Natural& x)
{
    if (x == 0) {
        throw error(errc::zero_input, "factorize(0)");
    }
    Factorization out;
    if (detail::fits_u64(x)) {
        detail::factor_u64(static_cast<std::uint64_t>(x), out);
        return out;
    }
    Natural rest = x;
    auto take = [&](std::uint64_t d) {
        Natural q, r;
        PrimePower pp{d, 0};
        for (;;) {
            boost::multiprecision::divide_qr(rest, Natural(d), q, r);
            if (r != 0) break;
            rest = std::move(q);
            ++pp.exponent;
        }
        if (pp.exponent > 0) out.factors.push_back(std::move(pp));
    };
    take(2);
    take(3);
    take(5);
    std::uint64_t d = 7;
    for (std::size_t i = 0; Natural(d) * d <= rest; d += detail::wheel_steps[i], i = (i + 1) % 8) {
        take(d);
        if (detail::fits_u64(rest)) {
            // Finish in machine words; remaining factors are all > d.
            Factorization tail;
            detail::factor_u64(static_cast<std::uint64_t>(rest), tail);
            for (auto& f : tail.factors) out.factors.push_back(std::move(f));
            return out;
        }
    }
    if (rest > 1) out.factors.push_back({rest, 1});
    return out;
}

inline std::uint64_t omega(const Natural& x) { return factorize(x).omega(); }

/// One cell of the triangle beside its binomial counterpart.
struct TriangleEntry {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    Natural lcm_binom;
    Natural binom;
    Natural ratio;
    bool differs = false;

    friend bool operator==(const TriangleEntry&, const TriangleEntry&) = default;
};

inline TriangleEntry make_entry(std::uint64_t n, std::uint64_t k)
{
    TriangleEntry e;
    e.n = n;
    e.k = k;
    e.lcm_binom = lcm_binomial(n, k);
    e.binom = binomial(n, k);
    e.ratio = detail::exact_divide(e.binom, e.lcm_binom, "lcm-binomial divides binomial");
    e.differs = e.lcm_binom != e.binom;
    return e;
}

/// Rows 0 .. rows-1, read by rows.
inline std::vector<TriangleEntry> triangle_entries(std::uint64_t rows)
{
    std::vector<TriangleEntry> out;
    out.reserve(rows * (rows + 1) / 2);
    for (std::uint64_t n = 0; n < rows; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) out.push_back(make_entry(n, k));
    }
    return out;
}

} // namespace lcmbinom

#endif // LCMBINOM_CORE_HPP
