// Randomized invariants with fixed seeds.

#include <lcmbinom/analysis.hpp>
#include <lcmbinom/core.hpp>
#include <lcmbinom/periods.hpp>

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using lcmbinom::Natural;

namespace {

std::mt19937_64& rng()
{
    static std::mt19937_64 gen(0x1cb17a5eULL);
    return gen;
}

std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
{
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

Natural random_natural(unsigned bits)
{
    Natural x = 0;
    for (unsigned i = 0; i < bits; i += 64) x = (x << 64) | rng()();
    return x >> ((bits + 63) / 64 * 64 - bits);
}

} // namespace

TEST(Property, FactorizationRoundTrip)
{
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t x = uniform(1, 1'000'000'000'000ULL);
        const auto f = lcmbinom::factorize(x);
        EXPECT_EQ(f.value(), x);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            EXPECT_GE(f.factors[i].exponent, 1u);
            EXPECT_TRUE(oracle::is_prime(static_cast<std::uint64_t>(f.factors[i].prime)));
            if (i > 0) { EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime); }
        }
        EXPECT_EQ(lcmbinom::omega(x), f.omega());
    }
}

TEST(Property, GcdLcmAgainstMachineWords)
{
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t a = uniform(0, 1ULL << 40), b = uniform(0, 1ULL << 40);
        EXPECT_EQ(lcmbinom::gcd(a, b), std::gcd(a, b));
    }
    for (int trial = 0; trial < 300; ++trial) {
        const Natural a = random_natural(300) + 1, b = random_natural(200) + 1;
        const Natural g = lcmbinom::gcd(a, b);
        EXPECT_EQ(a % g, 0);
        EXPECT_EQ(b % g, 0);
        EXPECT_EQ(lcmbinom::gcd(a / g, b / g), 1);
        EXPECT_EQ(lcmbinom::lcm(a, b) * g, a * b);
    }
}

TEST(Property, DivisibilityAtRandomCells)
{
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t n = uniform(0, 2000), k = uniform(0, n);
        const Natural c = lcmbinom::binomial(n, k);
        const Natural l = lcmbinom::lcm_binomial(n, k);
        ASSERT_EQ(c % l, 0) << n << "," << k;
    }
}

TEST(Property, ValuationsAtRandomCells)
{
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t n = uniform(1, 1500), k = uniform(1, n);
        std::uint64_t p = uniform(2, 200);
        while (!oracle::is_prime(p)) ++p;
        const auto legendre = lcmbinom::vp_binomial_legendre(n, k, p);
        const auto window = lcmbinom::vp_lcm_binomial(n, k, p);
        EXPECT_EQ(legendre, oracle::vp_big(lcmbinom::binomial(n, k), p));
        EXPECT_EQ(window, oracle::vp_big(lcmbinom::lcm_binomial(n, k), p));
        EXPECT_GE(legendre, window);
    }
}

TEST(Property, PeriodHoldsFarBeyondHorizon)
{
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t k = uniform(0, 12);
        const auto t = static_cast<std::uint64_t>(lcmbinom::exact_period(k).exact_period);
        const std::uint64_t n = uniform(k, 1'000'000);
        ASSERT_EQ(lcmbinom::ratio(n, k), lcmbinom::ratio(n + t, k)) << "k=" << k << " n=" << n;
    }
}

TEST(Property, PowerSumAtRandomRationals)
{
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t n = uniform(0, 80);
        const std::uint64_t num = uniform(0, 50), den = uniform(1, 50);
        const auto sides = lcmbinom::power_sum_sides(n, num, den);
        EXPECT_TRUE(sides.holds()) << n << " " << num << "/" << den;
    }
}
