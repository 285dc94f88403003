#include "daisy/arith.hpp"
#include "daisy/combinations.hpp"
#include "daisy/parallel.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <set>
#include <stdexcept>
#include <vector>

using namespace daisy;

TEST(Binomial, SmallValues)
{
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(4, 6), 0);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(33, 7), 4272048);
}

TEST(Binomial, AgreesWithPascalTriangle)
{
    for (unsigned n = 0; n <= 100; n += 3) {
        for (unsigned k = 0; k <= n + 2; ++k) {
            oracle::u128 want = oracle::pascal(n, k);
            Integer hi = Integer(static_cast<unsigned long>(want >> 64));
            Integer lo = Integer(static_cast<unsigned long>(want & ~0ULL));
            Integer expect = hi * ipow(Integer(2), 64) + lo;
            ASSERT_EQ(binomial(n, k), expect) << n << " choose " << k;
        }
    }
}

TEST(Binomial, SignedTopIsZeroBelowK)
{
    EXPECT_EQ(binomial_signed(-3, 2), 0);
    EXPECT_EQ(binomial_signed(1, 3), 0);
    EXPECT_EQ(binomial_signed(6, 2), 15);
    EXPECT_EQ(binomial_signed(6, -1), 0);
    EXPECT_EQ(binomial(Integer(-4), 2), 0);
    EXPECT_EQ(binomial(Integer("1000000000000", 10), 2), Integer("499999999999500000000000", 10));
}

TEST(Binomial, SaturatingU64)
{
    EXPECT_EQ(binomial_u64(33, 7), 4272048u);
    EXPECT_EQ(binomial_u64(3, 5), 0u);
    EXPECT_EQ(binomial_u64(200, 100), UINT64_MAX);
    EXPECT_EQ(binomial_u64(67, 33), oracle::pascal64(67, 33));
}

TEST(Rational, RpowNegativeExponent)
{
    EXPECT_EQ(rpow(2, -3), Rational(1, 8));
    EXPECT_EQ(rpow(3, 2), Rational(9));
    EXPECT_EQ(rpow(5, 0), Rational(1));
}

TEST(Rational, FloorAndCeil)
{
    EXPECT_EQ(floor_of(Rational(7, 2)), 3);
    EXPECT_EQ(ceil_of(Rational(7, 2)), 4);
    EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
    EXPECT_EQ(ceil_of(Rational(6, 3)), 2);
}

TEST(Decimal, RoundsDown)
{
    EXPECT_EQ(to_decimal_floor(Rational(2, 3)), "0.666666");
    EXPECT_EQ(to_decimal_floor(Rational(1, 8), 2), "0.12");
    EXPECT_EQ(to_decimal_floor(Rational(6217014)), "6217014");
    EXPECT_EQ(to_decimal_floor(Rational(-9, 125)), "-0.072000");
    EXPECT_EQ(to_decimal_floor(Rational(-1, 3), 3), "-0.334");
    EXPECT_EQ(to_decimal_floor(Rational(1, 1000000000), 6), "0.000000");
}

TEST(Decimal, NeverExceedsValue)
{
    for (long p = -40; p <= 40; p += 7) {
        for (long q = 1; q <= 30; q += 4) {
            Rational v(p, q);
            v.canonicalize();
            EXPECT_LE(parse_rational(to_decimal_floor(v, 4)), v) << p << "/" << q;
        }
    }
}

TEST(Parse, Forms)
{
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("0.034701"), Rational(34701, 1000000));
    EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("-2.25"), Rational(-9, 4));
    EXPECT_EQ(parse_rational("012"), Rational(12));
    EXPECT_EQ(parse_rational("7."), Rational(7));
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_EQ(to_fraction_string(Rational(5)), "5/1");
}

TEST(Combinations, VisitsEverySubsetInLexOrder)
{
    std::vector<std::vector<Vertex>> seen;
    for_each_combination(6, 3, [&](std::span<const Vertex> a) { seen.emplace_back(a.begin(), a.end()); });
    std::vector<std::vector<unsigned>> expect;
    oracle::subsets(6, 3, [&](const oracle::Set& s) { expect.push_back(s); });
    ASSERT_EQ(seen.size(), expect.size());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        EXPECT_TRUE(std::equal(seen[i].begin(), seen[i].end(), expect[i].begin()));
    }
}

TEST(Combinations, FirstElementPartitions)
{
    std::uint64_t total = 0;
    for (unsigned first = 0; first + 4 <= 9; ++first) {
        for_each_combination_from(9, 4, first, [&](std::span<const Vertex> a) {
            EXPECT_EQ(a[0], first);
            ++total;
        });
    }
    EXPECT_EQ(total, 126u);
}

TEST(Combinations, EarlyStop)
{
    int calls = 0;
    for_each_combination(10, 2, [&](std::span<const Vertex>) { return ++calls < 5; });
    EXPECT_EQ(calls, 5);
}

TEST(Combinations, ColexRankIsBijective)
{
    BinomialTable table(12, 5);
    std::set<std::uint64_t> ranks;
    for_each_combination(12, 5, [&](std::span<const Vertex> a) { ranks.insert(colex_rank(a, table)); });
    ASSERT_EQ(ranks.size(), 792u);
    EXPECT_EQ(*ranks.begin(), 0u);
    EXPECT_EQ(*ranks.rbegin(), 791u);
}

TEST(Combinations, BudgetGuard)
{
    EXPECT_THROW(check_budget(60, 30, 1000, "test"), BudgetExceeded);
    EXPECT_NO_THROW(check_budget(10, 3, 120, "test"));
}

TEST(Parallel, RunsEveryTaskOnce)
{
    std::vector<std::atomic<int>> hits(100);
    run_tasks(100, 4, [&](std::size_t i) { ++hits[i]; });
    for (auto& h : hits) {
        EXPECT_EQ(h.load(), 1);
    }
}

TEST(Parallel, PropagatesExceptions)
{
    EXPECT_THROW(run_tasks(10, 3,
                           [](std::size_t i) {
                               if (i == 7) {
                                   throw std::runtime_error("boom");
                               }
                           }),
                 std::runtime_error);
    EXPECT_GE(resolve_threads(0), 1u);
    EXPECT_EQ(resolve_threads(3), 3u);
}
