#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "relprime/formulas.hpp"
#include "relprime/oracle.hpp"

namespace relprime {
namespace {

const MobiusTable& mu() {
  static const MobiusTable table(1000);
  return table;
}

BigInt brute(std::vector<std::int64_t> xs, std::vector<std::int64_t> required = {},
             std::optional<std::int64_t> k = std::nullopt) {
  return count_relprime(GroundSet(std::move(xs)), ConstraintSpec{std::move(required), k});
}

TEST(Prefix, Examples) {
  EXPECT_EQ(f_prefix(mu(), 1), 1);
  EXPECT_EQ(f_prefix(mu(), 3), 5);
  EXPECT_EQ(brute({1, 2, 3}), 5);
  EXPECT_EQ(f_prefix(mu(), 4), 11);
  EXPECT_EQ(brute({1, 2, 3, 4}), 11);
  EXPECT_EQ(fk_prefix(mu(), 3, 2), 3);
  EXPECT_EQ(fk_prefix(mu(), 3, 3), 1);
  for (std::int64_t n = 1; n <= 12; ++n) EXPECT_EQ(fk_prefix(mu(), n, n + 1), 0);
}

TEST(Prefix, Errors) {
  EXPECT_THROW(fk_prefix(mu(), 3, 0), std::invalid_argument);
  EXPECT_THROW(f_prefix(mu(), 0), std::invalid_argument);
  const MobiusTable small(5);
  EXPECT_THROW(f_prefix(small, 6), std::out_of_range);
}

TEST(ConstrainedG, Examples) {
  EXPECT_EQ(g_count(mu(), 2, 4, 5), 6);
  EXPECT_EQ(brute({1, 2, 4, 5}, {4}), 6);
  EXPECT_EQ(g_count(mu(), 1, 2, 2), 1);
  EXPECT_EQ(gk_count(mu(), 2, 4, 5, 2), 2);
  EXPECT_EQ(gk_count(mu(), 2, 4, 5, 1), 0);
  BigInt total = 0;
  for (std::int64_t k = 1; k <= 4; ++k) total += gk_count(mu(), 2, 4, 5, k);
  EXPECT_EQ(total, g_count(mu(), 2, 4, 5));
}

TEST(ConstrainedG, RejectsL2InsidePrefix) {
  EXPECT_THROW(g_count(mu(), 3, 1, 5), std::invalid_argument);
  EXPECT_THROW(g_count(mu(), 3, 3, 5), std::invalid_argument);
  EXPECT_THROW(g_count(mu(), 2, 6, 5), std::invalid_argument);
  EXPECT_THROW(gk_count(mu(), 2, 4, 5, 0), std::invalid_argument);
}

TEST(ConstrainedH1, Examples) {
  EXPECT_EQ(h1_count(mu(), 2, 4), 2);
  EXPECT_EQ(h1k_count(mu(), 2, 4, 2), 1);
  for (std::int64_t m = 1; m <= 30; ++m)
    EXPECT_EQ(h1_count(mu(), 1, m), pow2(static_cast<std::uint64_t>(m - 1)));
  EXPECT_THROW(h1_count(mu(), 5, 4), std::invalid_argument);
  EXPECT_THROW(h1k_count(mu(), 2, 4, 0), std::invalid_argument);
}

// With lower index k (instead of k - 1) the d = 1 term alone would count
// subsets of size k + 1.
TEST(ConstrainedH1, LowerIndexIsKMinusOne) {
  EXPECT_EQ(brute({1, 2, 3}, {1}, 1), 1);
  EXPECT_EQ(h1k_count(mu(), 1, 3, 1), 1);
  EXPECT_NE(binom(3 - 1, 1), 1);
}

TEST(ConstrainedH2, Examples) {
  EXPECT_EQ(h2_count(mu(), 2, 3, 4, 5), 3);
  EXPECT_EQ(brute({2, 3, 4, 5}, {2, 4}), 3);
  EXPECT_EQ(h2k_count(mu(), 2, 3, 4, 5, 2), 0);
  // coprime endpoints: the divisor sum has only d = 1
  EXPECT_EQ(h2_count(mu(), 3, 5, 7, 9), pow2(5 + 9 - 3 - 7));
  EXPECT_THROW(h2_count(mu(), 2, 4, 4, 5), std::invalid_argument);
  EXPECT_THROW(h2k_count(mu(), 2, 3, 4, 5, 1), std::invalid_argument);
}

TEST(PrefixUnion, Examples) {
  EXPECT_EQ(f_prefix_union(mu(), 2, 4, 5), 11);
  EXPECT_EQ(brute({1, 2, 4, 5}), 11);
  EXPECT_EQ(fk_prefix_union(mu(), 2, 4, 5, 2), 5);
  for (std::int64_t m1 = 1; m1 < 30; ++m1)
    for (std::int64_t m2 = m1 + 1; m2 <= 30; ++m2)
      EXPECT_EQ(f_prefix_union(mu(), m1, m1 + 1, m2), f_prefix(mu(), m2));
}

TEST(Union, Examples) {
  const IntervalUnion u(Interval(2, 3), Interval(5, 6));
  EXPECT_EQ(f_union(mu(), u), 9);
  EXPECT_EQ(brute({2, 3, 5, 6}), 9);
  EXPECT_EQ(fk_union(mu(), u, 2), 4);
  EXPECT_EQ(f_union(mu(), IntervalUnion(Interval(1, 2), Interval(4, 5))), f_prefix_union(mu(), 2, 4, 5));
}

// Dropping the "-1" inside the sum would give 8 here, not 9.
TEST(Union, MinusOneBelongsInsideTheSum) {
  const IntervalUnion u(Interval(2, 3), Interval(5, 6));
  BigInt without = 0;
  for (std::int64_t d = 1; d <= 6; ++d) {
    const auto e = 3 / d + 6 / d - 1 / d - 4 / d;
    without += mu()[d] * pow2(static_cast<std::uint64_t>(e));
  }
  EXPECT_EQ(without, 8);
  EXPECT_EQ(f_union(mu(), u), brute({2, 3, 5, 6}));
}

TEST(Union, RejectsOverlap) {
  EXPECT_THROW(IntervalUnion(Interval(2, 5), Interval(5, 6)), std::invalid_argument);
  EXPECT_THROW(IntervalUnion(Interval(4, 5), Interval(1, 2)), std::invalid_argument);
  EXPECT_THROW(Interval(3, 2), std::invalid_argument);
  EXPECT_THROW(Interval(0, 2), std::invalid_argument);
  EXPECT_NO_THROW(IntervalUnion(Interval(2, 4), Interval(5, 6)));
}

TEST(Interval, Examples) {
  EXPECT_EQ(f_interval(mu(), 2, 4), 3);
  for (std::int64_t n = 1; n <= 40; ++n) {
    EXPECT_EQ(f_interval(mu(), 1, n), f_prefix(mu(), n));
    EXPECT_EQ(f_interval(mu(), n, n), n == 1 ? 1 : 0);
  }
  EXPECT_THROW(f_interval(mu(), 4, 2), std::invalid_argument);
  EXPECT_THROW(fk_interval(mu(), 2, 4, 0), std::invalid_argument);
}

// Without μ(d) the d = 1 term alone is 2^3 - 1 = 7 > 3.
TEST(Interval, MobiusWeightIsRequired) {
  BigInt unweighted = 0;
  for (std::int64_t d = 1; d <= 4; ++d) unweighted += pow2(static_cast<std::uint64_t>(4 / d - 1 / d)) - 1;
  EXPECT_GT(unweighted, brute({2, 3, 4}));
  EXPECT_EQ(f_interval(mu(), 2, 4), brute({2, 3, 4}));
}

TEST(Interval, SubstitutionIntoUnion) {
  for (std::int64_t m = 2; m <= 40; ++m)
    for (std::int64_t l = 1; l <= m - 1; ++l)
      ASSERT_EQ(f_interval(mu(), l, m), f_union(mu(), IntervalUnion(Interval(l, m - 1), Interval(m, m))));
}

TEST(Properties, CardinalityPartition) {
  auto check = [](const BigInt& total, auto fk, std::int64_t size) {
    BigInt s = 0;
    for (std::int64_t k = 1; k <= size; ++k) s += fk(k);
    EXPECT_EQ(s, total);
  };
  for (std::int64_t n = 1; n <= 25; ++n)
    check(f_prefix(mu(), n), [&](auto k) { return fk_prefix(mu(), n, k); }, n);
  for (std::int64_t l = 1; l <= 25; ++l)
    for (std::int64_t m = l; m <= 25; ++m)
      check(f_interval(mu(), l, m), [&](auto k) { return fk_interval(mu(), l, m, k); }, m - l + 1);
  for (std::int64_t m1 = 1; m1 <= 12; ++m1)
    for (std::int64_t l2 = m1 + 1; l2 <= 15; ++l2)
      for (std::int64_t m2 = l2; m2 <= 15; ++m2)
        check(f_prefix_union(mu(), m1, l2, m2), [&](auto k) { return fk_prefix_union(mu(), m1, l2, m2, k); },
              m1 + m2 - l2 + 1);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> pick(1, 60);
  for (int t = 0; t < 300; ++t) {
    std::int64_t v[4] = {pick(rng), pick(rng), pick(rng), pick(rng)};
    std::sort(std::begin(v), std::end(v));
    if (v[1] == v[2]) continue;
    const IntervalUnion u(Interval(v[0], v[1]), Interval(v[2], v[3]));
    check(f_union(mu(), u), [&](auto k) { return fk_union(mu(), u, k); }, u.size());
  }
}

TEST(Properties, TelescopingPrefixUnion) {
  for (std::int64_t m2 = 2; m2 <= 20; ++m2)
    for (std::int64_t l2 = 2; l2 <= m2; ++l2)
      for (std::int64_t m1 = 1; m1 < l2; ++m1) {
        BigInt lhs = f_prefix_union(mu(), m1, l2, m2);
        for (std::int64_t i = m1 + 1; i <= l2 - 1; ++i) lhs += g_count(mu(), m1, i, m2);
        ASSERT_EQ(lhs, f_prefix(mu(), m2)) << m1 << " " << l2 << " " << m2;
      }
}

TEST(Properties, UnionMonotoneInUpperEnd) {
  for (std::int64_t l1 = 1; l1 <= 8; ++l1)
    for (std::int64_t m1 = l1; m1 <= 10; ++m1)
      for (std::int64_t l2 = m1 + 1; l2 <= 14; ++l2)
        for (std::int64_t m2 = l2; m2 < 30; ++m2)
          ASSERT_LE(f_union(mu(), IntervalUnion(Interval(l1, m1), Interval(l2, m2))),
                    f_union(mu(), IntervalUnion(Interval(l1, m1), Interval(l2, m2 + 1))));
}

TEST(Properties, RandomUnionsMatchOracle) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> pick(1, 200);
  std::uniform_int_distribution<std::int64_t> len(1, 8);
  for (int t = 0; t < 200; ++t) {
    const auto l1 = pick(rng);
    const auto m1 = l1 + len(rng) - 1;
    const auto l2 = m1 + len(rng);
    const auto m2 = l2 + len(rng) - 1;
    const IntervalUnion u(Interval(l1, m1), Interval(l2, m2));
    const GroundSet g(IntervalSet{u});
    ASSERT_EQ(f_union(mu(), u), count_relprime(g)) << to_string(u);
    const auto by_size = count_relprime_by_size(g);
    for (std::int64_t k = 1; k <= u.size(); ++k)
      ASSERT_EQ(fk_union(mu(), u, k), by_size[static_cast<std::size_t>(k)]) << to_string(u) << " k=" << k;
  }
}

TEST(Dispatch, PicksMostSpecificFormula) {
  EXPECT_EQ(count(mu(), Interval(1, 4)).formula, FormulaId::prefix);
  EXPECT_EQ(count(mu(), Interval(2, 4)).formula, FormulaId::interval);
  EXPECT_EQ(count(mu(), IntervalUnion(Interval(1, 2), Interval(4, 5))).formula, FormulaId::prefix_union);
  const auto r = count(mu(), IntervalUnion(Interval(2, 3), Interval(5, 6)), 2);
  EXPECT_EQ(r.formula, FormulaId::union_of_two);
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(r.inputs, (std::vector<std::int64_t>{2, 3, 5, 6}));
  EXPECT_EQ(count(mu(), Interval(1, 3), 2).value, 3);
}

TEST(BigValues, LargeIntervalIsExactAndPositive) {
  const auto v = f_interval(mu(), 1, 1000);
  EXPECT_GT(v, 0);
  EXPECT_LT(v, pow2(1000));
  // almost every subset of [1,1000] is relatively prime
  EXPECT_GT(v, pow2(999));
}

}  // namespace
}  // namespace relprime
