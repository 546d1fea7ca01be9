#include <gtest/gtest.h>

#include "superschur/qseries.hpp"

using namespace superschur;

namespace {

TruncatedSeries series(std::vector<long> c, std::string var = "u") {
  std::vector<Integer> big(c.begin(), c.end());
  return TruncatedSeries::from_coefficients(std::move(big), std::move(var));
}

// Self-conjugate partitions of n are in bijection with partitions into distinct odd parts.
std::vector<long> distinct_odd_parts(int degree) {
  std::vector<long> ways(static_cast<std::size_t>(degree) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= degree; part += 2) {
    for (int s = degree; s >= part; --s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  }
  return ways;
}

// Schoolbook product of explicit polynomials, truncated.
std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, int degree) {
  std::vector<long> r(static_cast<std::size_t>(degree) + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(degree); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

TEST(TruncatedSeries, ArithmeticStaysWithinDegree) {
  const auto a = series({1, 1, 0, 0});
  const auto b = series({1, -1, 0, 0});
  EXPECT_EQ(a * b, series({1, 0, -1, 0}));
  EXPECT_EQ(a.inverse() * a, TruncatedSeries::one(3));
  EXPECT_EQ(TruncatedSeries::monomial(2, 3).shifted(2), TruncatedSeries(3));
  EXPECT_EQ(series({0, 0, 5}).valuation(), 2);
  EXPECT_FALSE(TruncatedSeries(4).valuation());
  EXPECT_THROW(series({2, 1}).inverse(), InvalidArgument);
  EXPECT_THROW(a + TruncatedSeries(5), InvalidArgument);
  EXPECT_EQ(series({0, 1, 2, 3}).to_json(), "[0,1,2,3]");
}

TEST(ExpandProduct, Examples) {
  EXPECT_EQ(expand_product({{-1, 1, -1}, {-1, 2, -1}}, 0, 4), series({1, 1, 2, 2, 3}));
  EXPECT_EQ(expand_product({}, 3, 5), TruncatedSeries::monomial(3, 5));
  EXPECT_EQ(expand_product({{1, 1, 1}, {-1, 1, 1}}, 0, 5), series({1, 0, -1, 0, 0, 0}));
  EXPECT_THROW(expand_product({{-1, 0, -1}}, 0, 3), InvalidArgument);
}

TEST(ExpandProduct, HeightBoundedPartitions) {
  for (int k = 1; k <= 4; ++k) {
    std::vector<ProductFactor> f;
    for (int i = 1; i <= k; ++i) f.push_back({-1, i, -1});
    EXPECT_EQ(expand_product(f, 0, 15), gf_partitions({.max_height = k}, 15)) << k;
  }
}

TEST(GfPartitions, Examples) {
  EXPECT_EQ(gf_partitions({.in_hook = Hook{1, 1}}, 4), series({1, 1, 2, 3, 4}));
  EXPECT_EQ(gf_partitions({.in_hook = Hook{1, 1}, .self_conjugate = true}, 5), series({1, 1, 0, 1, 0, 1}));
  EXPECT_EQ(gf_partitions({.typical = Hook{1, 1}}, 3), series({0, 1, 2, 3}));
}

TEST(GfPartitions, TypicalsAreTheHookDifference) {
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      const auto diff = gf_partitions({.in_hook = Hook{k, l}}, 12) - gf_partitions({.in_hook = Hook{k - 1, l - 1}}, 12);
      EXPECT_EQ(diff, gf_partitions({.typical = Hook{k, l}}, 12)) << k << "," << l;
    }
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_series(ClosedForm::TracesOneEven, {1, 1}, 3), series({0, 1, 2, 3}, "t"));
  EXPECT_EQ(closed_form_series(ClosedForm::TracesOneEven, {1, 0}, 3), series({1, 1, 1, 1}, "t"));
  EXPECT_EQ(closed_form_series(ClosedForm::SupertracesOneOdd, {1, 1}, 5), series({0, 1, 0, 1, 0, 1}));
  EXPECT_THROW(closed_form_series(ClosedForm::SupertracesOneOdd, {1, 2}, 5), InvalidArgument);
}

TEST(ClosedForm, EvenFormCountsTypicals) {
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      if (k + l == 0) continue;
      const auto closed = closed_form_series(ClosedForm::TracesOneEven, {k, l}, 12);
      // With min(k, l) = 0 there is no smaller hook, so every hook member counts.
      const auto counted = std::min(k, l) == 0 ? gf_partitions({.in_hook = Hook{k, l}}, 12)
                                               : gf_partitions({.typical = Hook{k, l}}, 12);
      EXPECT_EQ(closed.coefficients(), counted.coefficients()) << k << "," << l;
    }
  }
}

TEST(ClosedForm, OddFormCountsSelfConjugateTypicals) {
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= k; ++l) {
      const auto closed = closed_form_series(ClosedForm::SupertracesOneOdd, {k, l}, 12);
      const auto counted = gf_partitions({.in_hook = Hook{k, l}, .self_conjugate = true}, 12) -
                           gf_partitions({.in_hook = Hook{k - 1, l - 1}, .self_conjugate = true}, 12);
      EXPECT_EQ(closed, counted) << k << "," << l;
    }
  }
}

TEST(U2Pochhammer, MatchesExplicitProduct) {
  std::vector<long> expected{1};
  for (int k = 0; k <= 4; ++k) {
    if (k > 0) {
      std::vector<long> factor(static_cast<std::size_t>(2 * k) + 1, 0);
      factor[0] = 1;
      factor[static_cast<std::size_t>(2 * k)] = -1;
      expected = poly_mul(expected, factor, 20);
    }
    std::vector<long> padded = expected;
    padded.resize(21, 0);
    EXPECT_EQ(u2_pochhammer(k, 20), series(padded)) << k;
  }
}

TEST(LimitIdentity, SelfConjugateSum) {
  const auto r = check_limit_identity(LimitIdentity::SelfConjugateSum, 20);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, series(distinct_odd_parts(20)));
  EXPECT_TRUE(check_limit_identity(LimitIdentity::SelfConjugateSum, 1).holds);
  EXPECT_EQ(check_limit_identity(LimitIdentity::SelfConjugateSum, 1).lhs, series({1, 1}));
  EXPECT_EQ(r.lhs, gf_partitions({.self_conjugate = true}, 20));
}

TEST(LimitIdentity, ShiftedSum) {
  for (int shift = 0; shift <= 3; ++shift) {
    const auto r = check_limit_identity(LimitIdentity::ShiftedSum, 20, shift);
    EXPECT_TRUE(r.holds) << shift;
    EXPECT_EQ(r.rhs, series(distinct_odd_parts(20))) << shift;
  }
}

TEST(LimitIdentity, ProductIndexedBySummandFails) {
  // Summand i = 0 alone already differs from the left side at u^1 when shift = 1.
  const auto r = check_limit_identity(LimitIdentity::ShiftedSum, 20, 1, ShiftedProduct::UpToIndex);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.first_discrepancy, 1);
}

TEST(LimitIdentity, RejectsBadArguments) {
  EXPECT_THROW(check_limit_identity(LimitIdentity::SelfConjugateSum, 0), InvalidArgument);
  EXPECT_THROW(check_limit_identity(LimitIdentity::ShiftedSum, 5, -1), InvalidArgument);
}
