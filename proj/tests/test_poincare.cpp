#include <gtest/gtest.h>

#include "superschur/poincare.hpp"
#include "superschur/qseries.hpp"

using namespace superschur;

namespace {

std::vector<Integer> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

Multiplicities& shared() {
  static Multiplicities mult;
  return mult;
}

}  // namespace

TEST(MPrimeChar, Examples) {
  auto& mult = shared();
  EXPECT_EQ(mult.m_prime_char({2}, {1, 1}), 2);
  EXPECT_EQ(mult.m_prime_char({}, {1, 1}), 0);
  for (int n = 0; n <= 6; ++n) {
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(mult.m_prime_char(Partition{n}, {k, 0}), static_cast<long>(enumerate(n, {.max_height = k}).size()))
          << n << " " << k;
    }
  }
}

TEST(PSeries, Examples) {
  auto& mult = shared();
  EXPECT_EQ(p_series(mult, SeriesMode::Prime, {1, 1}, 1, 0, 3).univariate(), ints({0, 1, 2, 3}));
  EXPECT_EQ(p_series(mult, SeriesMode::Prime, {1, 1}, 0, 1, 5).univariate(), ints({0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(p_series(mult, SeriesMode::Plain, {1, 1}, 1, 0, 3).univariate(), ints({1, 1, 2, 3}));
  EXPECT_THROW(p_series(mult, SeriesMode::Plain, {1, 1}, 0, 0, 3), InvalidArgument);
  EXPECT_THROW(p_series(mult, SeriesMode::Plain, {1, 1}, 2, 0, 3).univariate(), InvalidArgument);
}

TEST(PSeries, OneVariableMatchesClosedForms) {
  auto& mult = shared();
  for (Hook h : {Hook{1, 1}, Hook{2, 1}, Hook{1, 2}, Hook{1, 0}}) {
    const auto even = p_series(mult, SeriesMode::Prime, h, 1, 0, 8);
    EXPECT_EQ(even.univariate(), closed_form_series(ClosedForm::TracesOneEven, h, 8).coefficients()) << h.str();
  }
  for (Hook h : {Hook{1, 1}, Hook{2, 1}}) {
    const auto odd = p_series(mult, SeriesMode::Prime, h, 0, 1, 8);
    EXPECT_EQ(odd.univariate(), closed_form_series(ClosedForm::SupertracesOneOdd, h, 8).coefficients()) << h.str();
  }
}

TEST(PSeries, PlainEqualsDiagonalSumOfPrimes) {
  auto& mult = shared();
  for (Hook h : {Hook{1, 1}, Hook{2, 1}}) {
    for (int n = 1; n <= 2; ++n) {
      EXPECT_EQ(p_series(mult, SeriesMode::Plain, h, n, 0, 4), diagonal_prime_sum(mult, h, n, 0, 4))
          << h.str() << " n=" << n;
    }
  }
  EXPECT_EQ(p_series(mult, SeriesMode::Plain, {1, 1}, 1, 1, 4), diagonal_prime_sum(mult, {1, 1}, 1, 1, 4));
}

TEST(PSeries, CharacterRouteAgrees) {
  auto& mult = shared();
  for (Hook h : {Hook{1, 1}, Hook{2, 1}}) {
    for (SeriesMode mode : {SeriesMode::Prime, SeriesMode::BarPrime}) {
      EXPECT_EQ(p_series(mult, mode, h, 2, 0, 4, Route::Residue), p_series(mult, mode, h, 2, 0, 4, Route::Character))
          << h.str() << " " << mode_name(mode);
    }
  }
}

TEST(PSeries, CoefficientsAreNonnegative) {
  auto& mult = shared();
  for (SeriesMode mode : {SeriesMode::Plain, SeriesMode::Prime, SeriesMode::Bar, SeriesMode::BarPrime}) {
    const auto s = p_series(mult, mode, {2, 1}, 1, 1, 4);
    for (const auto& [mono, c] : s.poly.terms()) {
      EXPECT_GT(c, 0) << mode_name(mode);
      for (int v = 0; v < 2; ++v) EXPECT_GE(mono[static_cast<std::size_t>(v)], 0);
    }
  }
}

TEST(PSeries, SymmetricInTheEvenVariables) {
  auto& mult = shared();
  const auto s = p_series(mult, SeriesMode::Prime, {1, 1}, 2, 0, 5);
  const std::vector<SignedMonomial> swap{{1, Monomial::unit(1)}, {1, Monomial::unit(0)}};
  EXPECT_EQ(substitute(s.poly, s.poly.table(), swap), s.poly);
}

TEST(PSeries, DeterministicAcrossThreadCounts) {
  Multiplicities a, b;
  const auto one = p_series(a, SeriesMode::Prime, {2, 1}, 2, 0, 4, Route::Residue, 1);
  const auto many = p_series(b, SeriesMode::Prime, {2, 1}, 2, 0, 4, Route::Residue, 4);
  EXPECT_EQ(one.poly.to_string(), many.poly.to_string());
}

TEST(VerifyBudzik, Examples) {
  auto& mult = shared();
  const auto r = verify_budzik(mult, {2}, {1, 1});
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.rhs, 2);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.to_json(), R"({"lambda":[2],"k":1,"l":1,"lhs":2,"rhs":2,"pass":true})");
  const auto empty = verify_budzik(mult, {}, {1, 1});
  EXPECT_EQ(empty.lhs, 0);
  EXPECT_TRUE(empty.pass);
  EXPECT_EQ(empty.to_json(), R"({"lambda":[],"k":1,"l":1,"lhs":0,"rhs":0,"pass":true})");
  const auto column = verify_budzik(mult, {1, 1}, {1, 1});
  EXPECT_EQ(column.lhs, 0);
  EXPECT_TRUE(column.pass);
}

TEST(DerivativeRelation, Examples) {
  auto& mult = shared();
  EXPECT_TRUE(check_derivative_relation(mult, {1, 1}, 1, 4, true).holds);
  EXPECT_TRUE(check_derivative_relation(mult, {1, 1}, 1, 4, false).holds);
  EXPECT_TRUE(check_derivative_relation(mult, {1, 0}, 1, 4, false).holds);
  EXPECT_TRUE(check_derivative_relation(mult, {1, 0}, 1, 4, true).holds);
  EXPECT_THROW(check_derivative_relation(mult, {1, 1}, 1, 0, true), InvalidArgument);
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                 if (i == 7) throw InvalidArgument("boom");
               }),
               InvalidArgument);
  std::vector<int> out(20, 0);
  parallel_for(out.size(), 4, [&](std::size_t i) { out[i] = static_cast<int>(i) * 2; });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i) * 2);
}
