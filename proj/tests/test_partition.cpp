#include <gtest/gtest.h>

#include <set>

#include "superschur/partition.hpp"

using namespace superschur;

namespace {

// Partitions of n into distinct odd parts, counted by a 0/1 knapsack.
long distinct_odd_parts(int n) {
  std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; part += 2) {
    for (int s = n; s >= part; --s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  }
  return ways[static_cast<std::size_t>(n)];
}

// Every weakly decreasing sequence summing to n, built by brute force over bounded vectors.
std::set<std::vector<int>> brute_partitions(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      std::vector<int> sorted = cur;
      std::sort(sorted.rbegin(), sorted.rend());
      out.insert(sorted);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

}  // namespace

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("3,2,1"), Partition({3, 2, 1}));
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_EQ(Partition::parse("∅"), Partition());
  EXPECT_EQ(Partition({3, 2, 1}).str(), "3,2,1");
  EXPECT_EQ(Partition().str(), "");
  EXPECT_THROW(Partition::parse("1,2"), InvalidArgument);
  EXPECT_THROW(Partition::parse("2,,1"), InvalidArgument);
  EXPECT_THROW(Partition::parse("2,0,1"), InvalidArgument);
  EXPECT_THROW(Partition::parse("a"), InvalidArgument);
}

TEST(Partition, OutOfRangePartsReadAsZero) {
  Partition p{2, 1};
  EXPECT_EQ(p.at(0), 2);
  EXPECT_EQ(p.at(5), 0);
  EXPECT_EQ(p.size(), 3);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate({3, 1}), Partition({2, 1, 1}));
  EXPECT_EQ(conjugate({5}), Partition({1, 1, 1, 1, 1}));
  EXPECT_EQ(conjugate({2, 1}), Partition({2, 1}));
  EXPECT_EQ(conjugate({}), Partition());
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : enumerate(n)) {
      EXPECT_EQ(conjugate(conjugate(p)), p);
      EXPECT_EQ(conjugate(p).size(), n);
    }
  }
}

TEST(Partition, ClassifyHook) {
  EXPECT_EQ(classify_hook({3, 3, 3}, {2, 2}), HookClass::Outside);
  EXPECT_EQ(classify_hook({1}, {2, 1}), HookClass::Atypical);
  EXPECT_EQ(classify_hook({2, 1}, {1, 1}), HookClass::Typical);
  EXPECT_EQ(classify_hook({}, {0, 0}), HookClass::Typical);
  EXPECT_EQ(classify_hook({1}, {0, 0}), HookClass::Outside);
  EXPECT_EQ(classify_hook({}, {1, 1}), HookClass::Atypical);
}

TEST(Partition, TypicalIsOutsideTheSmallerHook) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : enumerate(n)) {
      for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
          if (is_typical(p, {k, l})) {
            EXPECT_EQ(classify_hook(p, {k - 1, l - 1}), HookClass::Outside);
          }
          // Typicals are exactly the hook members outside the smaller hook.
          EXPECT_EQ(is_typical(p, {k, l}), in_hook(p, {k, l}) && !in_hook(p, {k - 1, l - 1}));
        }
      }
    }
  }
}

TEST(Partition, EnumerateMatchesBruteForce) {
  for (int n = 0; n <= 9; ++n) {
    auto all = enumerate(n);
    std::set<std::vector<int>> got;
    for (const auto& p : all) got.insert(p.parts());
    EXPECT_EQ(got, brute_partitions(n)) << n;
    EXPECT_TRUE(std::is_sorted(all.rbegin(), all.rend())) << "not lexicographically descending";
  }
}

TEST(Partition, EnumerateWithConstraints) {
  auto h2 = enumerate(4, {.max_height = 2});
  EXPECT_EQ(h2, (std::vector<Partition>{{4}, {3, 1}, {2, 2}}));

  auto sc = enumerate(8, {.self_conjugate = true});
  EXPECT_EQ(sc, (std::vector<Partition>{{4, 2, 1, 1}, {3, 3, 2}}));

  auto hooks = enumerate(4, {.in_hook = Hook{1, 1}, .typical = Hook{1, 1}});
  EXPECT_EQ(hooks.size(), 4u);
}

TEST(Partition, SelfConjugateCountEqualsDistinctOddParts) {
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(static_cast<long>(enumerate(n, {.self_conjugate = true}).size()), distinct_odd_parts(n)) << n;
  }
}

TEST(Partition, AddBoxSuccessors) {
  EXPECT_EQ(add_box_successors({1}), (std::vector<Partition>{{2}, {1, 1}}));
  EXPECT_EQ(add_box_successors({}), (std::vector<Partition>{{1}}));
  EXPECT_EQ(add_box_successors({2, 1}), (std::vector<Partition>{{3, 1}, {2, 2}, {2, 1, 1}}));
  for (const auto& p : enumerate(7)) {
    for (const auto& q : add_box_successors(p)) {
      EXPECT_EQ(q.size(), 8);
      EXPECT_TRUE(q.contains(p));
    }
  }
}

TEST(Partition, TypicalSplit) {
  EXPECT_EQ(typical_split({3, 2}, {2, 1}), std::make_pair(Partition{2, 1}, Partition{}));
  EXPECT_EQ(typical_split({1, 1, 1}, {1, 1}), std::make_pair(Partition{}, Partition{2}));
  EXPECT_EQ(typical_split({3, 3}, {2, 3}), std::make_pair(Partition{}, Partition{}));
  EXPECT_THROW(typical_split({1}, {2, 1}), InvalidArgument);
  for (int n = 0; n <= 9; ++n) {
    for (const auto& p : enumerate(n)) {
      for (Hook h : {Hook{1, 1}, Hook{2, 1}, Hook{1, 2}, Hook{2, 2}}) {
        if (!is_typical(p, h)) continue;
        auto [mu, nu] = typical_split(p, h);
        EXPECT_EQ(p.size(), h.k * h.l + mu.size() + nu.size());
        EXPECT_LE(mu.length(), h.k);
        EXPECT_LE(nu.length(), h.l);
      }
    }
  }
}

TEST(Partition, SquareSplit) {
  auto s = square_split({3, 2, 1}, 2);
  EXPECT_EQ(s.core, Partition({2, 2}));
  EXPECT_EQ(s.right, Partition({1}));
  EXPECT_EQ(s.below, Partition({1}));

  auto inside = square_split({2, 1}, 3);
  EXPECT_EQ(inside.core, Partition({2, 1}));
  EXPECT_TRUE(inside.right.empty());
  EXPECT_TRUE(inside.below.empty());

  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : enumerate(n)) {
      for (int k = 0; k <= 4; ++k) {
        auto sp = square_split(p, k);
        EXPECT_EQ(p.size(), sp.core.size() + sp.right.size() + sp.below.size());
        if (is_self_conjugate(p) && p.at(k) <= k) {
          EXPECT_EQ(sp.right, sp.below);
          EXPECT_TRUE(is_self_conjugate(sp.core));
        }
      }
    }
  }
}

TEST(Partition, SquareSplitIsACorrespondenceOnSelfConjugateTypicals) {
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= k; ++l) {
      std::vector<int> frame(static_cast<std::size_t>(l), k);
      for (int i = l; i < k; ++i) frame.push_back(l);
      const Partition lower(frame);
      std::set<std::pair<Partition, Partition>> seen;
      for (int n = 0; n <= 18; ++n) {
        for (const auto& p : enumerate(n, {.typical = Hook{k, l}, .self_conjugate = true})) {
          auto sp = square_split(p, k);
          EXPECT_TRUE(sp.core.contains(lower)) << p.str();
          EXPECT_LE(sp.right.length(), l) << p.str();
          EXPECT_TRUE(seen.insert({sp.core, sp.right}).second) << "not injective at " << p.str();
        }
      }
    }
  }
}
