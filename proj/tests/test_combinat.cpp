#include "oracles.hpp"

#include "superpi/combinat.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace superpi;

TEST(Partition, RejectsNonIncreasingAndNonPositiveParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_NO_THROW(Partition({3, 3, 1}));
}

TEST(Partition, ConjugateIsAnInvolution) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(p.conjugate().conjugate(), p);
      EXPECT_EQ(p.conjugate().size(), n);
    }
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
}

TEST(Partition, CountsMatchPentagonalRecurrence) {
  for (int n = 0; n <= 15; ++n) {
    EXPECT_EQ(static_cast<std::int64_t>(partitions_of(n).size()), oracle::partition_count(n)) << n;
    EXPECT_EQ(partition_count(n), oracle::partition_count(n)) << n;
  }
}

TEST(Partition, ReverseLexicographicOrder) {
  const auto ps = partitions_of(4);
  ASSERT_EQ(ps.size(), 5u);
  EXPECT_EQ(ps.front(), Partition({4}));
  EXPECT_EQ(ps[1], Partition({3, 1}));
  EXPECT_EQ(ps[2], Partition({2, 2}));
  EXPECT_EQ(ps.back(), Partition({1, 1, 1, 1}));
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
}

TEST(Partition, ContainmentIsDiagramInclusion) {
  EXPECT_TRUE(Partition({3, 2}).contains(Partition({2, 2})));
  EXPECT_FALSE(Partition({3, 2}).contains(Partition({2, 2, 1})));
  EXPECT_TRUE(Partition({1}).contains(Partition()));
}

TEST(Hook, ContainmentAtTheBoundary) {
  const HookSpec h{1, 1};
  EXPECT_TRUE(hook_contains(h, Partition({5, 1, 1, 1})));
  EXPECT_FALSE(hook_contains(h, Partition({5, 2})));
  EXPECT_TRUE(hook_contains({0, 0}, Partition()));
  EXPECT_FALSE(hook_contains({0, 0}, Partition({1})));
  EXPECT_TRUE(hook_contains({1, 0}, Partition({7})));
  EXPECT_TRUE(hook_contains({0, 1}, Partition({1, 1, 1})));
  EXPECT_FALSE(hook_contains({0, 1}, Partition({2})));
}

TEST(Hook, QuadHookNeedsEveryComponent) {
  const QuadHookSpec q{{HookSpec{1, 0}, {0, 0}, {0, 0}, {0, 1}}};
  EXPECT_TRUE(quad_hook_contains(q, {{Partition({3}), Partition(), Partition(), Partition({1, 1})}}));
  EXPECT_FALSE(quad_hook_contains(q, {{Partition({3}), Partition(), Partition(), Partition({2})}}));
  EXPECT_EQ(q.to_string(), "(1,0;0,0;0,0;0,1)");
  EXPECT_EQ(q.flat(), (std::array<int, 8>{1, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(Tableaux, HookLengthFormulaMatchesEnumeration) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) {
      const auto tabs = standard_tableaux(p);
      EXPECT_EQ(static_cast<std::int64_t>(tabs.size()), character_degree(p)) << p.to_string();
      EXPECT_EQ(oracle::count_standard_fillings(p), character_degree(p)) << p.to_string();
      for (const auto& t : tabs) EXPECT_TRUE(t.is_standard());
    }
}

TEST(Tableaux, SumOfSquaredDegreesIsGroupOrder) {
  for (int n = 0; n <= 10; ++n) {
    std::int64_t sum = 0;
    for (const auto& p : partitions_of(n)) sum += character_degree(p) * character_degree(p);
    EXPECT_EQ(sum, factorial(n)) << n;
  }
}

TEST(Tableaux, RowReadingRowsAndColumns) {
  const auto t = Tableau::row_reading(Partition({3, 1}));
  EXPECT_EQ(t.rows(), (std::vector<std::vector<int>>{{1, 2, 3}, {4}}));
  EXPECT_EQ(t.columns(), (std::vector<std::vector<int>>{{1, 4}, {2}, {3}}));
  EXPECT_TRUE(t.is_standard());
  EXPECT_FALSE(Tableau(Partition({2}), {2, 1}).is_standard());
}

TEST(Tableaux, RejectsBadFillings) {
  EXPECT_THROW(Tableau(Partition({2}), {1, 1}), std::invalid_argument);
  EXPECT_THROW(Tableau(Partition({2}), {1}), std::invalid_argument);
}

TEST(Multidegree, CompositionsAndMultinomials) {
  for (int n = 1; n <= 6; ++n) {
    const auto cs = compositions_of(n);
    EXPECT_EQ(static_cast<int>(cs.size()), (n + 3) * (n + 2) * (n + 1) / 6);
    std::set<Multidegree> unique(cs.begin(), cs.end());
    EXPECT_EQ(unique.size(), cs.size());
    std::int64_t sum = 0;
    for (const auto& c : cs) {
      EXPECT_EQ(total(c), n);
      sum += multinomial(c);
    }
    std::int64_t four_n = 1;
    for (int i = 0; i < n; ++i) four_n *= 4;
    EXPECT_EQ(sum, four_n);
  }
  EXPECT_EQ(multinomial({2, 0, 1, 1}), 12);
}

TEST(Multidegree, MultipartitionDegreesAreProducts) {
  const Multidegree n{2, 1, 0, 2};
  const auto mps = multipartitions_of(n);
  EXPECT_EQ(mps.size(), 4u);
  std::int64_t sum = 0;
  for (const auto& mp : mps) {
    EXPECT_EQ(mp.multidegree(), n);
    sum += multi_character_degree(mp) * multi_character_degree(mp);
  }
  EXPECT_EQ(sum, factorial(2) * factorial(1) * factorial(2));
}
