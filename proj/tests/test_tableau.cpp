#include <gtest/gtest.h>

#include <algorithm>

#include "hspecht/tableau.hpp"
#include "test_support.hpp"

using namespace hspecht;

namespace {

std::vector<std::string> shapes_text(int r, int n) {
  std::vector<std::string> out;
  for (const auto& d : enumerate_rdiagrams(r, n)) out.push_back(d.to_string());
  return out;
}

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

long long power(long long b, int e) {
  long long p = 1;
  while (e-- > 0) p *= b;
  return p;
}

}  // namespace

TEST(RDiagrams, PartitionsOfThree) {
  EXPECT_EQ(shapes_text(1, 3), (std::vector<std::string>{"[(3)]", "[(2,1)]", "[(1,1,1)]"}));
}

TEST(RDiagrams, PairsWithTwoCells) {
  EXPECT_EQ(shapes_text(2, 2),
            (std::vector<std::string>{"[(2)|()]", "[(1,1)|()]", "[(1)|(1)]", "[()|(2)]", "[()|(1,1)]"}));
}

TEST(RDiagrams, PairsWithOneCell) { EXPECT_EQ(shapes_text(2, 1), (std::vector<std::string>{"[(1)|()]", "[()|(1)]"})); }

TEST(RDiagrams, NoDuplicates) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 4; ++n) {
      auto all = enumerate_rdiagrams(r, n);
      auto sorted = all;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (const auto& d : all) EXPECT_EQ(d.size(), n);
    }
}

TEST(RDiagrams, ParseAndPrint) {
  EXPECT_EQ(parse_rdiagram("[(1)|(1)]").to_string(), "[(1)|(1)]");
  EXPECT_EQ(parse_rdiagram("[(2,1)|∅]").to_string(), "[(2,1)|()]");
  EXPECT_THROW(parse_rdiagram("[(1,2)]"), InvalidArgument);
}

TEST(StandardTableaux, Counts) {
  EXPECT_EQ(enumerate_standard_tableaux(parse_rdiagram("[(2,1)]")).size(), 2u);
  EXPECT_EQ(enumerate_standard_tableaux(parse_rdiagram("[(1)|(1)]")).size(), 2u);
  EXPECT_EQ(enumerate_standard_tableaux(parse_rdiagram("[(2)|()]")).size(), 1u);
}

TEST(StandardTableaux, OrderAndText) {
  auto tabs = enumerate_standard_tableaux(parse_rdiagram("[(1)|(1)]"));
  EXPECT_EQ(tabs[0].to_string(), "[[1]|[2]]");
  EXPECT_EQ(tabs[1].to_string(), "[[2]|[1]]");
  auto hook = enumerate_standard_tableaux(parse_rdiagram("[(2,1)|()]"));
  EXPECT_EQ(hook[0].to_string(), "[[1,2],[3]|[]]");
  EXPECT_EQ(hook[1].to_string(), "[[1,3],[2]|[]]");
  EXPECT_EQ(parse_rtableau("[[1,2],[3]|[]]"), hook[0]);
}

TEST(StandardTableaux, StandardnessPredicate) {
  EXPECT_TRUE(parse_rtableau("[[1,2],[3]]").is_standard());
  EXPECT_FALSE(parse_rtableau("[[2,1],[3]]").is_standard());
  EXPECT_TRUE(parse_rtableau("[[1,3],[2]]").is_standard());
  EXPECT_THROW(parse_rtableau("[[1,1]]"), InvalidArgument);
}

TEST(StandardTableaux, RegularRepresentationDimension) {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}, {1, 4}, {2, 4}}) {
    long long sum = 0;
    for (const auto& shape : enumerate_rdiagrams(r, n)) {
      long long f = static_cast<long long>(enumerate_standard_tableaux(shape).size());
      sum += f * f;
    }
    EXPECT_EQ(sum, power(r, n) * factorial(n)) << "r=" << r << " n=" << n;
  }
}

TEST(StandardTableaux, HookFormulaAgreesWithEnumeration) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 4; ++n)
      for (const auto& shape : enumerate_rdiagrams(r, n))
        EXPECT_EQ(static_cast<long long>(enumerate_standard_tableaux(shape).size()), hook_formula_count(shape))
            << shape.to_string();
}

TEST(Word, Examples) {
  EXPECT_EQ(word_of(parse_rtableau("[[1,2],[3]]")), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(word_of(parse_rtableau("[[1],[2]]")), (std::vector<int>{2, 1}));
  EXPECT_EQ(word_of(parse_rtableau("[[1]|[2]]")), (std::vector<int>{1, 2}));
  EXPECT_THROW(word_of(parse_rtableau("[[2,1]]")), InvalidArgument);
}

TEST(IndexMap, Examples) {
  auto idx = index_map(parse_rtableau("[[1,2],[3]]"));
  EXPECT_EQ(idx.indices[0], (ComponentFilling{{0, 0}, {1}}));
  auto col = index_map(parse_rtableau("[[1],[2]]"));
  EXPECT_EQ(col.indices[0], (ComponentFilling{{0}, {1}}));
  auto single = index_map(parse_rtableau("[[]|[1]]"));
  EXPECT_EQ(single.indices[1], (ComponentFilling{{0}}));
  EXPECT_EQ(single.at(Cell{2, 1, 1}), 0);
}

TEST(IndexMap, PropertiesOverAllStandardTableaux) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 4; ++n)
      for (const auto& shape : enumerate_rdiagrams(r, n))
        for (const auto& S : enumerate_standard_tableaux(shape)) {
          auto w = word_of(S);
          auto sorted = w;
          std::sort(sorted.begin(), sorted.end());
          for (int k = 0; k < n; ++k) EXPECT_EQ(sorted[static_cast<std::size_t>(k)], k + 1);
          auto idx = index_map(S);
          EXPECT_EQ(idx.at(S.find(1)), 0);
          for (const auto& comp : idx.indices)
            for (const auto& row : comp)
              for (int v : row) EXPECT_GE(v, 0);
        }
}

TEST(Hooks, Products) {
  EXPECT_EQ(hook_product({2, 1}), 3);
  EXPECT_EQ(hook_product({1}), 1);
  EXPECT_EQ(hook_product({2, 2}), 12);
  EXPECT_EQ(hook_product({}), 1);
  EXPECT_EQ(hook_product({3, 1}), 8);
}

TEST(Stabilizers, Examples) {
  auto row = stabilizers({{1, 2}}, 2);
  EXPECT_EQ(row.rows.size(), 2u);
  EXPECT_EQ(row.columns.size(), 1u);
  EXPECT_TRUE(row.columns[0].is_identity());
  auto col = stabilizers({{1}, {2}}, 2);
  EXPECT_EQ(col.rows.size(), 1u);
  EXPECT_EQ(col.columns.size(), 2u);
  auto hook = stabilizers({{1, 2}, {3}}, 3);
  EXPECT_EQ(hook.rows.size(), 2u);
  EXPECT_EQ(hook.columns.size(), 2u);
  EXPECT_EQ(hook.columns[1], Permutation::transposition(3, 1, 3));
}
