#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "spcharge/typea.hpp"
#include "spcharge/verify.hpp"

using namespace spcharge;

namespace {

Tableau rows(const std::vector<std::vector<Letter>>& r) { return Tableau::from_rows(r); }

/// Every semistandard tableau with at most max_boxes boxes and max_letters letters.
std::vector<Tableau> all_ssyt(int max_boxes, int max_letters) {
  std::vector<Tableau> out;
  for (int size = 1; size <= max_boxes; ++size)
    for (const auto& shape : verify::partitions_of(size, size))
      for (const auto& weight : verify::partitions_of(size, max_letters))
        for (const auto& t : verify::ssyt(shape, weight)) out.push_back(t);
  return out;
}

/// Charge of a standard word by the index rule, written from scratch.
int standard_charge_by_index(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i;
  int index = 0, total = 0;
  for (int r = 2; r <= n; ++r) {
    if (pos[static_cast<std::size_t>(r)] > pos[static_cast<std::size_t>(r - 1)]) ++index;
    total += index;
  }
  return total;
}

}  // namespace

TEST(Charge, StandardWords) {
  EXPECT_EQ(charge_standard({3, 5, 2, 4, 1}), 2);
  EXPECT_EQ(charge_standard({2, 1, 3}), 1);
  EXPECT_EQ(charge_standard({4, 3, 2, 1}), 0);
  EXPECT_THROW(charge_standard({1, 1}), std::invalid_argument);
}

TEST(Charge, StandardWordsMatchIndexRule) {
  Word w{1, 2, 3, 4, 5, 6};
  do {
    EXPECT_EQ(charge_standard(w), standard_charge_by_index(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST(Charge, StandardSubwords) {
  const auto subs = extract_standard_subwords({3, 5, 2, 2, 4, 1, 1, 1, 2, 3});
  EXPECT_EQ(subs, (std::vector<Word>{{3, 5, 2, 4, 1}, {2, 1, 3}, {1, 2}}));
  EXPECT_EQ(extract_standard_subwords({2, 3, 1}), (std::vector<Word>{{2, 3, 1}}));
  EXPECT_EQ(extract_standard_subwords({1, 1, 1}), (std::vector<Word>{{1}, {1}, {1}}));
}

TEST(Charge, Words) {
  EXPECT_EQ(charge_word({3, 5, 2, 2, 4, 1, 1, 1, 2, 3}), 4);
  EXPECT_EQ(charge_word({1, 2}), 1);
  EXPECT_EQ(charge_word({2, 1, 1}), charge_word({2, 1}) + charge_word({1}));
}

TEST(Charge, ZeroWhenWeightEqualsShape) {
  for (const auto& t : all_ssyt(7, 7)) {
    if (weight_a(t) != t.shape()) continue;
    EXPECT_EQ(charge_word(row_word_sw(t)), 0) << format_tableau(t);
  }
}

TEST(Insertion, ColumnInsertion) {
  EXPECT_EQ(schensted_column_insert(2, rows({{1, 1}, {3, 5}, {4}})), rows({{1, 1, 5}, {2, 3}, {4}}));
  EXPECT_EQ(schensted_column_insert(5, rows({{1}, {2}})), rows({{1}, {2}, {5}}));
  EXPECT_EQ(schensted_column_insert(1, rows({{1}})), rows({{1, 1}}));
}

TEST(Insertion, FromWord) {
  EXPECT_EQ(tableau_from_word({1, 5, 1, 3, 4}), rows({{1, 1}, {3, 5}, {4}}));
  EXPECT_EQ(tableau_from_word({6}), rows({{6}}));
}

TEST(Insertion, ColumnWordRoundTrip) {
  for (const auto& t : all_ssyt(6, 4)) EXPECT_EQ(tableau_from_word(column_word_ne(t)), t) << format_tableau(t);
}

TEST(Reduction, TypeA) {
  EXPECT_EQ(red_a(rows({{1, 1, 1}, {2, 2, 3}, {4}})), rows({{1, 1, 2}, {3}}));
  const Tableau t = rows({{1, 2}, {3}});
  EXPECT_EQ(red_a(t), t);
  EXPECT_TRUE(red_a(rows({{1, 1}, {2}})).empty());
  EXPECT_TRUE(red_a(rows({{1}, {2}})).empty());
}

TEST(Cocyclage, TypeA) {
  EXPECT_EQ(cocyc_a(rows({{1, 1, 2}, {3, 5}, {4}})), rows({{1, 1, 5}, {2, 3}, {4}}));
  EXPECT_EQ(cocyc_a(rows({{1, 1, 1}, {2, 2, 3}, {4}})), rows({{1, 1}, {2, 3}}));
  EXPECT_THROW(cocyc_a(rows({{1, 1}, {2}})), std::invalid_argument);
}

TEST(Cocyclage, LowersChargeByOne) {
  int checked = 0;
  for (const auto& t : all_ssyt(7, 4)) {
    if (weight_equals_shape(t)) continue;
    const Tableau c = cocyc_a(t);
    EXPECT_EQ(charge_word(row_word_sw(c)), charge_word(row_word_sw(t)) - 1) << format_tableau(t);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Cocyclage, ChargeCountsSteps) {
  for (const auto& t : all_ssyt(6, 4)) EXPECT_EQ(charge_via_cocyclage(t), charge_word(row_word_sw(t)));
}
