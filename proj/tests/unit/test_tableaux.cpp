#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "spcharge/tableaux.hpp"
#include "spcharge/verify.hpp"

using namespace spcharge;

namespace {

Tableau rows(const std::vector<std::vector<Letter>>& r) { return Tableau::from_rows(r); }

/// Column contents as sorted multisets, ignoring vertical position.
std::vector<std::vector<Letter>> column_contents(const Tableau& t) {
  std::vector<std::vector<Letter>> out;
  for (const auto& c : t.columns()) out.push_back(c.entries);
  return out;
}

}  // namespace

TEST(Tableau, RowsColumnsAndLabels) {
  const Tableau t = rows({{1, 1, 2}, {3, 5}, {4}});
  EXPECT_EQ(t.shape(), Composition({3, 2, 1}));
  EXPECT_EQ(t.label(4), 3);
  EXPECT_EQ(t.at({2, 2}), 5);
  ASSERT_EQ(t.columns().size(), 3u);
  EXPECT_EQ(t.columns()[0].entries, (std::vector<Letter>{1, 3, 4}));
  EXPECT_THROW(Tableau(Composition{2}, {1}), std::invalid_argument);
  EXPECT_THROW(rows({{1, 0}}), std::invalid_argument);
}

TEST(Tableau, ParseAndFormat) {
  const Tableau t = parse_tableau("-2,-1;1,2");
  EXPECT_EQ(t, rows({{-2, -1}, {1, 2}}));
  EXPECT_EQ(format_tableau(t), "-2,-1;1,2");
  EXPECT_EQ(parse_tableau(""), Tableau{});
  EXPECT_THROW(parse_tableau("1,;2"), std::invalid_argument);
  const AnyTableau a = parse_any_tableau("-6;-5,-4;-3,-2;2,6|split=4,2,5");
  ASSERT_TRUE(std::holds_alternative<AugmentedTableau>(a));
  EXPECT_EQ(format_tableau(a), "-6;-5,-4;-3,-2;2,6|split=4,2,5");
}

TEST(Tableau, ParseErrorsCarryAPosition) {
  try {
    parse_tableau("1,2;3,x");
    FAIL() << "expected a parse error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("6"), std::string::npos) << e.what();
  }
}

TEST(Weight, TypeA) {
  EXPECT_EQ(weight_a(rows({{1, 1, 2}, {2}, {3, 3}})), Composition({2, 2, 2}));
  EXPECT_EQ(weight_a(Tableau{}), Composition{});
  EXPECT_EQ(weight_a(rows({{1, 1, 1}, {2, 2, 3}, {4}})), Composition({3, 2, 1, 1}));
  EXPECT_THROW(weight_a(rows({{-1, 1}})), std::invalid_argument);
}

TEST(ReadingWords, ColumnWord) {
  EXPECT_EQ(column_word_ne(rows({{1, 1, 2}, {3, 5}, {4}})), (Word{2, 1, 5, 1, 3, 4}));
  EXPECT_EQ(column_word_ne(rows({{7}})), (Word{7}));
  EXPECT_EQ(column_word_ne(rows({{1}, {2}, {3}})), (Word{1, 2, 3}));
}

TEST(ReadingWords, RowWord) {
  EXPECT_EQ(row_word_sw(rows({{1, 1, 1, 2, 3}, {2, 2, 4}, {3, 5}})), (Word{3, 5, 2, 2, 4, 1, 1, 1, 2, 3}));
  EXPECT_EQ(row_word_sw(rows({{1, 2, 4}})), (Word{1, 2, 4}));
  EXPECT_EQ(row_word_sw(rows({{1}, {2}, {3}})), (Word{3, 2, 1}));
}

TEST(Gravity, Tableaux) {
  EXPECT_EQ(grav_tableau(rows({{1}, {2, 3}, {4, 4, 5, 6}, {5}})), rows({{1, 3, 5, 6}, {2, 4}, {4}, {5}}));
  const Tableau young = rows({{1, 1, 2}, {2, 3}});
  EXPECT_EQ(grav_tableau(young), young);
  // Column contents are kept: the second column's box rises to the top row.
  EXPECT_EQ(grav_tableau(rows({{2}, {1, 3}})), rows({{2, 3}, {1}}));
}

TEST(Gravity, PreservesColumnsOnUnimodalShapes) {
  for (const auto& c : verify::unimodal_compositions(7)) {
    std::vector<Letter> e(static_cast<std::size_t>(c.size()));
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<Letter>(i + 1);
    const Tableau t = fill_natural(c, e);
    const Tableau g = grav_tableau(t);
    EXPECT_EQ(g.shape(), grav_shape(c));
    EXPECT_EQ(column_contents(g), column_contents(t)) << format_tableau(t);
  }
}

TEST(Shift, Tableaux) {
  EXPECT_EQ(shift_tableau(rows({{1}, {2, 2, 3}, {4}})), rows({{1}, {2, 2}, {3, 4}}));
  const Tableau col = rows({{1}, {2}, {3}});
  EXPECT_EQ(shift_tableau(col), col);
  EXPECT_EQ(shift_tableau(rows({{1, 2, 3}})), rows({{1, 2}, {3}}));
}

TEST(Shift, RefillsNaturally) {
  for (const auto& c : verify::unimodal_compositions(7)) {
    std::vector<Letter> e(static_cast<std::size_t>(c.size()));
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<Letter>(i / 2 + 1);
    const Tableau s = shift_tableau(fill_natural(c, e));
    EXPECT_EQ(s.shape(), shift_shape(c));
    EXPECT_EQ(s.entries(), e);
    EXPECT_TRUE(is_natural(s));
  }
}

TEST(WeightedShift, Tableaux) {
  EXPECT_EQ(wshift_tableau(rows({{1, 1, 1}, {2, 2, 3}, {4}}), Partition{3, 2, 1, 1}), rows({{1, 1}, {2, 3}}));
  EXPECT_TRUE(wshift_tableau(rows({{1}, {2}}), Partition{1, 1}).empty());
  EXPECT_EQ(wshift_tableau(rows({{1, 2, 3}}), Partition{}), rows({{1, 2}, {3}}));
}

TEST(WeightedShift, ShapeFollowsTheShapeOperation) {
  for (int size = 1; size <= 7; ++size)
    for (const auto& c : verify::unimodal_compositions(size))
      for (const auto& mu : verify::partitions_of(size, size)) {
        if (mu.row_length(1) > c.max_part()) continue;
        std::vector<Letter> e;
        for (int i = 0; i < mu.length(); ++i) e.insert(e.end(), static_cast<std::size_t>(mu[static_cast<std::size_t>(i)]), i + 1);
        const Tableau t = fill_natural(c, e);
        if (!is_semistandard(grav_tableau(t))) continue;
        const Tableau w = wshift_tableau(t, mu);
        const auto expected = wshift_shape(c, mu);
        EXPECT_EQ(w.shape(), expected.first) << format_tableau(t);
        EXPECT_EQ(w.empty() ? Composition{} : weight_a(w), expected.second) << format_tableau(t);
      }
}

TEST(AugmentedTableau, EntriesPutTheMinusBoxFirst) {
  const AugmentedComposition shape{{2, 1}, Box{1, 2}};
  const AugmentedTableau a = augmented_from_entries(shape, {-2, -1, 1, 2});
  EXPECT_EQ(a.entries(), (std::vector<Letter>{-2, -1, 1, 2}));
  EXPECT_EQ(a.minus, 1);
  EXPECT_EQ(a.plus, rows({{-2, -1}, {2}}));
  EXPECT_EQ(a.minus_tableau(), rows({{-2, -1}, {1}}));
}
