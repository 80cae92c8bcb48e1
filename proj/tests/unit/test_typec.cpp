#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "spcharge/typec.hpp"
#include "spcharge/verify.hpp"

using namespace spcharge;

namespace {

Tableau rows(const std::vector<std::vector<Letter>>& r) { return Tableau::from_rows(r); }

/// Letters of C_n in the order n-bar < ... < 1-bar < 1 < ... < n.
std::vector<Letter> alphabet(int n) {
  std::vector<Letter> out;
  for (int i = n; i >= 1; --i) out.push_back(-i);
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

/// Every strictly increasing column over C_n with at most max_len letters.
std::vector<CColumn> all_columns(int n, int max_len) {
  std::vector<CColumn> out;
  const auto a = alphabet(n);
  const std::size_t m = a.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    CColumn c;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) c.push_back(a[i]);
    if (static_cast<int>(c.size()) <= max_len) out.push_back(c);
  }
  return out;
}

/// Weight (a_{n-bar}, ..., a_{1-bar}) of a multiset of letters.
std::vector<int> weight_of(const std::vector<Letter>& letters, int n) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (Letter x : letters) {
    const int i = std::abs(x);
    w[static_cast<std::size_t>(n - i)] += x < 0 ? 1 : -1;
  }
  return w;
}

/// Number of weakly increasing rows of length p over C_n with weight mu.
int count_rows_by_brute_force(int n, int p, const Partition& mu) {
  const auto a = alphabet(n);
  std::vector<int> target(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < mu.length(); ++i) target[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)];
  int count = 0;
  std::vector<Letter> row;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (static_cast<int>(row.size()) == p) {
      if (weight_of(row, n) == target) ++count;
      return;
    }
    for (std::size_t i = from; i < a.size(); ++i) {
      row.push_back(a[i]);
      go(i);
      row.pop_back();
    }
  };
  go(0);
  return count;
}

std::vector<Letter> result_letters(const ColumnInsertion& r) {
  std::vector<Letter> out = r.column;
  if (r.bumped) out.push_back(*r.bumped);
  return out;
}

}  // namespace

TEST(ColumnInsertion, WorkedExamples) {
  const auto r = insert_column_recursive(-3, {-5, -3, -1, 3});
  EXPECT_EQ(r.column, (CColumn{-5, -3, -2, 2}));
  EXPECT_EQ(r.bumped, -1);
  EXPECT_EQ(insertion_tableau(r), rows({{-5, -1}, {-3}, {-2}, {2}}));
  EXPECT_TRUE(insert_column_closed(-3, {-5, -3, -1, 3}).same_outcome(r));

  const auto s = insert_column_recursive(-3, {-1, 3});
  EXPECT_EQ(insertion_tableau(s), rows({{-2, -1}, {2}}));

  const auto a = insert_column_closed(4, {1, 2});
  EXPECT_EQ(a.column, (CColumn{1, 2, 4}));
  EXPECT_FALSE(a.bumped.has_value());
  EXPECT_EQ(a.kind, InsertionCase::Append);
}

TEST(ColumnInsertion, CaseLabels) {
  const auto i1 = insert_column_closed(-3, {-8, -5, -3});
  EXPECT_EQ(i1.column, (CColumn{-8, -5, -3}));
  EXPECT_EQ(i1.bumped, -3);
  EXPECT_EQ(i1.kind, InsertionCase::Case3_1);
  const auto i2 = insert_column_closed(-3, {-5, -4, 3});
  EXPECT_EQ(i2.bumped, 3);
  EXPECT_EQ(i2.kind, InsertionCase::Case2_1);
  const auto i3 = insert_column_closed(3, {8});
  EXPECT_EQ(i3.bumped, 8);
  EXPECT_EQ(i3.kind, InsertionCase::Case1);
}

TEST(ColumnInsertion, ClosedFormMatchesRecursionExhaustively) {
  int compared = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& c : all_columns(n, 5))
      for (Letter x : alphabet(n)) {
        ColumnInsertion rec;
        try {
          rec = insert_column_recursive(x, c);
        } catch (const InsertionRejected&) {
          continue;
        }
        const auto closed = insert_column_closed(x, c);
        EXPECT_TRUE(closed.same_outcome(rec)) << x << " -> " << format_tableau(rows({c}));
        ++compared;
      }
  EXPECT_GT(compared, 400);
}

TEST(ColumnInsertion, KeepsTheWeight) {
  for (const auto& c : all_columns(3, 5))
    for (Letter x : alphabet(3)) {
      ColumnInsertion r;
      try {
        r = insert_column_closed(x, c);
      } catch (const InsertionRejected&) {
        continue;
      }
      std::vector<Letter> before = c;
      before.push_back(x);
      EXPECT_EQ(weight_of(result_letters(r), 3), weight_of(before, 3));
    }
}

TEST(TableauInsertion, WorkedExample) {
  EXPECT_EQ(insert_into_tableau(-3, rows({{-8, -5}, {-5, -4}, {-3, 3, 8}})), rows({{-8, -5}, {-5, -4}, {-3, -3, 3, 8}}));
  EXPECT_EQ(insert_into_tableau(5, rows({{-2, 1, 3}})), rows({{-2, 1, 3}, {5}}));
}

TEST(LocalInsertion, WorkedChain) {
  const Tableau t = rows({{-6}, {-4, -4}, {-3, -2, 2}, {4, 6}});
  const AnyTableau shifted = localshift_tableau(t);
  EXPECT_EQ(shifted, AnyTableau(AugmentedTableau{rows({{-6}, {-4, -4}, {-3, -2}, {4, 6}}), Box{1, 4}, 2}));
  const AnyTableau step1 = locins(std::get<AugmentedTableau>(shifted));
  EXPECT_EQ(step1, AnyTableau(AugmentedTableau{rows({{-6}, {-5, -4}, {-3, -2}, {2, 6}}), Box{2, 4}, 5}));
  const AnyTableau step2 = locins(std::get<AugmentedTableau>(step1));
  EXPECT_EQ(step2, AnyTableau(rows({{-6}, {-5, -4}, {-3, -2}, {2, 5, 6}})));
  EXPECT_EQ(cocyc_c(t, 6), std::get<Tableau>(step2));
}

TEST(Weight, TypeC) {
  EXPECT_EQ(weight_c(rows({{-2, -2, -2, -1, 2}}), 2), (std::vector<int>{2, 1}));
  EXPECT_EQ(weight_c(rows({{-2}, {-1}, {1}, {2}}), 2), (std::vector<int>{0, 0}));
  EXPECT_EQ(weight_c(rows({{-2, -2, -2, -1, -1, -1, 1, 1, 1}}), 2), (std::vector<int>{3, 0}));
}

TEST(RowEnumeration, Examples) {
  const auto one = enumerate_row_symplectic(1, 2, Partition{});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].k, (std::vector<int>{1}));
  const auto two = enumerate_row_symplectic(2, 2, Partition{});
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].k, (std::vector<int>{1, 0}));
  EXPECT_EQ(two[1].k, (std::vector<int>{0, 1}));
  EXPECT_TRUE(enumerate_row_symplectic(1, 3, Partition{}).empty());
}

TEST(RowEnumeration, CountsMatchBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= 6; ++p)
      for (const auto& mu : verify::partitions_upto(p, n)) {
        const auto specs = enumerate_row_symplectic(n, p, mu);
        EXPECT_EQ(static_cast<int>(specs.size()), count_rows_by_brute_force(n, p, mu))
            << n << " " << p << " " << verify::str(mu);
        for (const auto& s : specs) {
          std::vector<int> w(static_cast<std::size_t>(n), 0);
          for (int i = 0; i < mu.length(); ++i) w[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)];
          EXPECT_EQ(weight_c(row_tableau(s), n), w);
          EXPECT_EQ(spec_of_row(row_tableau(s), n), s);
        }
      }
}

TEST(Authorization, Examples) {
  EXPECT_FALSE(is_authorized(rows({{-1, -1}}), 1));
  EXPECT_TRUE(is_authorized(rows({{-1, 1}, {-1, 1}}), 1));
  EXPECT_TRUE(is_authorized(rows({{-8, -5}, {-5, -4, -3}, {-3, 3, 8}}), 8));
}

TEST(Reduction, TypeC) {
  const Tableau t = rows({{-2, -1, 1, 2}});
  EXPECT_EQ(red_c(t, 2), t);
  EXPECT_TRUE(red_c(rows({{-1, -1}}), 1).empty());
}

TEST(Reduction, ShapeFollowsSimplification) {
  for (int n = 1; n <= 3; ++n)
    for (int p = 1; p <= 7; ++p)
      for (const auto& mu : verify::partitions_upto(p, n))
        for (const auto& s : enumerate_row_symplectic(n, p, mu))
          EXPECT_EQ(red_c(row_tableau(s), n).shape(), simp(row_shape(p), mu).first) << verify::spec_tag(s);
}

TEST(Cocyclage, WorkedExample) {
  EXPECT_EQ(cocyc_c(rows({{-8, -5}, {-5, -4, -3}, {-3, 3, 8}}), 8), rows({{-8, -5}, {-5, -4}, {-3, -3, 3, 8}}));
  const Tableau col = rows({{-1}, {1}});
  EXPECT_EQ(cocyc_c(col, 1), col);
}

TEST(Cocyclage, AgreesWithLocalInsertionChain) {
  int checked = 0;
  for (int n = 1; n <= 2; ++n)
    for (int p = 1; p <= 6; ++p)
      for (const auto& mu : verify::partitions_upto(p, n))
        for (const auto& s : enumerate_row_symplectic(n, p, mu)) {
          const Orbit o = orbit(row_tableau(s), n);
          for (int i = 0; i < o.m; ++i) {
            const Tableau r = red_c(o.steps[static_cast<std::size_t>(i)], n);
            if (r.is_column()) continue;
            AnyTableau a = localshift_tableau(r);
            int guard = 0;
            while (std::holds_alternative<AugmentedTableau>(a) && guard++ <= r.num_columns())
              a = locins(std::get<AugmentedTableau>(a));
            ASSERT_TRUE(std::holds_alternative<Tableau>(a)) << format_tableau(r);
            EXPECT_EQ(red_c(std::get<Tableau>(a), n), red_c(cocyc_c(r, n), n)) << format_tableau(r);
            ++checked;
          }
        }
  EXPECT_GT(checked, 50);
}

TEST(Orbit, Examples) {
  const Orbit o = orbit(rows({{-1, 1}}), 1);
  EXPECT_EQ(o.m, 1);
  EXPECT_EQ(o.terminal, rows({{-1}, {1}}));
  EXPECT_EQ(o.m, m_mu_closed(2, Partition{}));

  const Tableau col = rows({{-2}, {-1}, {1}, {2}});
  const Orbit z = orbit(col, 2);
  EXPECT_EQ(z.m, 0);
  EXPECT_EQ(z.terminal, col);

  EXPECT_EQ(orbit(rows({{-2, -2, -2, -1, 2}}), 2).m, m_mu_closed(5, Partition{2, 1}));
}

TEST(Charge, Examples) {
  EXPECT_EQ(charge_column(Tableau{}, 1), 0);
  EXPECT_EQ(charge_column(rows({{-2}, {-1}, {1}, {2}}), 2), 0);
  EXPECT_EQ(charge_c_lecouvey(rows({{-1, 1}}), 1), 1);
  EXPECT_EQ(charge_c_lecouvey(rows({{-1, 1}}), 2), 3);
  EXPECT_EQ(charge_c_lecouvey(rows({{-2}, {-1}, {1}, {2}}), 2), 0);
}
