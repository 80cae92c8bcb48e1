#include <gtest/gtest.h>

#include "spcharge/symfun.hpp"
#include "spcharge/verify.hpp"

using namespace spcharge;

namespace {

QPolynomial poly(std::vector<int> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return QPolynomial(std::move(v));
}

/// Weyl dimension formula for C_n written directly in the standard basis.
Rational weyl_dimension(const WeightVec& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<Rational> l(lambda.begin(), lambda.end()), r;
  for (int i = 0; i < n; ++i) r.push_back(n - i);
  Rational dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= (l[i] + r[i]) / r[i];
    for (int j = i + 1; j < n; ++j) {
      dim *= (l[i] + r[i] - l[j] - r[j]) / (r[i] - r[j]);
      dim *= (l[i] + r[i] + l[j] + r[j]) / (r[i] + r[j]);
    }
  }
  return dim;
}

Integer total_multiplicity(const GroupRing& g) {
  Integer sum = 0;
  for (const auto& [v, c] : g.terms()) sum += c.coeff(0);
  return sum;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  const QPolynomial q = QPolynomial::q();
  const QPolynomial one(Integer(1));
  EXPECT_EQ((one + q) * (one - q), poly({1, 0, -1}));
  EXPECT_EQ((q * q - q).degree(), 2);
  EXPECT_EQ(poly({1, 2, 3})(Integer(2)), Integer(17));
  EXPECT_EQ(poly({0, 1, 0, 1}).to_string(), "q + q^3");
  EXPECT_TRUE((q - q).is_zero());
  const auto [quot, rem] = divmod(poly({-1, 0, 1}), poly({-1, 1}));
  EXPECT_EQ(quot, poly({1, 1}));
  EXPECT_TRUE(rem.is_zero());
}

TEST(Polynomial, IntegralityCheck) {
  RationalPolynomial half(std::vector<Rational>{Rational(1, 2)});
  EXPECT_THROW(to_integer(half), std::logic_error);
  EXPECT_EQ(to_integer(to_rational(poly({3, 0, 4}))), poly({3, 0, 4}));
}

TEST(WeylGroup, OrderAndSigns) {
  for (int n = 1; n <= 3; ++n) {
    const auto w = weyl_group(n);
    std::size_t expected = 1;
    for (int i = 1; i <= n; ++i) expected *= static_cast<std::size_t>(2 * i);
    EXPECT_EQ(w.size(), expected);
    int total = 0;
    for (const auto& g : w) total += g.sign();
    EXPECT_EQ(total, 0);
  }
  EXPECT_THROW(weyl_group(5), std::invalid_argument);
}

TEST(SkewSymmetrize, Examples) {
  const GroupRing e1 = GroupRing::monomial({1});
  GroupRing expected = e1;
  expected.add({-1}, QPolynomial(Integer(-1)));
  EXPECT_EQ(skew_symmetrize(e1, 1), expected);
  EXPECT_EQ(skew_symmetrize(GroupRing::monomial(rho(1)), 1), expected);
  EXPECT_TRUE(skew_symmetrize(orbit_sum({1, 0}, 2), 2).is_zero());
}

TEST(OrbitSum, Examples) {
  EXPECT_EQ(orbit_sum({0, 0}, 2), GroupRing::monomial({0, 0}));
  GroupRing expected;
  for (WeightVec v : {WeightVec{1, 0}, WeightVec{-1, 0}, WeightVec{0, 1}, WeightVec{0, -1}})
    expected.add(v, QPolynomial(Integer(1)));
  EXPECT_EQ(orbit_sum({1, 0}, 2), expected);
  EXPECT_EQ(orbit_sum({2, 1}, 2).coeff({2, 1}), QPolynomial(Integer(1)));
}

TEST(WeylCharacter, Examples) {
  EXPECT_EQ(weyl_character({0}, 1), GroupRing::monomial({0}));
  GroupRing expected = GroupRing::monomial({1});
  expected.add({-1}, QPolynomial(Integer(1)));
  EXPECT_EQ(weyl_character({1}, 1), expected);
}

TEST(WeylCharacter, DimensionFormula) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : verify::dominant_weights(n, 6)) {
      const GroupRing chi = weyl_character(lambda, n);
      EXPECT_EQ(Rational(total_multiplicity(chi)), weyl_dimension(lambda)) << verify::str(Partition(lambda));
      EXPECT_EQ(chi.coeff(lambda), QPolynomial(Integer(1)));
    }
}

TEST(WeylCharacter, RejectsLargeInputs) {
  EXPECT_THROW(weyl_character({11}, 1), std::invalid_argument);
  EXPECT_THROW(weyl_character({1, 2}, 2), std::invalid_argument);
}

TEST(HallLittlewood, Endpoints) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : verify::dominant_weights(n, 6)) {
      const GroupRing p = hall_littlewood(lambda, n);
      EXPECT_EQ(p.evaluate_q(Integer(0)), weyl_character(lambda, n));
      EXPECT_EQ(p.evaluate_q(Integer(1)), orbit_sum(lambda, n));
    }
  EXPECT_EQ(hall_littlewood({0, 0}, 2), GroupRing::monomial({0, 0}));
}

TEST(HallLittlewood, ConventionIsNegativeRoots) { EXPECT_EQ(Oracle::convention(), RootConvention::Negative); }

TEST(KostkaFoulkes, RankOneIsAPowerOfQ) {
  for (int p = 0; p <= 10; ++p)
    for (int m = p; m >= 0; m -= 2)
      EXPECT_EQ(kostka_foulkes({p}, {m}, 1), QPolynomial::monomial(Integer(1), static_cast<std::size_t>((p - m) / 2)));
}

TEST(KostkaFoulkes, Examples) {
  EXPECT_EQ(kostka_foulkes({2}, {0}, 1), QPolynomial::q());
  EXPECT_EQ(kostka_foulkes({2, 0}, {0, 0}, 2), poly({0, 1, 0, 1}));
  EXPECT_EQ(kostka_foulkes({1}, {1}, 1), QPolynomial(Integer(1)));
}

TEST(KostkaFoulkes, DiagonalIsOne) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lambda : verify::dominant_weights(n, 6))
      EXPECT_EQ(kostka_foulkes(lambda, lambda, n), QPolynomial(Integer(1)));
}

TEST(KostkaFoulkes, OneRowFormulaAndCounts) {
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= 6; ++p)
      for (const auto& mu : verify::partitions_upto(p, n)) {
        if ((p - mu.size()) % 2 != 0) continue;
        const QPolynomial k = kostka_foulkes(to_weight(row_shape(p), n), to_weight(mu, n), n);
        EXPECT_EQ(k, kostka_onerow_formula(p, mu, n)) << n << " " << p << " " << verify::str(mu);
        EXPECT_EQ(k(Integer(1)), Integer(enumerate_row_symplectic(n, p, mu).size()));
      }
  EXPECT_EQ(kostka_onerow_formula(3, Partition{2, 1}, 2), QPolynomial::monomial(Integer(1), 1));
  EXPECT_EQ(kostka_onerow_formula(2, Partition{}, 1), QPolynomial::q());
}
