#include "oracles.hpp"
#include "qtor/characters.hpp"

#include <gtest/gtest.h>

using namespace qtor;

namespace {

IntegerSeries from_counts(const std::vector<long>& c) {
  IntegerSeries s(static_cast<int>(c.size()) - 1);
  for (std::size_t i = 0; i < c.size(); ++i) s.set(static_cast<int>(i), Integer(c[i]));
  return s;
}

}  // namespace

TEST(Series, ArithmeticBasics) {
  IntegerSeries one = IntegerSeries::one(6);
  IntegerSeries x = one - IntegerSeries::monomial(6, 1);
  EXPECT_EQ(x * x.inverse(), one);
  EXPECT_EQ(x.pow(-1), x.inverse());
  EXPECT_EQ(x.pow(2) * x.pow(-2), one);
  EXPECT_EQ(IntegerSeries::monomial(6, 2).shifted(-2), IntegerSeries::one(4));
  EXPECT_EQ(x.first_difference(one), std::optional<int>(1));
  EXPECT_FALSE(x.non_negative());
}

TEST(Series, EulerFunctionIsPentagonal) {
  IntegerSeries e = euler_function(12);
  IntegerSeries direct = IntegerSeries::one(12);
  for (int i = 1; i <= 12; ++i) direct *= IntegerSeries::one(12) - IntegerSeries::monomial(12, i);
  EXPECT_EQ(e, direct);
}

TEST(Series, MacmahonMatchesBruteForce) {
  EXPECT_EQ(macmahon_series(8), from_counts(oracle::vacuum_pp_counts(8)));
  EXPECT_EQ(module_character(BoundaryTriple{}, {}, 8), macmahon_series(8));
}

TEST(Chi, ClosedFormMatchesPairCounts) {
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(chi_bar(k, 12), from_counts(oracle::pair_counts(k, 12))) << k;
}

TEST(Chi, Recursion) {
  IntegerSeries rhs = euler_function(12).pow(-2);
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(chi_bar(k, 12) + chi_bar(k + 1, 12).shifted(k + 1).truncated(12), rhs) << k;
}

TEST(Chi, NegativeIndexIsShifted) {
  for (int k = 1; k <= 3; ++k) {
    IntegerSeries c = chi(-k, 8);
    for (int i = 0; i < k; ++i) EXPECT_EQ(c[i], 0);
    EXPECT_EQ(c, chi_bar(k, 8).shifted(k).truncated(8));
  }
}

TEST(Theorem, PAlpha) {
  EXPECT_EQ(p_alpha({0, 0}), 0);
  EXPECT_EQ(p_alpha({1, 0}), 0);
  EXPECT_EQ(p_alpha({2, 1}), 1);
  EXPECT_EQ(p_alpha({0, -1}), 1);
  EXPECT_EQ(p_alpha({1, -1}), 1);
}

TEST(Theorem, MatchesHookEnumeration) {
  for (std::vector<int> a : {std::vector<int>{0, 0}, {1, 0}, {2, 1}, {1, -1}}) {
    IntegerSeries t = theorem_character(a, 8);
    EXPECT_EQ(t, hook_character(a, 8));
    EXPECT_TRUE(t.non_negative());
  }
}

TEST(Conjectures, AgreeWithForbiddenBoxCounts) {
  for (int m = 1; m <= 3; ++m)
    EXPECT_EQ(conjecture1(m, 8), module_character(BoundaryTriple{}, std::make_pair(1, m), 8)) << m;
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}})
    EXPECT_EQ(conjecture2(n, m, 6), module_character(BoundaryTriple{}, std::make_pair(n, m), 6)) << n << "," << m;
  EXPECT_EQ(conjecture1(1, 8), conjecture2(1, 1, 8));
}

TEST(Tensor, WorkedExamplesFactor) {
  struct Case {
    const char* b;
    int a, bb, c;
  };
  for (const auto& c : {Case{"();();()", 1, 1, 1}, Case{"();();()", 1, 1, 2}, Case{"();();()", 1, 1, 3},
                        Case{"();(1);()", 2, 1, 2}}) {
    auto r = tensor_factorization_check(BoundaryTriple::parse(c.b), c.a, c.bb, c.c, 6);
    EXPECT_TRUE(r.agrees()) << c.b << " " << r.module.to_string() << " vs " << r.product.to_string();
  }
}

TEST(Tensor, NonSplitBoundaryIsReported) {
  auto r = tensor_factorization_check(BoundaryTriple{}, 2, 1, 2, 4);
  EXPECT_FALSE(r.splits);
  EXPECT_FALSE(r.agrees());
}
