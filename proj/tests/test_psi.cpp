#include "qtor/macmahon.hpp"
#include "qtor/psi.hpp"

#include <gtest/gtest.h>

using namespace qtor;

namespace {

const Monomial kK{0, 0, 0, 1};
const Monomial kOne{};
const Monomial kQ1{1, 0, 0, 0};
const Monomial kQ2{0, 1, 0, 0};
const Monomial kQ3 = Monomial::q3();

PsiEigenvalue factors(std::initializer_list<std::pair<Monomial, int>> list) {
  PsiEigenvalue p;
  for (const auto& [m, e] : list) p.multiply(m, e);
  return p;
}

}  // namespace

TEST(PsiTable, VacuumAndSingleAlpha) {
  EXPECT_EQ(psi_shell(PlanePartition(BoundaryTriple{})), factors({{kK, 1}, {kOne, -1}}));
  EXPECT_EQ(psi_shell(PlanePartition(BoundaryTriple::parse("(1);();()"))),
            factors({{kK, 1}, {kQ1 * kQ2, 1}, {kQ1, -1}, {kQ2, -1}}));
  EXPECT_EQ(psi_shell(PlanePartition(BoundaryTriple::parse("(2);();()"))),
            factors({{kK, 1}, {kQ1 * kQ1 * kQ2, 1}, {kQ1 * kQ1, -1}, {kQ2, -1}}));
}

TEST(PsiTable, MixedBoundaries) {
  EXPECT_EQ(psi_shell(PlanePartition(BoundaryTriple::parse("(1);(1);()"))),
            factors({{kK, 1}, {kQ1 * kQ2 * kQ3, 1}, {kQ2, -1}, {kQ1 * kQ3, -1}}));
  EXPECT_EQ(psi_shell(PlanePartition(BoundaryTriple::parse("(1);(1);(1)"))),
            factors({{kK, 1}, {kQ1 * kQ2 * kQ3, 2}, {kQ1 * kQ2, -1}, {kQ1 * kQ3, -1}, {kQ2 * kQ3, -1}}));
}

TEST(PsiRoutes, AllFourAgree) {
  for (const char* s : {"();();()", "(1);();()", "(2,1);(1);()", "();(2);(1)", "(1);(1);(1)", "(3,1);(2);(2,1)"}) {
    BoundaryTriple b = BoundaryTriple::parse(s);
    for (int d = 0; d <= 3; ++d)
      for (const auto& mu : enumerate_pp(b, d)) {
        PsiEigenvalue shell = psi_shell(mu);
        EXPECT_EQ(psi_product(mu), shell) << s << " " << mu.to_string();
        EXPECT_EQ(psi_boxes(mu), shell) << s << " " << mu.to_string();
        EXPECT_EQ(psi_tail(mu, 1), shell) << s << " " << mu.to_string();
      }
  }
}

TEST(PsiModes, ExpansionsMatchDirectEvaluation) {
  ParamSpec p = make_generic_params(5);
  PsiEigenvalue psi = psi_shell(PlanePartition(BoundaryTriple::parse("(1);();()")));
  auto zero = psi.expand_at_zero(p, 6);
  // Horner check at a small x: partial sums converge to the exact value.
  Rational x(1, 1000);
  Rational sum = 0, xp = 1;
  for (const auto& c : zero) {
    sum += c * xp;
    xp *= x;
  }
  Rational exact = psi.evaluate(x, p);
  EXPECT_LT(abs(sum - exact), Rational(1, 1000000) * Rational(1, 1000000));
  EXPECT_EQ(zero[0], 1);
  auto inf = psi.expand_at_infinity(p, 2);
  // psi(infinity) = K q1 q2 / (q1 q2) = K
  EXPECT_EQ(inf[0], p.K);
}

TEST(PsiRescale, ShiftMovesEveryFactor) {
  PsiEigenvalue p = factors({{kQ1, 1}, {kQ2, -1}});
  PsiEigenvalue r = p.rescaled(kQ3);
  EXPECT_EQ(r, factors({{kQ1 * kQ3, 1}, {kQ2 * kQ3, -1}}));
  EXPECT_EQ(p.total_order(), 0);
}
