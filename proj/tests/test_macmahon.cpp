#include "oracles.hpp"
#include "qtor/gz.hpp"
#include "qtor/macmahon.hpp"
#include "qtor/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace qtor;

namespace {

SuiteOptions upto(int d) {
  SuiteOptions o;
  o.max_degree = d;
  return o;
}

std::string first_failure(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return r.module + " " + r.relation + " d=" + std::to_string(r.degree) + " " + r.modes + ": " + r.counterexample;
  return {};
}

}  // namespace

TEST(Macmahon, VacuumRelations) {
  MacmahonModule m(BoundaryTriple{}, make_generic_params(1));
  EvaluatedModule ev(m);
  auto reports = run_relation_suite(ev, upto(3));
  EXPECT_TRUE(all_passed(reports)) << first_failure(reports);
}

TEST(Macmahon, BoundaryRelations) {
  for (const char* s : {"(1);();()", "(2);(1);()", "(1);(1);(1)", "(1,1);();(2)"}) {
    MacmahonModule m(BoundaryTriple::parse(s), make_generic_params(2));
    EvaluatedModule ev(m);
    auto reports = run_relation_suite(ev, upto(3));
    EXPECT_TRUE(all_passed(reports)) << first_failure(reports);
  }
}

TEST(Macmahon, QuotientRelations) {
  for (auto [mm, nn] : {std::pair{1, 1}, std::pair{2, 0}}) {
    MacmahonModule m(BoundaryTriple{}, make_resonant_params(3, mm, nn), true);
    ASSERT_TRUE(m.quotient());
    EvaluatedModule ev(m);
    auto reports = run_relation_suite(ev, upto(3));
    EXPECT_TRUE(all_passed(reports)) << first_failure(reports);
  }
}

TEST(Macmahon, DimensionsMatchEnumeration) {
  MacmahonModule m(BoundaryTriple::parse("(2);(1);()"), make_generic_params(1));
  auto c = count_pp(BoundaryTriple::parse("(2);(1);()"), 5);
  for (int d = 0; d <= 5; ++d) EXPECT_EQ(m.dimension(d), c[static_cast<std::size_t>(d)]);
  auto brute = oracle::vacuum_pp_counts(6);
  MacmahonModule v(BoundaryTriple{}, make_generic_params(1));
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(static_cast<long>(v.dimension(d)), brute[static_cast<std::size_t>(d)]);
}

TEST(Macmahon, Tame) {
  MacmahonModule m(BoundaryTriple::parse("(1);(1);()"), make_generic_params(5));
  for (int d = 0; d <= 5; ++d) EXPECT_TRUE(check_tame(m, d).passed) << d;
}

TEST(Macmahon, ETermsFollowConcaveCorners) {
  BoundaryTriple b = BoundaryTriple::parse("(2,1);();(1)");
  for (int d = 0; d <= 3; ++d)
    for (const auto& mu : enumerate_pp(b, d)) {
      EXPECT_EQ(e_terms(mu).size(), mu.corners().concave.size()) << mu.to_string();
      EXPECT_EQ(f_terms(mu).size(), mu.corners().convex.size()) << mu.to_string();
    }
}

TEST(Resonance, DiagonalRemovalIsProhibited) {
  for (int t = 0; t <= 1; ++t) {
    Box diag{2 + t, 1 + t, 2 + t};
    PlanePartition base = omega_t(BoundaryTriple{}, 1, 1, t + 1);
    ASSERT_TRUE(base.contains(diag.i, diag.j, diag.k));
    std::vector<PlanePartition> states{base};
    for (const auto& box : base.corners().concave) states.push_back(base.add_box(box));
    auto convex = base.corners().convex;
    ASSERT_NE(std::find(convex.begin(), convex.end(), diag), convex.end());
    for (const auto& mu : states) {
      for (const auto& term : f_terms(mu, std::make_pair(1, 1))) EXPECT_FALSE(term.box == diag) << mu.to_string();
      bool generic = false;
      for (const auto& term : f_terms(mu))
        if (term.box == diag) generic = !term.coeff.is_zero();
      EXPECT_TRUE(generic) << mu.to_string();
    }
  }
}

TEST(Resonance, SingularVectors) {
  MacmahonModule res(BoundaryTriple{}, make_resonant_params(2, 1, 1));
  EXPECT_TRUE(singular_vector_check(res, 1));
  EXPECT_TRUE(singular_vector_check(res, 2));
  MacmahonModule gen(BoundaryTriple{}, make_generic_params(2));
  EXPECT_FALSE(singular_vector_check(gen, 1, std::make_pair(1, 1)));
}

TEST(Resonance, QuotientBasisAvoidsTheBox) {
  MacmahonModule q(BoundaryTriple{}, make_resonant_params(1, 1, 1), true);
  auto brute = oracle::vacuum_pp_counts(6, [](const oracle::Heights& h) { return h[1][1] == 0; });
  for (int d = 0; d <= 6; ++d) {
    EXPECT_EQ(static_cast<long>(q.dimension(d)), brute[static_cast<std::size_t>(d)]);
    for (const auto& mu : q.basis(d)) EXPECT_FALSE(mu.contains(2, 1, 2));
  }
}

TEST(Limit, CoefficientsStayFinite) {
  for (const char* s : {"();();()", "(1);();()", "(2);();(1)"}) {
    BoundaryTriple b = BoundaryTriple::parse(s);
    LimitReport rep = limit_coefficients(b, 1, 2, Rational(2, 3), Rational(5, 7));
    EXPECT_TRUE(rep.all_finite) << s;
    EXPECT_FALSE(rep.entries.empty());
    for (const auto& e : rep.entries) EXPECT_GE(e.limit.order, 0) << e.source << " -> " << e.target;
    auto bnd = theta_from_boundary(b.alpha, b.gamma, -1, 6);
    for (int i = -6; i <= 6; ++i) EXPECT_EQ(Integer(rep.theta[i]), bnd[i]) << s << " i=" << i;
  }
}

TEST(Limit, RequiresEmptyBeta) {
  EXPECT_THROW(limit_coefficients(BoundaryTriple::parse("();(1);()"), 1, 2, Rational(2, 3), Rational(5, 7)),
               PreconditionError);
}
