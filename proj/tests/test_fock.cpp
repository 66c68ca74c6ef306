#include "oracles.hpp"
#include "qtor/fock.hpp"
#include "qtor/verify.hpp"

#include <gtest/gtest.h>

using namespace qtor;

namespace {

SuiteOptions window(int lo, int hi) {
  SuiteOptions o;
  o.min_degree = lo;
  o.max_degree = hi;
  return o;
}

std::string first_failure(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return r.relation + " d=" + std::to_string(r.degree) + " " + r.modes + ": " + r.counterexample;
  return {};
}

}  // namespace

TEST(Vector, RelationsHold) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    VectorModule v(make_generic_params(seed));
    EvaluatedModule ev(v);
    auto reports = run_relation_suite(ev, window(-3, 3));
    EXPECT_TRUE(all_passed(reports)) << first_failure(reports);
  }
}

TEST(Vector, PsiIsShiftedVacuum) {
  ParamSpec p = make_generic_params(9);
  for (int i = -2; i <= 2; ++i) {
    PsiEigenvalue psi = vector_psi(i);
    Rational x(3, 11);
    Rational y = power(p.q1, i) * x;
    Rational direct = (1 - p.q3() * y) * (1 - p.q2 * y) / ((1 - y) * (1 - p.q2 * p.q3() * y));
    EXPECT_EQ(psi.evaluate(x, p), direct);
  }
}

TEST(Fock, DimensionsArePartitionCounts) {
  FockModule f(make_generic_params(1));
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(f.dimension(d), oracle::partitions(d).size());
}

TEST(Fock, RelationsHold) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    FockModule f(make_generic_params(seed));
    EvaluatedModule ev(f);
    auto reports = run_relation_suite(ev, window(0, 4));
    EXPECT_TRUE(all_passed(reports)) << first_failure(reports);
  }
}

TEST(Fock, TameUpToDegreeSix) {
  FockModule f(make_generic_params(4));
  for (int d = 0; d <= 6; ++d) EXPECT_TRUE(check_tame(f, d).passed) << d;
}

TEST(Fock, EAddsOneBoxFOnlyRemoves) {
  ParamSpec p = make_generic_params(2);
  Partition lam{2,1};
  for (const auto& [mu, c] : fock_e(lam, 0, p)) {
    EXPECT_EQ(mu.size(), 4);
    EXPECT_NE(c, 0);
  }
  EXPECT_EQ(fock_e(lam, 0, p).size(), 3u);
  EXPECT_EQ(fock_f(lam, 0, p).size(), 2u);
  EXPECT_TRUE(fock_f(Partition{}, 0, p).empty());
}

TEST(Fock, InjectedFaultIsCaught) {
  FockModule f(make_generic_params(1));
  EvaluatedModule ev(f);
  ev.inject_fault(1, 0, Rational(2));
  auto reports = run_relation_suite(ev, window(0, 3));
  EXPECT_FALSE(all_passed(reports));
  bool located = false;
  for (const auto& r : reports)
    if (!r.passed && !r.counterexample.empty()) located = true;
  EXPECT_TRUE(located);
}
