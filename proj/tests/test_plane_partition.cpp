#include "oracles.hpp"
#include "qtor/partitions.hpp"
#include "qtor/plane_partition.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qtor;

TEST(Partition, ParseAndNormalize) {
  Partition p = Partition::parse("(3,1,0,0)");
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p[1], 3);
  EXPECT_EQ(p[5], 0);
  EXPECT_EQ(p.size(), 4);
  EXPECT_TRUE(Partition::parse("()").empty());
  EXPECT_THROW(Partition::parse("(2,x)"), PreconditionError);
}

TEST(Partition, CountsMatchOracle) {
  for (int n = 0; n <= 12; ++n)
    EXPECT_EQ(partitions_of(n).size(), oracle::partitions(n).size()) << n;
}

TEST(Partition, TransposeIsAnInvolution) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(transpose(transpose(p)), p);
      EXPECT_EQ(transpose(p).size(), n);
    }
  EXPECT_EQ(transpose(Partition{3, 1}), (Partition{2, 1, 1}));
}

TEST(Partition, CornersMatchAddRemove) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) {
      auto c = corners2d(p);
      std::set<Cell> concave(c.concave.begin(), c.concave.end()), convex(c.convex.begin(), c.convex.end());
      std::set<Cell> add, rem;
      for (int i = 1; i <= p.length() + 1; ++i) {
        if (i == 1 || p[i] < p[i - 1]) add.insert({i, p[i] + 1});
        if (p[i] > 0 && p[i] > p[i + 1]) rem.insert({i, p[i]});
      }
      EXPECT_EQ(concave, add) << p.to_string();
      EXPECT_EQ(convex, rem) << p.to_string();
    }
}

TEST(Boundary, ParseRoundTrip) {
  BoundaryTriple b = BoundaryTriple::parse("(3,1);(3,2,1,1);()");
  EXPECT_EQ(b.alpha, (Partition{3, 1}));
  EXPECT_EQ(b.beta, (Partition{3, 2, 1, 1}));
  EXPECT_TRUE(b.gamma.empty());
  EXPECT_EQ(BoundaryTriple::parse(b.to_string()), b);
  EXPECT_THROW(BoundaryTriple::parse("(1);(2)"), PreconditionError);
}

TEST(PlanePartition, VacuumCountsMatchBruteForce) {
  auto brute = oracle::vacuum_pp_counts(8);
  auto counts = count_pp(BoundaryTriple{}, 8);
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(static_cast<long>(counts[static_cast<std::size_t>(d)]), brute[static_cast<std::size_t>(d)]) << d;
}

TEST(PlanePartition, BoxedCountMatchesMacmahonBoxFormula) {
  // prod (i+j+k-1)/(i+j+k-2) over the 2x2x2 box is 20
  auto c = oracle::boxed_pp_counts(2, 2, 2, 8);
  long total = 0;
  for (long x : c) total += x;
  EXPECT_EQ(total, 20);
}

TEST(PlanePartition, CornersMatchBruteForceOnVacuum) {
  for (int d = 0; d <= 5; ++d)
    for (const auto& mu : enumerate_pp(BoundaryTriple{}, d)) {
      int E = mu.extent() + 2;
      std::set<Box> add, rem;
      for (int i = 1; i <= E; ++i)
        for (int j = 1; j <= E; ++j)
          for (int k = 1; k <= E; ++k) {
            bool in = mu.contains(i, j, k);
            bool supported = mu.contains_closure(i - 1, j, k) && mu.contains_closure(i, j - 1, k) &&
                             mu.contains_closure(i, j, k - 1);
            bool exposed = !mu.contains(i + 1, j, k) && !mu.contains(i, j + 1, k) && !mu.contains(i, j, k + 1);
            if (!in && supported) add.insert({i, j, k});
            if (in && exposed) rem.insert({i, j, k});
          }
      auto c = mu.corners();
      EXPECT_EQ(std::set<Box>(c.concave.begin(), c.concave.end()), add) << mu.to_string();
      EXPECT_EQ(std::set<Box>(c.convex.begin(), c.convex.end()), rem) << mu.to_string();
    }
}

TEST(PlanePartition, AddRemoveRoundTrip) {
  BoundaryTriple b = BoundaryTriple::parse("(2);(1);(1)");
  for (int d = 0; d <= 3; ++d)
    for (const auto& mu : enumerate_pp(b, d)) {
      for (const auto& box : mu.corners().concave) {
        PlanePartition nu = mu.add_box(box);
        EXPECT_EQ(nu.degree(), d + 1);
        EXPECT_TRUE(nu.valid());
        EXPECT_EQ(nu.remove_box(box), mu);
      }
    }
}

TEST(PlanePartition, BoundaryOmegaIsMinimal) {
  BoundaryTriple b = BoundaryTriple::parse("(3,1);(2);(2,1)");
  PlanePartition omega(b);
  EXPECT_TRUE(omega.valid());
  EXPECT_EQ(omega.degree(), 0);
  EXPECT_TRUE(omega.corners().convex.empty());
  EXPECT_EQ(omega.omega(1, 3), 3);  // alpha_1 on row 3
  EXPECT_EQ(omega.omega(3, 1), 2);  // gamma_1 on layer 3
  EXPECT_EQ(omega.omega(1, 1), kInfinity);
  auto c = count_pp(b, 0);
  EXPECT_EQ(c[0], 1u);
}

TEST(PlanePartition, S3SymmetryPreservesCounts) {
  BoundaryTriple b = BoundaryTriple::parse("(2);(1);()");
  auto base = count_pp(b, 5);
  for (std::array<int, 3> perm : {std::array<int, 3>{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}}) {
    BoundaryTriple t = s3_boundary(b, perm);
    EXPECT_EQ(count_pp(t, 5), base) << t.to_string();
  }
}

TEST(PlanePartition, LayersRoundTrip) {
  BoundaryTriple b = BoundaryTriple::parse("(2,1);(1);(1)");
  for (int d = 0; d <= 3; ++d)
    for (const auto& mu : enumerate_pp(b, d)) {
      int top = mu.extent() + 1;
      std::vector<Partition> layers;
      for (const auto& l : to_layers(mu, top)) layers.push_back(l.lambda);
      EXPECT_EQ(from_layers(b, layers), mu);
    }
}

TEST(Resonance, VacuumBoxAndOmegaT) {
  EXPECT_EQ(resonance_box(BoundaryTriple{}, 1, 1), (Box{2, 1, 2}));
  EXPECT_EQ(resonance_box(BoundaryTriple{}, 2, 0), (Box{1, 1, 3}));
  EXPECT_EQ(resonance_box(BoundaryTriple{}, 0, 0), (Box{1, 1, 1}));
  PlanePartition w1 = omega_t(BoundaryTriple{}, 1, 1, 1);
  EXPECT_EQ(w1.degree(), 4);
  EXPECT_TRUE(w1.contains(2, 1, 2));
  EXPECT_EQ(omega_t(BoundaryTriple{}, 1, 1, 2).degree(), 18);
}

TEST(Resonance, QuotientIsSecondLayerSecondRowEmpty) {
  auto brute = oracle::vacuum_pp_counts(7, [](const oracle::Heights& h) { return h[1][1] == 0; });
  auto counts = count_pp(BoundaryTriple{}, 7, Box{2, 1, 2});
  for (int d = 0; d <= 7; ++d) EXPECT_EQ(static_cast<long>(counts[static_cast<std::size_t>(d)]), brute[static_cast<std::size_t>(d)]);
}

TEST(Shell, OrdersSumToTheCountOfOmegaFactors) {
  PlanePartition mu = minimal_pp(BoundaryTriple{}).add_box({1, 1, 1});
  auto pts = shell(mu);
  int total = 0;
  for (const auto& p : pts) total += p.order;
  EXPECT_EQ(total, -1);
  EXPECT_EQ(corner_order(mu, 1, 1, 1), -1);
}

TEST(Splits, ArmsAndLegsOfWorkedExamples) {
  auto s = splits_decompose(BoundaryTriple::parse("();(1);()"), 2, 1, 2);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->alpha_arms.empty());
  EXPECT_TRUE(s->beta_legs.empty());
  EXPECT_TRUE(splits_decompose(BoundaryTriple{}, 1, 1, 3).has_value());
  EXPECT_FALSE(splits_decompose(BoundaryTriple{}, 2, 1, 2).has_value());
}
