// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"
#include "qtor/characters.hpp"
#include "qtor/fock.hpp"
#include "qtor/gz.hpp"
#include "qtor/macmahon.hpp"
#include "qtor/psi.hpp"
#include "qtor/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

using namespace qtor;

namespace {

constexpr std::uint64_t kSeeds[] = {11, 23, 37};
constexpr std::uint64_t kBoundarySeed = 2024;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

IntegerSeries from_counts(const std::vector<long>& c) {
  IntegerSeries s(static_cast<int>(c.size()) - 1);
  for (std::size_t i = 0; i < c.size(); ++i) s.set(static_cast<int>(i), Integer(c[i]));
  return s;
}

std::string failure_of(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed)
      return r.module + " " + r.relation + " d=" + std::to_string(r.degree) + " " + r.modes + " " + r.counterexample;
  return {};
}

/// Five distinct boundaries with |alpha|,|beta|,|gamma| <= 2, drawn from a fixed seed.
std::vector<BoundaryTriple> random_boundaries() {
  const std::vector<Partition> small{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}};
  std::mt19937_64 rng(kBoundarySeed);
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  std::vector<BoundaryTriple> out;
  while (out.size() < 5) {
    BoundaryTriple b{small[pick(rng)], small[pick(rng)], small[pick(rng)]};
    if (b.alpha.empty() && b.beta.empty() && b.gamma.empty()) continue;
    bool seen = false;
    for (const auto& x : out) seen = seen || x == b;
    if (!seen) out.push_back(b);
  }
  return out;
}

struct ModuleCase {
  std::unique_ptr<GradedModule> module;
  int min_degree;
  int max_degree;
};

/// The modules of the relation suite for one parameter seed.
std::vector<ModuleCase> relation_modules(std::uint64_t seed) {
  std::vector<ModuleCase> out;
  ParamSpec p = make_generic_params(seed);
  out.push_back({std::make_unique<VectorModule>(p), -4, 4});
  out.push_back({std::make_unique<FockModule>(p), 0, 4});
  for (const auto& b : random_boundaries()) out.push_back({std::make_unique<MacmahonModule>(b, p), 0, 4});
  out.push_back({std::make_unique<MacmahonModule>(BoundaryTriple{}, make_resonant_params(seed, 1, 1), true), 0, 4});
  out.push_back({std::make_unique<MacmahonModule>(BoundaryTriple{}, make_resonant_params(seed, 2, 0), true), 0, 4});
  return out;
}

Outcome vacuum_character() {
  Outcome o;
  const std::vector<long> expected{1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};
  IntegerSeries series = macmahon_series(10);
  IntegerSeries brute = from_counts(oracle::vacuum_pp_counts(10));
  MacmahonModule m(BoundaryTriple{}, make_generic_params(kSeeds[0]));
  for (int d = 0; d <= 10; ++d) {
    Integer want(expected[static_cast<std::size_t>(d)]);
    Integer dim(static_cast<unsigned long>(m.dimension(d)));
    if (series[d] != want || brute[d] != want || dim != want)
      o.fail("degree " + std::to_string(d) + ": module " + dim.get_str() + ", series " + series[d].get_str() +
             ", box enumeration " + brute[d].get_str());
  }
  return o;
}

Outcome psi_table() {
  Outcome o;
  const Monomial K{0, 0, 0, 1}, one{}, q1{1, 0, 0, 0}, q2{0, 1, 0, 0}, q3 = Monomial::q3();
  auto factors = [](std::initializer_list<std::pair<Monomial, int>> list) {
    PsiEigenvalue p;
    for (const auto& [m, e] : list) p.multiply(m, e);
    return p;
  };
  std::vector<std::pair<const char*, PsiEigenvalue>> rows{
      {"();();()", factors({{K, 1}, {one, -1}})},
      {"(1);();()", factors({{K, 1}, {q1 * q2, 1}, {q1, -1}, {q2, -1}})},
      {"(2);();()", factors({{K, 1}, {q1 * q1 * q2, 1}, {q1 * q1, -1}, {q2, -1}})},
      {"(1);(1);()", factors({{K, 1}, {q1 * q2 * q3, 1}, {q2, -1}, {q1 * q3, -1}})},
      {"(1);(1);(1)", factors({{K, 1}, {q1 * q2 * q3, 2}, {q1 * q2, -1}, {q1 * q3, -1}, {q2 * q3, -1}})},
  };
  for (const auto& [b, want] : rows) {
    PsiEigenvalue got = psi_shell(PlanePartition(BoundaryTriple::parse(b)));
    if (!(got == want)) o.fail(std::string(b) + ": got " + got.to_string() + ", want " + want.to_string());
  }
  return o;
}

Outcome relation_suite() {
  Outcome o;
  for (std::uint64_t seed : kSeeds)
    for (auto& c : relation_modules(seed)) {
      EvaluatedModule ev(*c.module);
      SuiteOptions opt;
      opt.min_degree = c.min_degree;
      opt.max_degree = c.max_degree;
      opt.stop_at_first_failure = true;
      auto reports = run_relation_suite(ev, opt);
      if (!all_passed(reports)) o.fail("seed " + std::to_string(seed) + ": " + failure_of(reports));
    }
  return o;
}

Outcome tameness() {
  Outcome o;
  for (std::uint64_t seed : kSeeds)
    for (auto& c : relation_modules(seed)) {
      int lo = c.min_degree < 0 ? -6 : 0;
      for (int d = lo; d <= 6; ++d) {
        auto r = check_tame(*c.module, d);
        if (!r.passed) o.fail(c.module->name() + " d=" + std::to_string(d) + " " + r.counterexample);
      }
    }
  return o;
}

Outcome resonance_structure() {
  Outcome o;
  for (int t = 0; t <= 1; ++t) {
    Box diag{2 + t, 1 + t, 2 + t};
    PlanePartition base = omega_t(BoundaryTriple{}, 1, 1, t + 1);
    std::vector<PlanePartition> states{base};
    for (const auto& box : base.corners().concave) states.push_back(base.add_box(box));
    auto convex = base.corners().convex;
    if (std::find(convex.begin(), convex.end(), diag) == convex.end()) o.fail("diagonal box is not removable");
    for (const auto& mu : states) {
      for (const auto& term : f_terms(mu, std::make_pair(1, 1)))
        if (term.box == diag) o.fail("f removes the diagonal box from " + mu.to_string());
      bool generic = false;
      for (const auto& term : f_terms(mu))
        if (term.box == diag) generic = !term.coeff.is_zero();
      if (!generic) o.fail("generic f does not remove the diagonal box from " + mu.to_string());
    }
  }
  for (std::uint64_t seed : kSeeds) {
    MacmahonModule res(BoundaryTriple{}, make_resonant_params(seed, 1, 1));
    for (int t = 1; t <= 2; ++t)
      if (!singular_vector_check(res, t)) o.fail("f(z) omega_" + std::to_string(t) + " != 0");
  }
  MacmahonModule q(BoundaryTriple{}, make_resonant_params(kSeeds[0], 1, 1), true);
  auto brute = oracle::vacuum_pp_counts(8, [](const oracle::Heights& h) { return h[1][1] == 0; });
  for (int d = 0; d <= 8; ++d) {
    if (static_cast<long>(q.dimension(d)) != brute[static_cast<std::size_t>(d)])
      o.fail("quotient dimension at degree " + std::to_string(d));
    for (const auto& mu : q.basis(d))
      if (mu.contains(2, 1, 2)) o.fail("quotient basis contains " + mu.to_string());
  }
  return o;
}

Outcome chi_checks() {
  Outcome o;
  for (int k = 0; k <= 4; ++k) {
    IntegerSeries closed = chi_bar(k, 12);
    IntegerSeries pairs = from_counts(oracle::pair_counts(k, 12));
    if (auto d = closed.first_difference(pairs)) o.fail("k=" + std::to_string(k) + " differs at q^" + std::to_string(*d));
  }
  IntegerSeries rhs = euler_function(12).pow(-2);
  for (int k = 0; k <= 8; ++k) {
    IntegerSeries lhs = chi_bar(k, 12) + chi_bar(k + 1, 12).shifted(k + 1).truncated(12);
    if (auto d = lhs.first_difference(rhs)) o.fail("recursion k=" + std::to_string(k) + " at q^" + std::to_string(*d));
  }
  return o;
}

Outcome theorem() {
  Outcome o;
  for (std::vector<int> a : {std::vector<int>{0, 0}, {1, 0}, {2, 1}, {1, -1}}) {
    IntegerSeries t = theorem_character(a, 8);
    IntegerSeries h = hook_character(a, 8);
    if (auto d = t.first_difference(h))
      o.fail("alpha=(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ") differs at q^" + std::to_string(*d));
  }
  return o;
}

Outcome conjectures() {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    IntegerSeries c = conjecture1(m, 8);
    IntegerSeries e = module_character(BoundaryTriple{}, std::make_pair(1, m), 8);
    if (auto d = c.first_difference(e))
      o.fail("conjecture1(" + std::to_string(m) + ") at q^" + std::to_string(*d) + ": " + c[*d].get_str() + " vs " +
             e[*d].get_str());
  }
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
    IntegerSeries c = conjecture2(n, m, 6);
    IntegerSeries e = module_character(BoundaryTriple{}, std::make_pair(n, m), 6);
    if (auto d = c.first_difference(e))
      o.fail("conjecture2(" + std::to_string(n) + "," + std::to_string(m) + ") at q^" + std::to_string(*d) + ": " +
             c[*d].get_str() + " vs " + e[*d].get_str());
  }
  if (conjecture1(1, 8).first_difference(conjecture2(1, 1, 8))) o.fail("conjecture1(1) != conjecture2(1,1)");
  return o;
}

Outcome gz_relations() {
  Outcome o;
  struct Case {
    int n;
    Partition alpha;
    int c;
  };
  for (const auto& c : {Case{1, {1}, 0}, Case{2, {1, 0}, 0}, Case{2, {2, 2}, 1}}) {
    GZCheckOptions opt;
    opt.window = 2;
    opt.max_deviation = 4;
    Partition gamma(std::vector<int>(static_cast<std::size_t>(c.n), c.c));
    auto r = check_glinf_relations(c.n, c.alpha, gamma, opt);
    if (!r.passed) o.fail(r.module + " " + r.modes + " " + r.counterexample);
  }
  return o;
}

Outcome limit() {
  Outcome o;
  struct Case {
    const char* b;
    int c;
  };
  const int window = 4;
  for (const auto& c : {Case{"();();()", 0}, Case{"(1);();()", 0}, Case{"(3);();()", 0}, Case{"(2,1);();()", 0},
                        Case{"();();(1)", 1}, Case{"(2);();(1)", 1}}) {
    BoundaryTriple b = BoundaryTriple::parse(c.b);
    LimitReport rep = limit_coefficients(b, 1, 2, Rational(2, 3), Rational(5, 7), true, window);
    if (rep.entries.empty()) o.fail(std::string(c.b) + ": no matrix entries");
    if (!rep.all_finite) o.fail(std::string(c.b) + ": a coefficient has a pole at q1 = 1");
    for (const auto& e : rep.entries)
      if (e.limit.order < 0) o.fail(std::string(c.b) + ": " + e.source + " -> " + e.target);
    auto bnd = theta_from_boundary(b.alpha, b.gamma, -1, window);
    for (int i = -window; i <= window; ++i)
      if (Integer(rep.theta[i]) != bnd[i]) o.fail(std::string(c.b) + ": theta_" + std::to_string(i) + " vs boundary");
    if (b.alpha.length() <= 1) {
      auto hwt = lowest_weight_theta(1, b.alpha, c.c, window);
      for (int i = -window; i <= window; ++i)
        if (Integer(rep.theta[i]) != hwt[i]) o.fail(std::string(c.b) + ": theta_" + std::to_string(i) + " vs lowest weight");
    }
  }
  return o;
}

Outcome tensor() {
  Outcome o;
  struct Case {
    const char* b;
    int a, bb, c;
  };
  for (const auto& c : {Case{"();();()", 1, 1, 1}, Case{"();();()", 1, 1, 2}, Case{"();();()", 1, 1, 3},
                        Case{"();(1);()", 2, 1, 2}}) {
    auto r = tensor_factorization_check(BoundaryTriple::parse(c.b), c.a, c.bb, c.c, 6);
    if (!r.splits) o.fail(std::string(c.b) + " does not split");
    else if (r.first_difference)
      o.fail(std::string(c.b) + " N^{" + std::to_string(r.m) + "," + std::to_string(r.n) + "} differs at q^" +
             std::to_string(*r.first_difference));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "vacuum character to degree 10", 30, vacuum_character},
      {2, "psi eigenvalue table", 1, psi_table},
      {3, "relation suite on V, F, M and quotients", 300, relation_suite},
      {4, "tameness to degree 6", 300, tameness},
      {5, "resonance structure at (1,1)", 60, resonance_structure},
      {6, "chi_k closed form and recursion", 60, chi_checks},
      {7, "character theorem for n = 2", 60, theorem},
      {8, "conjectures 1 and 2", 120, conjectures},
      {9, "gl_infinity relations on hook patterns", 300, gz_relations},
      {10, "limit q1 -> 1", 120, limit},
      {11, "tensor factorization", 120, tensor},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.fail("took " + std::to_string(secs) + " s");
    all = all && o.ok;
    std::printf("criterion %2d %s  %-42s %8.2fs / %.0fs%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs,
                c.limit_seconds, o.ok ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
