#pragma once

#include "qtor/module.hpp"

#include <string>
#include <vector>

namespace qtor {

struct RelationReport {
  std::string relation;
  std::string module;
  int degree = 0;
  std::string modes;
  bool passed = true;
  /// Set on failure: the first nonzero entry of the residual.
  std::string counterexample;
};

/// [e_r, f_s] = (psi^+_{r+s} - psi^-_{r+s}) / ((1-q1)(1-q2)(1-q3)) on degree d.
RelationReport check_ef(EvaluatedModule& mod, int d, int r, int s);
/// Coefficient of z^-a w^-b in g(z,w)e(z)e(w) + g(w,z)e(w)e(z) (or the f version) on degree d.
RelationReport check_quadratic(EvaluatedModule& mod, Generator gen, int d, int a, int b);
/// Coefficient of z^-a w^-b in the psi-e (or psi-f) exchange relation; psi is PsiPlus or PsiMinus.
RelationReport check_psi_e(EvaluatedModule& mod, Generator psi, Generator gen, int d, int a, int b);
/// psi modes commute among themselves.
RelationReport check_psi_psi(EvaluatedModule& mod, int d, int r, int s);
/// [e0,[e1,e-1]] = 0 and [f0,[f1,f-1]] = 0 on degree d.
std::vector<RelationReport> check_serre(EvaluatedModule& mod, int d);
/// Pairwise distinct psi eigenvalues on degree d.
RelationReport check_tame(const GradedModule& mod, int d);

struct SuiteOptions {
  int min_degree = 0;
  int max_degree = 4;
  int mode_min = -2;
  int mode_max = 2;
  bool stop_at_first_failure = false;
};

/// Every relation over the degree and mode windows.
std::vector<RelationReport> run_relation_suite(EvaluatedModule& mod, const SuiteOptions& opt = {});

bool all_passed(const std::vector<RelationReport>& reports);

}  // namespace qtor
