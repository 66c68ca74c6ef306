#pragma once

#include "qtor/module.hpp"
#include "qtor/partitions.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace qtor {

struct WeightedIndex {
  int index = 0;
  Rational coeff;
};

/// Generator mode r on [u]_i. psi modes act diagonally and return index i.
std::vector<WeightedIndex> vector_action(Generator gen, int r, int i, const ParamSpec& p);
/// psi(q1^i x) with psi(x) = (1-q3 x)(1-q2 x)/((1-x)(1-q2 q3 x)).
PsiEigenvalue vector_psi(int i);

/// Finite formal combination of partitions.
using FockVector = std::map<Partition, Rational>;

PsiEigenvalue fock_psi(const Partition& lambda);
/// psi_{lambda,i} of the e action.
BinomialProduct fock_e_factor(const Partition& lambda, int i);
/// psi'_{lambda,i} of the f action, truncated where lambda stabilizes.
BinomialProduct fock_f_factor(const Partition& lambda, int i);

FockVector fock_e(const Partition& lambda, int r, const ParamSpec& p);
FockVector fock_f(const Partition& lambda, int r, const ParamSpec& p);

/// V(u), graded by the index i.
class VectorModule : public GradedModule {
 public:
  explicit VectorModule(ParamSpec p) : p_(std::move(p)) {}
  std::string name() const override { return "V(u)"; }
  const ParamSpec& params() const override { return p_; }
  std::size_t dimension(int) const override { return 1; }
  std::string label(int d, std::size_t) const override;
  std::vector<Transition> raise(int d, std::size_t index) const override;
  std::vector<Transition> lower(int d, std::size_t index) const override;
  PsiEigenvalue psi(int d, std::size_t index) const override;

 private:
  ParamSpec p_;
};

/// F(u), graded by |lambda|.
class FockModule : public GradedModule {
 public:
  explicit FockModule(ParamSpec p) : p_(std::move(p)) {}
  std::string name() const override { return "F(u)"; }
  const ParamSpec& params() const override { return p_; }
  std::size_t dimension(int d) const override;
  std::string label(int d, std::size_t index) const override;
  std::vector<Transition> raise(int d, std::size_t index) const override;
  std::vector<Transition> lower(int d, std::size_t index) const override;
  PsiEigenvalue psi(int d, std::size_t index) const override;

  const std::vector<Partition>& basis(int d) const;
  std::size_t index_of(const Partition& lambda) const;

 private:
  ParamSpec p_;
  mutable std::map<int, std::vector<Partition>> bases_;
  mutable std::map<Partition, std::size_t> index_;
  mutable std::mutex mutex_;
};

}  // namespace qtor
