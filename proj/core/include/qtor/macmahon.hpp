#pragma once

#include "qtor/module.hpp"
#include "qtor/plane_partition.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace qtor {

/// A symbolic term of e(z) or f(z) on a plane partition.
struct PPTerm {
  PlanePartition target;
  BinomialProduct coeff;
  Monomial support;
  Box box;
};

using PPVector = std::vector<std::pair<PlanePartition, Rational>>;

/// psi^(k)(x) = prod_{m<=k} psi_{lambda^(m)}(u_m x / u).
PsiEigenvalue psi_head(const PlanePartition& mu, int k);
/// psi'^(k)(x): the layers m >= k, regularized with the (1-Kx) factor.
PsiEigenvalue psi_tail(const PlanePartition& mu, int k);

/// Symbolic e(z) terms; K never enters.
std::vector<PPTerm> e_terms(const PlanePartition& mu);
/// Symbolic f(z) terms; resonance = (m,n) substitutes K = q2^m q3^n before evaluation at the support.
std::vector<PPTerm> f_terms(const PlanePartition& mu, std::optional<std::pair<int, int>> resonance = {});

/// M_{alpha,beta,gamma}(u,K), or its quotient N^{m,n} when the level is resonant and quotient is set.
class MacmahonModule : public GradedModule {
 public:
  MacmahonModule(BoundaryTriple boundary, ParamSpec params, bool quotient = false);

  std::string name() const override;
  const ParamSpec& params() const override { return params_; }
  std::size_t dimension(int d) const override;
  std::string label(int d, std::size_t index) const override;
  std::vector<Transition> raise(int d, std::size_t index) const override;
  std::vector<Transition> lower(int d, std::size_t index) const override;
  PsiEigenvalue psi(int d, std::size_t index) const override;

  const BoundaryTriple& boundary() const { return boundary_; }
  bool quotient() const { return forbidden_.has_value(); }
  const std::optional<Box>& forbidden() const { return forbidden_; }
  std::optional<std::pair<int, int>> resonance() const;

  const std::vector<PlanePartition>& basis(int d) const;
  std::optional<std::size_t> find(const PlanePartition& mu) const;

 private:
  BoundaryTriple boundary_;
  ParamSpec params_;
  std::optional<Box> forbidden_;
  mutable std::map<int, std::vector<PlanePartition>> bases_;
  mutable std::map<int, std::map<std::map<std::pair<int, int>, int>, std::size_t>> index_;
  mutable std::recursive_mutex mutex_;
};

PPVector e_action(const MacmahonModule& mod, const PlanePartition& mu, int r);
PPVector f_action(const MacmahonModule& mod, const PlanePartition& mu, int r);

/// f_r on omega_t vanishes for every r in [r_min, r_max]; (m,n) defaults to the module's resonance.
bool singular_vector_check(const MacmahonModule& mod, int t, std::optional<std::pair<int, int>> mn = {},
                           int r_min = -3, int r_max = 3);

struct LimitEntry {
  bool raising = true;
  std::string source;
  std::string target;
  FactoredQ1Scalar scalar;
  Q1Limit limit;
};

struct LimitReport {
  int n = 0;
  int max_degree = 0;
  std::vector<LimitEntry> entries;
  bool all_finite = true;
  /// theta_i on omega from the q1 -> 1 limit of the psi eigenvalue, i in [-window, window].
  std::map<int, int> theta;
};

/// p(lambda) = sum_i lambda^(i)_i.
int rescaling_exponent(const PlanePartition& mu);
/// Diagonal gl_infinity eigenvalues of a state in the limit, K = q1^kappa.
std::map<int, int> limit_cartan(const PlanePartition& mu, int kappa, int window);
/// Requires beta empty; K = (q2 q3)^n, optionally restricted to the quotient N^{n,n}.
LimitReport limit_coefficients(const BoundaryTriple& b, int n, int max_degree, const Rational& q2,
                               const Rational& u, bool quotient = true, int window = 6);

}  // namespace qtor
