#pragma once

#include "qtor/plane_partition.hpp"
#include "qtor/scalars.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qtor {

/// prod (1 - mono * x)^e in x = u/z; the K factor is the monomial K^1.
class PsiEigenvalue {
 public:
  PsiEigenvalue() = default;

  static PsiEigenvalue k_factor();

  PsiEigenvalue& multiply(const Monomial& mono, int e = 1);
  PsiEigenvalue& operator*=(const PsiEigenvalue& other);
  PsiEigenvalue& operator/=(const PsiEigenvalue& other);
  friend PsiEigenvalue operator*(PsiEigenvalue a, const PsiEigenvalue& b) { return a *= b; }

  /// x -> s x.
  PsiEigenvalue rescaled(const Monomial& s) const;
  PsiEigenvalue at_resonance(int m, int n) const;

  const std::map<Monomial, int>& factors() const { return factors_; }
  bool has_k_factor() const;
  /// K-free factors as canonical diagonal classes with their orders.
  std::vector<std::pair<MonomialTriple, int>> triples() const;
  int total_order() const;

  /// The value at x = point, kept symbolic.
  BinomialProduct at_point(const Monomial& point) const;
  Rational evaluate(const Rational& x, const ParamSpec& p) const;
  /// Taylor coefficients c_0..c_order at x = 0.
  std::vector<Rational> expand_at_zero(const ParamSpec& p, int order) const;
  /// Coefficients d_0..d_order of the expansion in 1/x at x = infinity.
  std::vector<Rational> expand_at_infinity(const ParamSpec& p, int order) const;

  std::string to_string() const;

  friend bool operator==(const PsiEigenvalue&, const PsiEigenvalue&) = default;
  friend auto operator<=>(const PsiEigenvalue& a, const PsiEigenvalue& b) { return a.factors_ <=> b.factors_; }

 private:
  std::map<Monomial, int> factors_;
};

/// psi^+_r = plus[r] and psi^-_{-r} = minus[r] for r = 0..order.
struct PsiModes {
  std::vector<Rational> plus;
  std::vector<Rational> minus;

  /// Mode psi^+_r - psi^-_r style lookup: psi^+ for r > 0, psi^- for r < 0.
  Rational plus_mode(int r) const;
  Rational minus_mode(int r) const;
};

PsiModes psi_modes(const PsiEigenvalue& psi, const ParamSpec& p, int order);

/// (1 - Kx) times the shell product.
PsiEigenvalue psi_shell(const PlanePartition& mu);
/// Layerwise product over lambda^(k) with shifts u_k.
PsiEigenvalue psi_product(const PlanePartition& mu);
/// Product of the vertex factors psi_{i,j,k} over Y_mu \ Y_omega, times psi of omega.
PsiEigenvalue psi_boxes(const PlanePartition& mu);

/// q1^a q3^b.
inline Monomial q13(int a, int b) { return {a - b, -b, 0, 0}; }

}  // namespace qtor
