#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtor {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an operation's precondition is violated.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a factored expression is evaluated at one of its poles.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

Rational power(const Rational& base, long exponent);
std::string to_string(const Rational& x);

/// q1^q1 q2^q2 u^u K^K with q3 eliminated through q1 q2 q3 = 1.
struct Monomial {
  int q1 = 0;
  int q2 = 0;
  int u = 0;
  int K = 0;

  static Monomial q3(int e = 1) { return {-e, -e, 0, 0}; }

  bool is_one() const { return q1 == 0 && q2 == 0 && u == 0 && K == 0; }
  Monomial pow(int e) const { return {q1 * e, q2 * e, u * e, K * e}; }
  Monomial inverse() const { return pow(-1); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.q1 + b.q1, a.q2 + b.q2, a.u + b.u, a.K + b.K};
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// q1^j q2^k q3^i, the exponent convention used for boxes (i,j,k).
struct MonomialTriple {
  int i = 0;
  int j = 0;
  int k = 0;

  Monomial monomial() const { return {j - i, k - i, 0, 0}; }
  MonomialTriple shifted(int t) const { return {i + t, j + t, k + t}; }
  /// Representative of the diagonal class with min(i,j,k) = 0.
  MonomialTriple canonical() const;

  friend auto operator<=>(const MonomialTriple&, const MonomialTriple&) = default;
};

std::string to_string(const MonomialTriple& t);

enum class LevelKind { Generic, Resonant };

struct ParamSpec {
  Rational q1;
  Rational q2;
  Rational u;
  Rational K;
  LevelKind level = LevelKind::Generic;
  int m = 0;
  int n = 0;

  Rational q3() const { return 1 / (q1 * q2); }
  Rational eval(const Monomial& mono) const;
  Rational eval(const MonomialTriple& t) const { return eval(t.monomial()); }
  bool resonant() const { return level == LevelKind::Resonant; }
  std::string describe() const;
};

/// True when q1^a q2^b q3^c != 1 for all |a|,|b|,|c| <= bound not all equal.
bool is_generic_pair(const Rational& q1, const Rational& q2, int bound);
/// True when K avoids every q1^a q2^b q3^c with |a|,|b|,|c| <= bound.
bool is_generic_level(const Rational& q1, const Rational& q2, const Rational& K, int bound);

ParamSpec make_params(const Rational& q1, const Rational& q2, const Rational& u, const Rational& K,
                      int bound = 16);
ParamSpec make_generic_params(std::uint64_t seed, int bound = 16);
/// Generic q1, q2, u with K = q2^m q3^n.
ParamSpec make_resonant_params(std::uint64_t seed, int m, int n, int bound = 16);
/// Same q1, q2, u as p, with K replaced by q2^m q3^n.
ParamSpec with_resonance(const ParamSpec& p, int m, int n);

Rational eval_monomial(const MonomialTriple& t, const ParamSpec& p);

class FactoredQ1Scalar;

/// c * prefactor * prod (1 - mono)^e, a coefficient kept symbolic in q1, q2, u, K.
class BinomialProduct {
 public:
  BinomialProduct() = default;
  explicit BinomialProduct(Rational c) : constant_(std::move(c)) {}

  const Rational& constant() const { return constant_; }
  const Monomial& prefactor() const { return prefactor_; }
  const std::map<Monomial, int>& factors() const { return factors_; }

  BinomialProduct& scale(const Rational& c);
  BinomialProduct& times(const Monomial& mono);
  /// Multiplies by (1 - mono)^e.
  BinomialProduct& binomial(const Monomial& mono, int e = 1);
  BinomialProduct& operator*=(const BinomialProduct& other);
  BinomialProduct& operator/=(const BinomialProduct& other);

  /// A numerator factor (1 - 1).
  bool is_zero() const;
  /// A denominator factor (1 - 1).
  bool has_pole() const;

  Rational evaluate(const ParamSpec& p) const;
  /// Substitutes K = q2^m q3^n.
  BinomialProduct at_resonance(int m, int n) const;
  /// Specializes q2, u and K = q1^kappa, leaving a function of q1.
  FactoredQ1Scalar in_q1(const Rational& q2, const Rational& u, int kappa) const;

  std::string to_string() const;

 private:
  Rational constant_{1};
  Monomial prefactor_{};
  std::map<Monomial, int> factors_;
};

struct Q1Factor {
  int a = 0;
  Rational rho;
  int e = 0;
};

struct Q1Limit {
  static constexpr int kExactZero = std::numeric_limits<int>::max();
  Rational value;
  int order = 0;
  bool pole() const { return order < 0; }
};

/// c * q1^exponent * prod (1 - q1^a rho)^e as an exact function of q1.
class FactoredQ1Scalar {
 public:
  FactoredQ1Scalar() = default;
  explicit FactoredQ1Scalar(Rational c, int exponent = 0);

  static FactoredQ1Scalar binomial(int a, const Rational& rho, int e = 1);

  const Rational& constant() const { return c_; }
  int exponent() const { return exponent_; }
  const std::vector<Q1Factor>& factors() const { return factors_; }
  bool is_zero() const { return c_ == 0; }

  FactoredQ1Scalar& mul_binomial(int a, const Rational& rho, int e = 1);
  FactoredQ1Scalar& operator*=(const FactoredQ1Scalar& other);
  FactoredQ1Scalar& operator/=(const FactoredQ1Scalar& other);
  friend FactoredQ1Scalar operator*(FactoredQ1Scalar a, const FactoredQ1Scalar& b) { return a *= b; }
  friend FactoredQ1Scalar operator/(FactoredQ1Scalar a, const FactoredQ1Scalar& b) { return a /= b; }

  Rational evaluate(const Rational& q1) const;
  std::string to_string() const;

 private:
  Rational c_{1};
  int exponent_ = 0;
  std::vector<Q1Factor> factors_;
};

/// Vanishing order at q1 = 1 and the leading value when the order is zero.
Q1Limit limit_at_q1_one(const FactoredQ1Scalar& s);

}  // namespace qtor
