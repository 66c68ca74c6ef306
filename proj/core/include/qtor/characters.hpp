#pragma once

#include "qtor/plane_partition.hpp"
#include "qtor/scalars.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtor {

/// Integer power series in q known exactly up to q^order.
class IntegerSeries {
 public:
  explicit IntegerSeries(int order = 0);
  IntegerSeries(int order, std::vector<Integer> coeffs);
  static IntegerSeries one(int order);
  /// q^k.
  static IntegerSeries monomial(int order, int k, Integer c = 1);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  void set(int i, Integer v);
  const std::vector<Integer>& coefficients() const { return c_; }

  IntegerSeries operator+(const IntegerSeries& o) const;
  IntegerSeries operator-(const IntegerSeries& o) const;
  IntegerSeries operator*(const IntegerSeries& o) const;
  IntegerSeries operator*(const Integer& k) const;
  IntegerSeries& operator+=(const IntegerSeries& o) { return *this = *this + o; }
  IntegerSeries& operator*=(const IntegerSeries& o) { return *this = *this * o; }
  /// Requires constant term +-1.
  IntegerSeries inverse() const;
  IntegerSeries pow(int e) const;
  /// Multiply by q^k; k < 0 requires the low coefficients to vanish.
  IntegerSeries shifted(int k) const;
  IntegerSeries truncated(int order) const;

  bool non_negative() const;
  /// First index where the two differ, over the common order.
  std::optional<int> first_difference(const IntegerSeries& o) const;
  std::string to_string() const;

  friend bool operator==(const IntegerSeries& a, const IntegerSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Integer> c_;
};

/// prod (1-q^i)^{-i}.
IntegerSeries macmahon_series(int order);
/// (q)_infinity by the pentagonal expansion.
IntegerSeries euler_function(int order);

IntegerSeries chi_bar(int a, int order);
/// chi_k = chi_bar_k, chi_{-k} = q^k chi_bar_k.
IntegerSeries chi(int k, int order);

/// Degree of the singular vector; alpha weakly decreasing, of length n. Non-positive parts enter with a minus sign.
int p_alpha(const std::vector<int>& alpha);
/// q^{-p(alpha)} times the alternating S_n sum of products of chi.
IntegerSeries theorem_character(const std::vector<int>& alpha, int order);
/// Graded count of hook patterns of width n = alpha.size(), shifted so that c >= 0.
IntegerSeries hook_character(const std::vector<int>& alpha, int order);

IntegerSeries conjecture1(int m, int order);
IntegerSeries conjecture2(int n, int m, int order);

/// Graded basis count of M_{alpha,beta,gamma}, or of N^{m,n} when resonance is set.
IntegerSeries module_character(const BoundaryTriple& b, std::optional<std::pair<int, int>> resonance, int order);

/// n-tuples of partitions with lambda^(k)_i + a_k >= lambda^(k+1)_{i+b_k}, a_k = alpha_k - alpha_{k+1}.
IntegerSeries elevation_character(int n, const Partition& alpha, const Partition& beta, int order);

struct FactorizationReport {
  bool splits = false;
  int m = 0;
  int n = 0;
  IntegerSeries module;
  IntegerSeries product;
  std::vector<IntegerSeries> factors;
  std::optional<int> first_difference;
  bool agrees() const { return splits && !first_difference; }
};

/// Compares N^{c-b,a-b} with the product of the three elevation characters; splits = false when not split.
FactorizationReport tensor_factorization_check(const BoundaryTriple& boundary, int a, int b, int c, int order);

}  // namespace qtor
