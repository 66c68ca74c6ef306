#pragma once

#include "qtor/partitions.hpp"
#include "qtor/plane_partition.hpp"
#include "qtor/scalars.hpp"
#include "qtor/verify.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtor {

// ---------------------------------------------------------------------------
// gl_N patterns: rows i = 1..N with entries mu^(i)_j, j <= i, and mu^(i)_i = eta_i.

class GZFinitePattern {
 public:
  GZFinitePattern() = default;
  /// Rows given top to bottom; row i must have i entries.
  explicit GZFinitePattern(std::vector<std::vector<int>> rows);

  int size() const { return static_cast<int>(rows_.size()); }
  int entry(int i, int j) const { return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  int ell(int i, int j) const { return entry(i, j) - j + 1; }
  bool valid() const;
  std::optional<GZFinitePattern> shifted(int i, int j, int delta) const;
  std::string to_string() const;

  friend auto operator<=>(const GZFinitePattern&, const GZFinitePattern&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

using GZFiniteVector = std::map<GZFinitePattern, Rational>;

/// Every pattern of L_eta.
std::vector<GZFinitePattern> gz_finite_basis(const std::vector<int>& eta);
/// E_{-i,-i+1} (raise), E_{-i+1,-i} (lower), 1 <= i <= N-1.
GZFiniteVector gz_finite_raise(const GZFinitePattern& mu, int i);
GZFiniteVector gz_finite_lower(const GZFinitePattern& mu, int i);
/// E_{-i,-i}, 0 <= i <= N-1.
Integer gz_finite_diag(const GZFinitePattern& mu, int i);
/// [E_a, F_b] = delta_ab H_a and the Serre relations of gl_N on every pattern of L_eta.
RelationReport check_gz_finite(const std::vector<int>& eta);
/// Weyl dimension of L_eta.
Integer weyl_dimension(const std::vector<int>& eta);

// ---------------------------------------------------------------------------
// Hook patterns of width n: mu^(i)_j = 0 for i, j > n, rows tend to alpha_i and columns to gamma_j.

class GZPattern {
 public:
  /// The minimal pattern mu^(i)_j = max(alpha_i, gamma_j).
  GZPattern(int n, Partition alpha, Partition gamma);
  /// Throws PreconditionError unless the result is a valid hook pattern.
  static GZPattern from_deviations(int n, Partition alpha, Partition gamma, std::map<std::pair<int, int>, int> extra);

  int width() const { return n_; }
  const Partition& alpha() const { return alpha_; }
  const Partition& gamma() const { return gamma_; }

  int minimal_entry(int i, int j) const;
  int entry(int i, int j) const;
  /// mu^(i)_j - min(i,j) + 1.
  int ell(int i, int j) const;
  int degree() const;
  int extent() const;
  const std::map<std::pair<int, int>, int>& deviations() const { return extra_; }

  std::optional<GZPattern> shifted(int i, int j, int delta) const;
  bool valid() const;
  std::string to_string() const;

  friend bool operator==(const GZPattern& a, const GZPattern& b) {
    return a.n_ == b.n_ && a.alpha_ == b.alpha_ && a.gamma_ == b.gamma_ && a.extra_ == b.extra_;
  }
  friend bool operator<(const GZPattern& a, const GZPattern& b);

 private:
  int n_ = 1;
  Partition alpha_;
  Partition gamma_;
  std::map<std::pair<int, int>, int> extra_;
};

using GZVector = std::map<GZPattern, Rational>;

enum class GZRegion { Full, Lower, Upper };

/// Patterns of total deviation d reachable inside the region (Lower: i > j, Upper: i < j).
std::vector<GZPattern> enumerate_gz(int n, const Partition& alpha, const Partition& gamma, int d,
                                    GZRegion region = GZRegion::Full);
std::vector<std::size_t> count_gz(int n, const Partition& alpha, const Partition& gamma, int max_degree,
                                  GZRegion region = GZRegion::Full);

/// E_{a,a+1}, E_{a+1,a} and E_{a,a} for any integer a.
GZVector gz_raise(const GZPattern& mu, int a);
GZVector gz_lower(const GZPattern& mu, int a);
Integer gz_diag(const GZPattern& mu, int a);

/// gl^-: a <= -1 (diagonal a <= 0); gl^+: a >= 1. sign is -1 or +1.
GZVector gz_action_half(int sign, const GZPattern& mu, int a, bool raise);
/// E_{0,1} (raise) or E_{1,0}.
GZVector gz_action_zero(const GZPattern& mu, bool raise);

/// Y^-_{eta,gamma} as the lower part of a hook pattern whose upper part is frozen at eta.
GZPattern half_minus_minimal(int n, const Partition& eta, const Partition& gamma);
/// Y^+_{eta,alpha} with the lower part frozen at eta.
GZPattern half_plus_minimal(int n, const Partition& eta, const Partition& alpha);

/// Lowest weight theta^(n)(alpha, c)_i for i in [-window, window].
std::map<int, Integer> lowest_weight_theta(int n, const Partition& alpha, int c, int window);
/// theta_i from d_{ij} = max(gamma_i, alpha_j) and kappa_minus, for i in [-window, window].
std::map<int, Integer> theta_from_boundary(const Partition& alpha, const Partition& gamma, int kappa_minus,
                                           int window);

struct GZCheckOptions {
  int window = 2;
  int max_deviation = 4;
};

/// [E_a,F_b] = delta_ab H_a, [E_aa, E_b] weight shifts and the Serre relations touching index 0.
RelationReport check_glinf_relations(int n, const Partition& alpha, const Partition& gamma,
                                     const GZCheckOptions& opt = {});

/// Requires beta = empty, gamma of length <= n and mu^(n+1)_{n+1} = 0.
GZPattern pp_to_gz(const PlanePartition& mu, int n);
PlanePartition gz_to_pp(const GZPattern& g);

}  // namespace qtor
