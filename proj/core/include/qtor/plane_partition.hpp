#pragma once

#include "qtor/partitions.hpp"
#include "qtor/scalars.hpp"

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qtor {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct BoundaryTriple {
  Partition alpha;
  Partition beta;
  Partition gamma;

  bool empty() const { return alpha.empty() && beta.empty() && gamma.empty(); }
  std::string to_string() const;
  /// "(3,1);(3,2,1,1);()" style text.
  static BoundaryTriple parse(const std::string& text);
  friend auto operator<=>(const BoundaryTriple&, const BoundaryTriple&) = default;
};

struct Box {
  int i = 0;
  int j = 0;
  int k = 0;
  MonomialTriple triple() const { return {i, j, k}; }
  std::string to_string() const;
  friend auto operator<=>(const Box&, const Box&) = default;
};

struct Corners3D {
  std::vector<Box> concave;
  std::vector<Box> convex;
};

struct Layer {
  Partition lambda;
  /// u_k / u = q1^alpha_k q2^(k-1) q3^beta_k as the triple (beta_k, alpha_k, k-1).
  MonomialTriple shift;
};

struct ShellPoint {
  Box position;
  int order = 0;
};

/// A plane partition with boundary (alpha, beta, gamma), stored as its finite deviation from omega.
class PlanePartition {
 public:
  /// The minimal configuration omega.
  explicit PlanePartition(BoundaryTriple boundary = {});

  const BoundaryTriple& boundary() const { return boundary_; }
  /// omega^(k)_i.
  int omega(int k, int i) const;
  /// mu^(k)_i, kInfinity on the beta legs.
  int height(int k, int i) const;
  /// (i,j,k) in Y.
  bool contains(int i, int j, int k) const;
  /// (i,j,k) in Y or some coordinate <= 0.
  bool contains_closure(int i, int j, int k) const;
  bool contains(const Box& b) const { return contains(b.i, b.j, b.k); }

  int degree() const;
  bool is_minimal() const { return extra_.empty(); }
  /// Beyond this index every layer and every row is constant.
  int extent() const;

  Corners3D corners() const;
  PlanePartition add_box(const Box& b) const;
  PlanePartition remove_box(const Box& b) const;

  /// Y_mu \ Y_omega in lexicographic order.
  std::vector<Box> deviation_boxes() const;
  const std::map<std::pair<int, int>, int>& deviations() const { return extra_; }
  /// Rebuilds from a set of boxes lying outside Y_omega; throws if not a plane partition.
  static PlanePartition from_deviation_boxes(const BoundaryTriple& b, const std::vector<Box>& boxes);
  bool valid() const;

  std::string to_string() const;

  friend bool operator==(const PlanePartition& a, const PlanePartition& b) {
    return a.boundary_ == b.boundary_ && a.extra_ == b.extra_;
  }
  friend bool operator<(const PlanePartition& a, const PlanePartition& b);

 private:
  BoundaryTriple boundary_;
  std::map<std::pair<int, int>, int> extra_;  // (k,i) -> mu - omega > 0
};

PlanePartition minimal_pp(const BoundaryTriple& b);

/// Layers lambda^(k)_i = mu^(k)_{i+beta_k} - alpha_k for k = 1..count (count defaults to extent()+1).
std::vector<Layer> to_layers(const PlanePartition& mu, int count = 0);
PlanePartition from_layers(const BoundaryTriple& b, const std::vector<Partition>& layers);

Corners3D corners3d(const PlanePartition& mu);

/// Degree-d configurations, optionally avoiding a box, in canonical order.
std::vector<PlanePartition> enumerate_pp(const BoundaryTriple& b, int d, std::optional<Box> forbidden = {});
/// Graded dimensions for degrees 0..max_degree.
std::vector<std::size_t> count_pp(const BoundaryTriple& b, int max_degree, std::optional<Box> forbidden = {});

/// Signed count of zeros at the free-q point (i,j,k) contributed by the eight cube corners.
int corner_order(const PlanePartition& mu, int i, int j, int k);
/// Orders of zeros of psi/(1-Kx), one entry per diagonal class with nonzero order.
std::map<MonomialTriple, int> diagonal_orders(const PlanePartition& mu);
/// Points of the shell carrying a zero or pole, with their orders.
std::vector<ShellPoint> shell(const PlanePartition& mu);
/// Membership in S_mu, independent of the order.
bool in_shell(const PlanePartition& mu, int i, int j, int k);

/// Relabels coordinates: result coordinate perm[a] carries the old coordinate a (0=i,1=j,2=k).
PlanePartition s3_transform(const PlanePartition& mu, const std::array<int, 3>& perm);
BoundaryTriple s3_boundary(const BoundaryTriple& b, const std::array<int, 3>& perm);
MonomialTriple s3_triple(const MonomialTriple& t, const std::array<int, 3>& perm);

/// The box (a,b,c) forced out of the quotient when K = q2^m q3^n.
Box resonance_box(const BoundaryTriple& b, int m, int n);
PlanePartition omega_t(const BoundaryTriple& b, int m, int n, int t);

struct ArmsLegs {
  Partition alpha_arms, alpha_legs;
  Partition beta_arms, beta_legs;
  Partition gamma_arms, gamma_legs;
};

/// Arms and legs when the splitting condition holds at (a,b,c), empty otherwise.
std::optional<ArmsLegs> splits_decompose(const BoundaryTriple& boundary, int a, int b, int c);

}  // namespace qtor
