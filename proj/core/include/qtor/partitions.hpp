#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace qtor {

/// Weakly decreasing non-negative parts, trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// 1-based part; zero past the end.
  int operator[](int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  Partition add_box(int row) const;
  Partition remove_box(int row) const;

  std::string to_string() const;
  static Partition parse(const std::string& text);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  void normalize();
  std::vector<int> parts_;
};

using Cell = std::pair<int, int>;

struct Corners2D {
  std::vector<Cell> concave;
  std::vector<Cell> convex;
};

/// (i,j) concave iff lambda_i = j-1 < lambda_{i-1}; convex iff lambda_i = j > lambda_{i+1}.
Corners2D corners2d(const Partition& lambda);
Partition transpose(const Partition& lambda);
/// lambda_i + a >= mu_{i+b} for all i >= 1.
bool interlace_elevated(const Partition& lambda, const Partition& mu, int a, int b);
bool contains(const Partition& outer, const Partition& inner);
/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace qtor
