#include "qtor/plane_partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qtor {

std::string BoundaryTriple::to_string() const {
  return alpha.to_string() + ";" + beta.to_string() + ";" + gamma.to_string();
}

BoundaryTriple BoundaryTriple::parse(const std::string& text) {
  std::vector<std::string> pieces;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  pieces.push_back(cur);
  if (pieces.size() != 3) throw PreconditionError("boundary needs three ';'-separated partitions: " + text);
  return {Partition::parse(pieces[0]), Partition::parse(pieces[1]), Partition::parse(pieces[2])};
}

std::string Box::to_string() const {
  std::ostringstream os;
  os << '(' << i << ',' << j << ',' << k << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

PlanePartition::PlanePartition(BoundaryTriple boundary) : boundary_(std::move(boundary)) {}

PlanePartition minimal_pp(const BoundaryTriple& b) { return PlanePartition(b); }

int PlanePartition::omega(int k, int i) const {
  if (i <= boundary_.beta[k]) return kInfinity;
  return std::max(boundary_.gamma[i], boundary_.alpha[k]);
}

int PlanePartition::height(int k, int i) const {
  int w = omega(k, i);
  if (w == kInfinity) return w;
  auto it = extra_.find({k, i});
  return it == extra_.end() ? w : w + it->second;
}

bool PlanePartition::contains(int i, int j, int k) const {
  if (i < 1 || j < 1 || k < 1) return false;
  return j <= height(k, i);
}

bool PlanePartition::contains_closure(int i, int j, int k) const {
  if (i < 1 || j < 1 || k < 1) return true;
  return j <= height(k, i);
}

int PlanePartition::degree() const {
  int d = 0;
  for (const auto& [key, e] : extra_) d += e;
  return d;
}

int PlanePartition::extent() const {
  const auto& b = boundary_;
  int e = std::max({b.alpha.length(), b.beta.length(), b.gamma.length(), b.alpha[1], b.beta[1], b.gamma[1]});
  for (const auto& [key, x] : extra_) e = std::max({e, key.first, key.second, omega(key.first, key.second) + x});
  return e + 1;
}

Corners3D PlanePartition::corners() const {
  Corners3D c;
  int e = extent();
  for (int i = 1; i <= e + 1; ++i) {
    for (int k = 1; k <= e + 1; ++k) {
      int h = height(k, i);
      if (h == kInfinity) continue;
      int j = h + 1;
      if ((i == 1 || height(k, i - 1) >= j) && (k == 1 || height(k - 1, i) >= j)) c.concave.push_back({i, j, k});
      if (h >= 1 && height(k, i + 1) < h && height(k + 1, i) < h) c.convex.push_back({i, h, k});
    }
  }
  std::sort(c.concave.begin(), c.concave.end());
  std::sort(c.convex.begin(), c.convex.end());
  return c;
}

Corners3D corners3d(const PlanePartition& mu) { return mu.corners(); }

PlanePartition PlanePartition::add_box(const Box& b) const {
  int h = b.i >= 1 && b.k >= 1 ? height(b.k, b.i) : kInfinity;
  bool ok = h != kInfinity && b.j == h + 1 && (b.i == 1 || height(b.k, b.i - 1) >= b.j) &&
            (b.k == 1 || height(b.k - 1, b.i) >= b.j);
  if (!ok) throw PreconditionError("box " + b.to_string() + " is not a concave corner");
  PlanePartition r = *this;
  ++r.extra_[{b.k, b.i}];
  return r;
}

PlanePartition PlanePartition::remove_box(const Box& b) const {
  auto it = b.i >= 1 && b.k >= 1 ? extra_.find({b.k, b.i}) : extra_.end();
  bool ok = it != extra_.end() && b.j == height(b.k, b.i) && height(b.k, b.i + 1) < b.j &&
            height(b.k + 1, b.i) < b.j;
  if (!ok) throw PreconditionError("box " + b.to_string() + " is not a removable convex corner");
  PlanePartition r = *this;
  if (--r.extra_[{b.k, b.i}] == 0) r.extra_.erase({b.k, b.i});
  return r;
}

std::vector<Box> PlanePartition::deviation_boxes() const {
  std::vector<Box> boxes;
  for (const auto& [key, e] : extra_) {
    int w = omega(key.first, key.second);
    for (int j = w + 1; j <= w + e; ++j) boxes.push_back({key.second, j, key.first});
  }
  std::sort(boxes.begin(), boxes.end());
  return boxes;
}

PlanePartition PlanePartition::from_deviation_boxes(const BoundaryTriple& b, const std::vector<Box>& boxes) {
  PlanePartition mu(b);
  std::map<std::pair<int, int>, std::vector<int>> columns;
  for (const auto& box : boxes) {
    if (mu.contains(box)) throw PreconditionError("box " + box.to_string() + " already lies in Y_omega");
    if (box.i < 1 || box.j < 1 || box.k < 1) throw PreconditionError("box coordinates must be positive");
    columns[{box.k, box.i}].push_back(box.j);
  }
  for (auto& [key, js] : columns) {
    std::sort(js.begin(), js.end());
    int w = mu.omega(key.first, key.second);
    for (std::size_t t = 0; t < js.size(); ++t)
      if (js[t] != w + 1 + static_cast<int>(t)) throw PreconditionError("deviation boxes do not form columns");
    mu.extra_[key] = static_cast<int>(js.size());
  }
  if (!mu.valid()) throw PreconditionError("deviation boxes do not form a plane partition");
  return mu;
}

bool PlanePartition::valid() const {
  for (const auto& [key, e] : extra_)
    if (e <= 0 || omega(key.first, key.second) == kInfinity) return false;
  int e = extent();
  for (int k = 1; k <= e + 1; ++k) {
    for (int i = 1; i <= e + 1; ++i) {
      int h = height(k, i);
      if (h < height(k, i + 1) || h < height(k + 1, i)) return false;
    }
  }
  return true;
}

std::string PlanePartition::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& b : deviation_boxes()) {
    os << (first ? "" : ",") << b.to_string();
    first = false;
  }
  os << ']';
  return os.str();
}

bool operator<(const PlanePartition& a, const PlanePartition& b) {
  if (a.boundary_ != b.boundary_) return a.boundary_ < b.boundary_;
  return a.deviation_boxes() < b.deviation_boxes();
}

// ---------------------------------------------------------------------------

std::vector<Layer> to_layers(const PlanePartition& mu, int count) {
  const auto& b = mu.boundary();
  if (count <= 0) count = mu.extent() + 1;
  int e = mu.extent();
  std::vector<Layer> layers;
  for (int k = 1; k <= count; ++k) {
    std::vector<int> parts;
    for (int i = 1; i <= e + 1; ++i) parts.push_back(mu.height(k, i + b.beta[k]) - b.alpha[k]);
    layers.push_back({Partition(std::move(parts)), MonomialTriple{b.beta[k], b.alpha[k], k - 1}});
  }
  return layers;
}

PlanePartition from_layers(const BoundaryTriple& b, const std::vector<Partition>& layers) {
  PlanePartition omega(b);
  std::vector<Box> boxes;
  for (int k = 1; k <= static_cast<int>(layers.size()); ++k) {
    const Partition& lambda = layers[static_cast<std::size_t>(k - 1)];
    int last = b.beta[k] + std::max(lambda.length(), b.gamma.length()) + 1;
    for (int i = b.beta[k] + 1; i <= last; ++i) {
      int target = b.alpha[k] + lambda[i - b.beta[k]];
      int w = omega.omega(k, i);
      if (target < w) throw PreconditionError("layers fall below the minimal configuration");
      for (int j = w + 1; j <= target; ++j) boxes.push_back({i, j, k});
    }
  }
  return PlanePartition::from_deviation_boxes(b, boxes);
}

// ---------------------------------------------------------------------------

namespace {

struct LevelSetKey {
  bool operator()(const PlanePartition& a, const PlanePartition& b) const { return a.deviations() < b.deviations(); }
};

std::vector<std::vector<PlanePartition>> level_sets(const BoundaryTriple& b, int d, std::optional<Box> forbidden) {
  std::vector<std::vector<PlanePartition>> levels;
  PlanePartition omega(b);
  if (forbidden && omega.contains(*forbidden)) throw PreconditionError("forbidden box lies in Y_omega");
  levels.push_back({omega});
  for (int deg = 1; deg <= d; ++deg) {
    std::set<PlanePartition, LevelSetKey> next;
    for (const auto& mu : levels.back()) {
      for (const auto& c : mu.corners().concave) {
        if (forbidden && c == *forbidden) continue;
        next.insert(mu.add_box(c));
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

}  // namespace

std::vector<PlanePartition> enumerate_pp(const BoundaryTriple& b, int d, std::optional<Box> forbidden) {
  if (d < 0) throw PreconditionError("degree must be non-negative");
  auto levels = level_sets(b, d, forbidden);
  auto out = std::move(levels.back());
  std::vector<std::pair<std::vector<Box>, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t t = 0; t < out.size(); ++t) keyed.emplace_back(out[t].deviation_boxes(), t);
  std::sort(keyed.begin(), keyed.end());
  std::vector<PlanePartition> sorted;
  sorted.reserve(out.size());
  for (const auto& kv : keyed) sorted.push_back(out[kv.second]);
  return sorted;
}

std::vector<std::size_t> count_pp(const BoundaryTriple& b, int max_degree, std::optional<Box> forbidden) {
  auto levels = level_sets(b, max_degree, forbidden);
  std::vector<std::size_t> counts;
  for (const auto& l : levels) counts.push_back(l.size());
  return counts;
}

// ---------------------------------------------------------------------------

int corner_order(const PlanePartition& mu, int i, int j, int k) {
  int order = 0;
  for (int e1 = 0; e1 <= 1; ++e1)
    for (int e2 = 0; e2 <= 1; ++e2)
      for (int e3 = 0; e3 <= 1; ++e3)
        if (mu.contains(i + e1, j + e2, k + e3)) order += (e1 + e2 + e3) % 2 ? 1 : -1;
  return order;
}

bool in_shell(const PlanePartition& mu, int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0) return false;
  if (mu.contains(i + 1, j + 1, k + 1)) return false;
  static constexpr int kOffsets[7][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  for (const auto& o : kOffsets)
    if (mu.contains(i + o[0], j + o[1], k + o[2])) return true;
  return false;
}

std::map<MonomialTriple, int> diagonal_orders(const PlanePartition& mu) {
  std::map<MonomialTriple, int> orders;
  int e = mu.extent() + 1;
  for (int i = 0; i <= e; ++i)
    for (int j = 0; j <= e; ++j)
      for (int k = 0; k <= e; ++k) {
        int o = corner_order(mu, i, j, k);
        if (o) orders[MonomialTriple{i, j, k}.canonical()] += o;
      }
  orders[MonomialTriple{}] -= 1;  // vacuum pole 1/(1-x)
  for (auto it = orders.begin(); it != orders.end();) it = it->second == 0 ? orders.erase(it) : std::next(it);
  return orders;
}

std::vector<ShellPoint> shell(const PlanePartition& mu) {
  std::vector<ShellPoint> points;
  int e = mu.extent() + 2;
  for (const auto& [diag, order] : diagonal_orders(mu)) {
    std::optional<Box> found;
    for (int t = 0; t <= e; ++t) {
      if (in_shell(mu, diag.i + t, diag.j + t, diag.k + t)) {
        if (found) throw std::logic_error("diagonal meets the shell twice");
        found = Box{diag.i + t, diag.j + t, diag.k + t};
      }
    }
    if (!found) {
      if (diag == MonomialTriple{} && !mu.contains(1, 1, 1)) continue;  // empty Y: no shell point
      throw std::logic_error("nonzero order off the shell at " + to_string(diag));
    }
    points.push_back({*found, order});
  }
  std::sort(points.begin(), points.end(), [](const ShellPoint& a, const ShellPoint& b) { return a.position < b.position; });
  return points;
}

// ---------------------------------------------------------------------------

MonomialTriple s3_triple(const MonomialTriple& t, const std::array<int, 3>& perm) {
  std::array<int, 3> old{t.i, t.j, t.k}, out{};
  for (int a = 0; a < 3; ++a) out[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] = old[static_cast<std::size_t>(a)];
  return {out[0], out[1], out[2]};
}

namespace {

void check_perm(const std::array<int, 3>& perm) {
  auto s = perm;
  std::sort(s.begin(), s.end());
  if (s != std::array<int, 3>{0, 1, 2}) throw PreconditionError("not a permutation of {0,1,2}");
}

// Leg along `axis`: the cross-section as cells (x, y) in the two remaining axes, in increasing axis order.
std::vector<std::array<int, 3>> leg_cells(const BoundaryTriple& b, int axis) {
  std::vector<std::array<int, 3>> cells;
  if (axis == 0)
    for (int k = 1; k <= b.alpha.length(); ++k)
      for (int j = 1; j <= b.alpha[k]; ++j) cells.push_back({0, j, k});
  if (axis == 1)
    for (int k = 1; k <= b.beta.length(); ++k)
      for (int i = 1; i <= b.beta[k]; ++i) cells.push_back({i, 0, k});
  if (axis == 2)
    for (int i = 1; i <= b.gamma.length(); ++i)
      for (int j = 1; j <= b.gamma[i]; ++j) cells.push_back({i, j, 0});
  return cells;
}

Partition leg_partition(const std::vector<std::array<int, 3>>& cells, int index_axis) {
  std::map<int, int> counts;
  for (const auto& c : cells) ++counts[c[static_cast<std::size_t>(index_axis)]];
  std::vector<int> parts;
  for (const auto& [idx, n] : counts) {
    if (idx != static_cast<int>(parts.size()) + 1) throw std::logic_error("leg cross-section is not a diagram");
    parts.push_back(n);
  }
  return Partition(std::move(parts));
}

}  // namespace

BoundaryTriple s3_boundary(const BoundaryTriple& b, const std::array<int, 3>& perm) {
  check_perm(perm);
  std::array<std::vector<std::array<int, 3>>, 3> moved;
  for (int axis = 0; axis < 3; ++axis) {
    for (const auto& c : leg_cells(b, axis)) {
      std::array<int, 3> out{};
      for (int a = 0; a < 3; ++a) out[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] = c[static_cast<std::size_t>(a)];
      moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(axis)])].push_back(out);
    }
  }
  // alpha: leg along i indexed by k; beta: leg along j indexed by k; gamma: leg along k indexed by i.
  return {leg_partition(moved[0], 2), leg_partition(moved[1], 2), leg_partition(moved[2], 0)};
}

PlanePartition s3_transform(const PlanePartition& mu, const std::array<int, 3>& perm) {
  BoundaryTriple nb = s3_boundary(mu.boundary(), perm);
  std::vector<Box> boxes;
  for (const auto& b : mu.deviation_boxes()) {
    auto t = s3_triple(b.triple(), perm);
    boxes.push_back({t.i, t.j, t.k});
  }
  return PlanePartition::from_deviation_boxes(nb, boxes);
}

// ---------------------------------------------------------------------------

Box resonance_box(const BoundaryTriple& boundary, int m, int n) {
  PlanePartition omega(boundary);
  int b = std::max({1, 1 - n, 1 - m});
  int limit = b + omega.extent() + 2;
  for (; b <= limit; ++b) {
    Box box{n + b, b, m + b};
    if (!omega.contains(box)) {
      if (!omega.contains_closure(box.i - 1, box.j - 1, box.k - 1)) break;
      return box;
    }
  }
  throw PreconditionError("no resonance box for (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");
}

PlanePartition omega_t(const BoundaryTriple& boundary, int m, int n, int t) {
  if (t < 0) throw PreconditionError("t must be non-negative");
  Box abc = resonance_box(boundary, m, n);
  PlanePartition omega(boundary);
  std::vector<Box> boxes;
  for (int k = 1; k <= abc.k + t - 1; ++k)
    for (int i = 1; i <= abc.i + t - 1; ++i) {
      int w = omega.omega(k, i);
      if (w == kInfinity) continue;
      for (int j = w + 1; j <= abc.j + t - 1; ++j) boxes.push_back({i, j, k});
    }
  return PlanePartition::from_deviation_boxes(boundary, boxes);
}

std::optional<ArmsLegs> splits_decompose(const BoundaryTriple& boundary, int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw PreconditionError("a, b, c must be positive");
  PlanePartition omega(boundary);
  int limit = omega.extent() + std::max({a, b, c}) + 2;
  for (int s = 1; s <= limit; ++s) {
    if (!omega.contains_closure(a - 1, b - 1, s)) return std::nullopt;
    if (!omega.contains_closure(a - 1, s, c - 1)) return std::nullopt;
    if (!omega.contains_closure(s, b - 1, c - 1)) return std::nullopt;
  }
  auto shifted = [](const Partition& p, int count, int shift) {
    std::vector<int> parts;
    for (int t = 1; t <= count; ++t) parts.push_back(p[t] - shift);
    return Partition(std::move(parts));
  };
  const auto& [alpha, beta, gamma] = boundary;
  Partition at = transpose(alpha), bt = transpose(beta), gt = transpose(gamma);
  return ArmsLegs{shifted(alpha, c - 1, b - 1), shifted(at, b - 1, c - 1), shifted(beta, c - 1, a - 1),
                  shifted(bt, a - 1, c - 1),    shifted(gamma, a - 1, b - 1), shifted(gt, b - 1, a - 1)};
}

}  // namespace qtor
