#include "qtor/partitions.hpp"

#include "qtor/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qtor {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

void Partition::normalize() {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw PreconditionError("negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::add_box(int row) const {
  std::vector<int> p = parts_;
  if (row < 1 || row > length() + 1) throw PreconditionError("row out of range");
  if (row == length() + 1) p.push_back(0);
  ++p[static_cast<std::size_t>(row - 1)];
  return Partition(std::move(p));
}

Partition Partition::remove_box(int row) const {
  if (row < 1 || row > length()) throw PreconditionError("row out of range");
  std::vector<int> p = parts_;
  --p[static_cast<std::size_t>(row - 1)];
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '[' && c != ']') s += c;
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("bad partition entry '" + item + "'");
    }
    if (used != item.size()) throw PreconditionError("bad partition entry '" + item + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Corners2D corners2d(const Partition& lambda) {
  Corners2D c;
  for (int i = 1; i <= lambda.length() + 1; ++i) {
    bool above = i == 1 || lambda[i] < lambda[i - 1];
    if (above) c.concave.emplace_back(i, lambda[i] + 1);
    if (lambda[i] > 0 && lambda[i] > lambda[i + 1]) c.convex.emplace_back(i, lambda[i]);
  }
  return c;
}

Partition transpose(const Partition& lambda) {
  std::vector<int> t;
  for (int j = 1; j <= lambda[1]; ++j) {
    int count = 0;
    while (lambda[count + 1] >= j) ++count;
    t.push_back(count);
  }
  return Partition(std::move(t));
}

bool interlace_elevated(const Partition& lambda, const Partition& mu, int a, int b) {
  for (int i = 1; i + b <= mu.length(); ++i)
    if (lambda[i] + a < mu[i + b]) return false;
  return true;
}

bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 1; i <= inner.length(); ++i)
    if (outer[i] < inner[i]) return false;
  return true;
}

namespace {

void fill_partitions(int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, cap); p >= 1; --p) {
    cur.push_back(p);
    fill_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) fill_partitions(n, n, cur, out);
  return out;
}

}  // namespace qtor
