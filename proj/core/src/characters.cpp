#include "qtor/characters.hpp"

#include "qtor/gz.hpp"
#include "qtor/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qtor {

IntegerSeries::IntegerSeries(int order) {
  if (order < 0) throw PreconditionError("series order must be non-negative");
  c_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

IntegerSeries::IntegerSeries(int order, std::vector<Integer> coeffs) : IntegerSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

IntegerSeries IntegerSeries::one(int order) { return monomial(order, 0); }

IntegerSeries IntegerSeries::monomial(int order, int k, Integer c) {
  IntegerSeries s(order);
  if (k < 0) throw PreconditionError("negative power in a power series");
  if (k <= order) s.c_[static_cast<std::size_t>(k)] = c;
  return s;
}

void IntegerSeries::set(int i, Integer v) {
  if (i < 0 || i > order()) throw std::out_of_range("series index out of range");
  c_[static_cast<std::size_t>(i)] = std::move(v);
}

IntegerSeries IntegerSeries::operator+(const IntegerSeries& o) const {
  IntegerSeries r(std::min(order(), o.order()));
  for (int i = 0; i <= r.order(); ++i) r.c_[static_cast<std::size_t>(i)] = (*this)[i] + o[i];
  return r;
}

IntegerSeries IntegerSeries::operator-(const IntegerSeries& o) const {
  IntegerSeries r(std::min(order(), o.order()));
  for (int i = 0; i <= r.order(); ++i) r.c_[static_cast<std::size_t>(i)] = (*this)[i] - o[i];
  return r;
}

IntegerSeries IntegerSeries::operator*(const IntegerSeries& o) const {
  int N = std::min(order(), o.order());
  IntegerSeries r(N);
  for (int i = 0; i <= N; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= N; ++j) r.c_[static_cast<std::size_t>(i + j)] += (*this)[i] * o[j];
  }
  return r;
}

IntegerSeries IntegerSeries::operator*(const Integer& k) const {
  IntegerSeries r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

IntegerSeries IntegerSeries::inverse() const {
  const Integer& c0 = c_[0];
  if (c0 != 1 && c0 != -1) throw PreconditionError("series inverse needs constant term +-1");
  IntegerSeries r(order());
  r.c_[0] = c0;
  for (int i = 1; i <= order(); ++i) {
    Integer s = 0;
    for (int j = 1; j <= i; ++j) s += (*this)[j] * r[i - j];
    r.c_[static_cast<std::size_t>(i)] = -s * c0;
  }
  return r;
}

IntegerSeries IntegerSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  IntegerSeries r = one(order()), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

IntegerSeries IntegerSeries::shifted(int k) const {
  IntegerSeries r(order());
  for (int i = 0; i <= order(); ++i) {
    int t = i + k;
    if (t > order()) break;
    if (t < 0) {
      if ((*this)[i] != 0) throw std::domain_error("shift by q^" + std::to_string(k) + " leaves a negative power");
      continue;
    }
    r.c_[static_cast<std::size_t>(t)] = (*this)[i];
  }
  if (k < 0) r.c_.resize(static_cast<std::size_t>(order() + k + 1));
  return r;
}

IntegerSeries IntegerSeries::truncated(int order) const {
  IntegerSeries r(std::min(order, this->order()));
  for (int i = 0; i <= r.order(); ++i) r.c_[static_cast<std::size_t>(i)] = (*this)[i];
  return r;
}

bool IntegerSeries::non_negative() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c >= 0; });
}

std::optional<int> IntegerSeries::first_difference(const IntegerSeries& o) const {
  int N = std::min(order(), o.order());
  for (int i = 0; i <= N; ++i)
    if ((*this)[i] != o[i]) return i;
  return std::nullopt;
}

std::string IntegerSeries::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  return os.str();
}

// ---------------------------------------------------------------------------

IntegerSeries macmahon_series(int order) {
  IntegerSeries r = IntegerSeries::one(order);
  for (int i = 1; i <= order; ++i) {
    IntegerSeries f = IntegerSeries::one(order) - IntegerSeries::monomial(order, i);
    r *= f.pow(-i);
  }
  return r;
}

IntegerSeries euler_function(int order) {
  IntegerSeries r(order);
  for (int k = 0;; ++k) {
    bool any = false;
    for (int s : {1, -1}) {
      if (k == 0 && s == -1) continue;
      long e = static_cast<long>(k) * (3L * k - s) / 2;
      if (e > order) continue;
      any = true;
      r.set(static_cast<int>(e), r[static_cast<int>(e)] + (k % 2 ? -1 : 1));
    }
    if (!any && k > 0) break;
  }
  return r;
}

IntegerSeries chi_bar(int a, int order) {
  if (a < 0) throw PreconditionError("chi_bar needs a >= 0");
  IntegerSeries sum(order);
  for (long j = 0; j * (j + 1) / 2 + j * a <= order; ++j) {
    int e = static_cast<int>(j * (j + 1) / 2 + j * a);
    sum.set(e, sum[e] + (j % 2 ? -1 : 1));
  }
  return euler_function(order).pow(-2) * sum;
}

IntegerSeries chi(int k, int order) {
  if (k >= 0) return chi_bar(k, order);
  return chi_bar(-k, order).shifted(-k);
}

int p_alpha(const std::vector<int>& alpha) {
  int n = static_cast<int>(alpha.size());
  for (int i = 1; i < n; ++i)
    if (alpha[static_cast<std::size_t>(i - 1)] < alpha[static_cast<std::size_t>(i)])
      throw PreconditionError("alpha must be weakly decreasing");
  auto a = [&](int i) { return alpha[static_cast<std::size_t>(i - 1)]; };
  int k = static_cast<int>(std::count_if(alpha.begin(), alpha.end(), [](int x) { return x > 0; }));
  int p = 0;
  for (int i = 1; i <= k; ++i) p += (i - 1) * a(i);
  for (int i = 1; i <= n - k; ++i) p -= i * a(n - i + 1);
  return p;
}

IntegerSeries theorem_character(const std::vector<int>& alpha, int order) {
  int n = static_cast<int>(alpha.size());
  if (n < 1) throw PreconditionError("alpha must be non-empty");
  int p = p_alpha(alpha);
  int work = order + p;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  IntegerSeries sum(work);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)]) ++inversions;
    IntegerSeries term = IntegerSeries::one(work);
    for (int i = 1; i <= n; ++i) {
      int s = sigma[static_cast<std::size_t>(i - 1)];
      term *= chi(alpha[static_cast<std::size_t>(s - 1)] + i - s, work);
    }
    sum = inversions % 2 ? sum - term : sum + term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  IntegerSeries r = sum.shifted(-p).truncated(order);
  if (!r.non_negative()) throw std::logic_error("character theorem produced a negative coefficient");
  return r;
}

IntegerSeries hook_character(const std::vector<int>& alpha, int order) {
  int n = static_cast<int>(alpha.size());
  if (n < 1) throw PreconditionError("alpha must be non-empty");
  int s = std::max(0, -alpha.back());
  std::vector<int> shifted;
  for (int x : alpha) shifted.push_back(x + s);
  Partition a(shifted);
  Partition c(std::vector<int>(static_cast<std::size_t>(n), s));
  auto counts = count_gz(n, a, c, order);
  IntegerSeries r(order);
  for (int d = 0; d <= order; ++d) r.set(d, Integer(static_cast<unsigned long>(counts[static_cast<std::size_t>(d)])));
  return r;
}

IntegerSeries conjecture1(int m, int order) {
  if (m < 1) throw PreconditionError("conjecture 1 needs m >= 1");
  IntegerSeries one = IntegerSeries::one(order);
  IntegerSeries pre = one;
  for (int i = 1; i <= m - 2; ++i) pre *= (one - IntegerSeries::monomial(order, i)).pow(m - i - 1);
  IntegerSeries sum(order);
  for (long j = 0; j * (j + 1) / 2 <= order; ++j) {
    IntegerSeries t = IntegerSeries::monomial(order, static_cast<int>(j * (j + 1) / 2), j % 2 ? -1 : 1);
    for (int i = 1; i <= m - 1; ++i)
      if (i + j <= order) t *= one - IntegerSeries::monomial(order, static_cast<int>(i + j));
    sum += t;
  }
  return pre * euler_function(order).pow(-(m + 1)) * sum;
}

IntegerSeries conjecture2(int n, int m, int order) {
  if (m < 1 || n < m) throw PreconditionError("conjecture 2 needs n >= m >= 1");
  IntegerSeries one = IntegerSeries::one(order);
  IntegerSeries sum(order);
  std::vector<int> lam(static_cast<std::size_t>(n), 0);
  auto L = [&](int i) { return lam[static_cast<std::size_t>(i - 1)]; };
  std::function<void(int, int, int)> rec = [&](int i, int cap, int budget) {
    if (i > m) {
      long e2 = 0;
      int total = 0;
      for (int t = 1; t <= m; ++t) {
        e2 += static_cast<long>(L(t)) * L(t) + (2L * t - 1) * L(t);
        total += L(t);
      }
      long e = e2 / 2;
      if (e > order) return;
      IntegerSeries t = IntegerSeries::monomial(order, static_cast<int>(e), total % 2 ? -1 : 1);
      auto factor = [&](int top) {
        for (int a = 1; a <= top; ++a)
          for (int b = a + 1; b <= top; ++b) {
            int x = L(a) - L(b) + b - a;
            if (x <= order) t *= one - IntegerSeries::monomial(order, x);
          }
      };
      factor(m);
      factor(n);
      sum += t;
      return;
    }
    for (int v = 0; v <= std::min(cap, budget); ++v) {
      lam[static_cast<std::size_t>(i - 1)] = v;
      rec(i + 1, v, budget - v);
    }
    lam[static_cast<std::size_t>(i - 1)] = 0;
  };
  rec(1, order, order);
  return euler_function(order).pow(-(m + n)) * sum;
}

IntegerSeries module_character(const BoundaryTriple& b, std::optional<std::pair<int, int>> resonance, int order) {
  std::optional<Box> forbidden;
  if (resonance) forbidden = resonance_box(b, resonance->first, resonance->second);
  auto counts = count_pp(b, order, forbidden);
  IntegerSeries r(order);
  for (int d = 0; d <= order; ++d) r.set(d, Integer(static_cast<unsigned long>(counts[static_cast<std::size_t>(d)])));
  return r;
}

IntegerSeries elevation_character(int n, const Partition& alpha, const Partition& beta, int order) {
  if (n < 0) throw PreconditionError("number of factors must be non-negative");
  IntegerSeries r(order);
  if (n == 0) return IntegerSeries::one(order);
  std::vector<Partition> all;
  for (int s = 0; s <= order; ++s)
    for (auto& p : partitions_of(s)) all.push_back(std::move(p));
  std::function<void(int, const Partition*, int)> rec = [&](int k, const Partition* prev, int used) {
    if (k > n) {
      r.set(used, r[used] + 1);
      return;
    }
    for (const auto& lam : all) {
      if (used + lam.size() > order) continue;
      if (prev && !interlace_elevated(*prev, lam, alpha[k - 1] - alpha[k], beta[k - 1] - beta[k])) continue;
      rec(k + 1, &lam, used + lam.size());
    }
  };
  rec(1, nullptr, 0);
  return r;
}

FactorizationReport tensor_factorization_check(const BoundaryTriple& boundary, int a, int b, int c, int order) {
  FactorizationReport rep;
  rep.module = IntegerSeries(order);
  rep.product = IntegerSeries(order);
  auto parts = splits_decompose(boundary, a, b, c);
  if (!parts) return rep;
  rep.splits = true;
  rep.m = c - b;
  rep.n = a - b;
  rep.module = module_character(boundary, std::make_pair(rep.m, rep.n), order);
  rep.factors = {elevation_character(c - 1, parts->alpha_arms, parts->beta_arms, order),
                 elevation_character(a - 1, parts->beta_legs, parts->gamma_arms, order),
                 elevation_character(b - 1, parts->alpha_legs, parts->gamma_legs, order)};
  rep.product = rep.factors[0] * rep.factors[1] * rep.factors[2];
  rep.first_difference = rep.module.first_difference(rep.product);
  return rep;
}

}  // namespace qtor
