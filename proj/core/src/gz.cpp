#include "qtor/gz.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qtor {

namespace {

template <class P>
using Vec = std::map<P, Rational>;

template <class P>
using Op = std::function<Vec<P>(const P&)>;

template <class P>
void add_to(Vec<P>& v, const P& p, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = v.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

template <class P>
Vec<P> act(const Op<P>& op, const Vec<P>& v) {
  Vec<P> out;
  for (const auto& [p, c] : v)
    for (const auto& [q, d] : op(p)) add_to(out, q, Rational(c * d));
  return out;
}

template <class P>
Vec<P> combine(const Vec<P>& a, const Vec<P>& b, const Rational& cb) {
  Vec<P> out = a;
  for (const auto& [p, c] : b) add_to(out, p, Rational(c * cb));
  return out;
}

// [x, y] v
template <class P>
Vec<P> bracket(const Op<P>& x, const Op<P>& y, const Vec<P>& v) {
  return combine(act(x, act(y, v)), act(y, act(x, v)), Rational(-1));
}

template <class P>
Op<P> bracket_op(Op<P> x, Op<P> y) {
  return [x, y](const P& p) { return bracket<P>(x, y, Vec<P>{{p, Rational(1)}}); };
}

// Generators E_a, F_a and diagonal D_a over an index set.
template <class P>
struct GlFamily {
  std::function<Vec<P>(const P&, int)> raise;
  std::function<Vec<P>(const P&, int)> lower;
  std::function<Integer(const P&, int)> diag;
  std::vector<int> indices;  // a with E_{a,a+1} in the family
  std::function<std::string(const P&)> label;
};

template <class P>
RelationReport check_family(const GlFamily<P>& fam, const std::vector<P>& states, const std::string& module) {
  RelationReport rep{"gl relations", module, 0, {}, true, {}};
  auto E = [&](int a) -> Op<P> { return [&fam, a](const P& p) { return fam.raise(p, a); }; };
  auto F = [&](int a) -> Op<P> { return [&fam, a](const P& p) { return fam.lower(p, a); }; };
  auto D = [&](int a) -> Op<P> {
    return [&fam, a](const P& p) { return Vec<P>{{p, Rational(fam.diag(p, a))}}; };
  };
  auto fail = [&](const std::string& what, const P& p, const Vec<P>& res) {
    rep.passed = false;
    rep.modes = what;
    std::ostringstream os;
    os << "on " << fam.label(p) << ": " << fam.label(res.begin()->first) << " residual " << res.begin()->second;
    rep.counterexample = os.str();
  };
  auto name = [](const char* r, int a, int b) {
    std::ostringstream os;
    os << r << "(" << a << "," << b << ")";
    return os.str();
  };

  for (const auto& p : states) {
    Vec<P> v{{p, Rational(1)}};
    for (int a : fam.indices) {
      for (int b : fam.indices) {
        Vec<P> res = bracket<P>(E(a), F(b), v);
        if (a == b) {
          res = combine(res, act(D(a), v), Rational(-1));
          res = combine(res, act(D(a + 1), v), Rational(1));
        }
        if (!res.empty()) return fail(name("[E,F]", a, b), p, res), rep;
      }
      for (int c = fam.indices.front(); c <= fam.indices.back() + 1; ++c) {
        int w = (c == a ? 1 : 0) - (c == a + 1 ? 1 : 0);
        Vec<P> res = combine(bracket<P>(D(c), E(a), v), act(E(a), v), Rational(-w));
        if (!res.empty()) return fail(name("[D,E]", c, a), p, res), rep;
        res = combine(bracket<P>(D(c), F(a), v), act(F(a), v), Rational(w));
        if (!res.empty()) return fail(name("[D,F]", c, a), p, res), rep;
      }
      for (int b : fam.indices) {
        if (b == a) continue;
        bool adjacent = std::abs(a - b) == 1;
        for (bool up : {true, false}) {
          Op<P> x = up ? E(a) : F(a);
          Op<P> y = up ? E(b) : F(b);
          Vec<P> res = adjacent ? bracket<P>(x, bracket_op<P>(x, y), v) : bracket<P>(x, y, v);
          if (!res.empty()) return fail(name(up ? "serre E" : "serre F", a, b), p, res), rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace

// ---------------------------------------------------------------------------

GZFinitePattern::GZFinitePattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != i + 1) throw PreconditionError("row i of a gl_N pattern needs i entries");
}

bool GZFinitePattern::valid() const {
  int N = size();
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= i; ++j) {
      if (j < i && entry(i, j) < entry(i, j + 1)) return false;
      if (i < N && entry(i, j) < entry(i + 1, j)) return false;
    }
  return true;
}

std::optional<GZFinitePattern> GZFinitePattern::shifted(int i, int j, int delta) const {
  if (i < 1 || i > size() || j < 1 || j >= i) return std::nullopt;
  GZFinitePattern r = *this;
  r.rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] += delta;
  if (!r.valid()) return std::nullopt;
  return r;
}

std::string GZFinitePattern::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) os << (j ? "," : "") << rows_[i][j];
  }
  os << ']';
  return os.str();
}

std::vector<GZFinitePattern> gz_finite_basis(const std::vector<int>& eta) {
  int N = static_cast<int>(eta.size());
  for (int i = 1; i < N; ++i)
    if (eta[static_cast<std::size_t>(i - 1)] < eta[static_cast<std::size_t>(i)])
      throw PreconditionError("eta must be weakly decreasing");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i) rows[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(i), 0);
  for (int i = 1; i <= N; ++i) rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = eta[static_cast<std::size_t>(i - 1)];

  // Fill the free entries row by row, left to right; mu^(i)_j <= mu^(i-1)_j, mu^(i)_j <= mu^(i)_{j-1}.
  std::vector<std::pair<int, int>> free;
  for (int i = 2; i <= N; ++i)
    for (int j = 1; j < i; ++j) free.emplace_back(i, j);
  std::vector<GZFinitePattern> out;
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == free.size()) {
      GZFinitePattern p(rows);
      if (p.valid()) out.push_back(std::move(p));
      return;
    }
    auto [i, j] = free[t];
    auto at = [&](int a, int b) { return rows[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]; };
    int hi = at(i - 1, j);
    if (j > 1) hi = std::min(hi, at(i, j - 1));
    int lo = at(i, i);
    for (int v = lo; v <= hi; ++v) {
      rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
      rec(t + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

GZFiniteVector gz_finite_raise(const GZFinitePattern& mu, int i) {
  int N = mu.size();
  if (i < 1 || i > N - 1) throw PreconditionError("E_{-i,-i+1} needs 1 <= i <= N-1");
  GZFiniteVector out;
  for (int j = 1; j <= N - i; ++j) {
    auto target = mu.shifted(i + j, j, 1);
    if (!target) continue;
    int l = mu.ell(i + j, j);
    Rational num(1), den(1);
    for (int k = 1; k <= N - i + 1; ++k) num *= l - mu.ell(i - 1 + k, k);
    for (int k = 1; k <= N - i; ++k)
      if (k != j) den *= l - mu.ell(i + k, k);
    add_to(out, *target, Rational(num / den));
  }
  return out;
}

GZFiniteVector gz_finite_lower(const GZFinitePattern& mu, int i) {
  int N = mu.size();
  if (i < 1 || i > N - 1) throw PreconditionError("E_{-i+1,-i} needs 1 <= i <= N-1");
  GZFiniteVector out;
  for (int j = 1; j <= N - i; ++j) {
    auto target = mu.shifted(i + j, j, -1);
    if (!target) continue;
    int l = mu.ell(i + j, j);
    Rational num(-1), den(1);
    for (int k = 1; k <= N - i - 1; ++k) num *= l - mu.ell(i + 1 + k, k);
    for (int k = 1; k <= N - i; ++k)
      if (k != j) den *= l - mu.ell(i + k, k);
    add_to(out, *target, Rational(num / den));
  }
  return out;
}

Integer gz_finite_diag(const GZFinitePattern& mu, int i) {
  int N = mu.size();
  if (i < 0 || i > N - 1) throw PreconditionError("E_{-i,-i} needs 0 <= i <= N-1");
  Integer s = 0;
  for (int j = 1; j <= N - i; ++j) s += mu.entry(i + j, j);
  for (int j = 1; j <= N - i - 1; ++j) s -= mu.entry(i + 1 + j, j);
  return s;
}

RelationReport check_gz_finite(const std::vector<int>& eta) {
  int N = static_cast<int>(eta.size());
  std::ostringstream name;
  name << "L_(";
  for (int i = 0; i < N; ++i) name << (i ? "," : "") << eta[static_cast<std::size_t>(i)];
  name << ")";
  if (N < 2) return RelationReport{"gl relations", name.str(), 0, {}, true, {}};
  // E_{a,a+1} with a = -i.
  GlFamily<GZFinitePattern> fam;
  fam.raise = [](const GZFinitePattern& p, int a) { return gz_finite_raise(p, -a); };
  fam.lower = [](const GZFinitePattern& p, int a) { return gz_finite_lower(p, -a); };
  fam.diag = [](const GZFinitePattern& p, int a) { return gz_finite_diag(p, -a); };
  for (int a = -(N - 1); a <= -1; ++a) fam.indices.push_back(a);
  fam.label = [](const GZFinitePattern& p) { return p.to_string(); };
  return check_family(fam, gz_finite_basis(eta), name.str());
}

Integer weyl_dimension(const std::vector<int>& eta) {
  Rational d(1);
  int N = static_cast<int>(eta.size());
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      d *= Rational(eta[static_cast<std::size_t>(i)] - eta[static_cast<std::size_t>(j)] + j - i, j - i);
  d.canonicalize();
  return d.get_num();
}

// ---------------------------------------------------------------------------

GZPattern::GZPattern(int n, Partition alpha, Partition gamma)
    : n_(n), alpha_(std::move(alpha)), gamma_(std::move(gamma)) {
  if (n < 1) throw PreconditionError("hook width must be positive");
  if (alpha_.length() > n || gamma_.length() > n) throw PreconditionError("alpha and gamma need at most n parts");
}

GZPattern GZPattern::from_deviations(int n, Partition alpha, Partition gamma,
                                     std::map<std::pair<int, int>, int> extra) {
  GZPattern g(n, std::move(alpha), std::move(gamma));
  for (auto& [k, v] : extra)
    if (v != 0) g.extra_[k] = v;
  if (!g.valid()) throw PreconditionError("not a hook pattern");
  return g;
}

bool operator<(const GZPattern& a, const GZPattern& b) {
  return std::tie(a.n_, a.alpha_, a.gamma_, a.extra_) < std::tie(b.n_, b.alpha_, b.gamma_, b.extra_);
}

int GZPattern::minimal_entry(int i, int j) const { return std::max(alpha_[i], gamma_[j]); }

int GZPattern::entry(int i, int j) const {
  auto it = extra_.find({i, j});
  return minimal_entry(i, j) + (it == extra_.end() ? 0 : it->second);
}

int GZPattern::ell(int i, int j) const { return entry(i, j) - std::min(i, j) + 1; }

int GZPattern::degree() const {
  int d = 0;
  for (const auto& [k, v] : extra_) d += v;
  return d;
}

int GZPattern::extent() const {
  int e = n_;
  for (const auto& [k, v] : extra_) e = std::max({e, k.first, k.second});
  return e;
}

bool GZPattern::valid() const {
  for (const auto& [k, v] : extra_) {
    if (v < 0) return false;
    if (k.first > n_ && k.second > n_) return false;
  }
  int E = extent() + 1;
  for (int i = 1; i <= E; ++i)
    for (int j = 1; j <= E; ++j) {
      if (entry(i, j) < entry(i + 1, j)) return false;
      if (entry(i, j) < entry(i, j + 1)) return false;
    }
  return true;
}

std::optional<GZPattern> GZPattern::shifted(int i, int j, int delta) const {
  if (i < 1 || j < 1) return std::nullopt;
  GZPattern r = *this;
  int& v = r.extra_[{i, j}];
  v += delta;
  if (v == 0) r.extra_.erase({i, j});
  if (!r.valid()) return std::nullopt;
  return r;
}

std::string GZPattern::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : extra_) {
    if (!first) os << ',';
    first = false;
    os << '(' << k.first << ',' << k.second << ")+" << v;
  }
  os << '}';
  return os.str();
}

namespace {

bool in_region(GZRegion r, int i, int j) {
  switch (r) {
    case GZRegion::Full: return true;
    case GZRegion::Lower: return i > j;
    case GZRegion::Upper: return i < j;
  }
  return false;
}

std::vector<std::vector<GZPattern>> gz_levels(int n, const Partition& alpha, const Partition& gamma, int d,
                                              GZRegion region) {
  std::vector<std::vector<GZPattern>> levels;
  levels.push_back({GZPattern(n, alpha, gamma)});
  for (int t = 1; t <= d; ++t) {
    std::set<GZPattern> next;
    for (const auto& p : levels.back()) {
      int E = p.extent() + 1;
      for (int i = 1; i <= E; ++i)
        for (int j = 1; j <= E; ++j) {
          if (!in_region(region, i, j)) continue;
          if (auto q = p.shifted(i, j, 1)) next.insert(std::move(*q));
        }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

}  // namespace

std::vector<GZPattern> enumerate_gz(int n, const Partition& alpha, const Partition& gamma, int d, GZRegion region) {
  if (d < 0) return {};
  return gz_levels(n, alpha, gamma, d, region).back();
}

std::vector<std::size_t> count_gz(int n, const Partition& alpha, const Partition& gamma, int max_degree,
                                  GZRegion region) {
  std::vector<std::size_t> out;
  if (max_degree < 0) return out;
  for (const auto& l : gz_levels(n, alpha, gamma, max_degree, region)) out.push_back(l.size());
  return out;
}

GZVector gz_raise(const GZPattern& mu, int a) {
  int n = mu.width();
  GZVector out;
  for (int j = 1; j <= n; ++j) {
    Rational num(1), den(1);
    std::optional<GZPattern> target;
    if (a <= -1) {
      int i = -a;
      int l = mu.ell(i + j, j);
      target = mu.shifted(i + j, j, 1);
      if (!target) continue;
      for (int k = 1; k <= n; ++k) num *= l - mu.ell(i - 1 + k, k);
      for (int k = 1; k <= n; ++k)
        if (k != j) den *= l - mu.ell(i + k, k);
    } else if (a == 0) {
      int l = mu.ell(j, j);
      target = mu.shifted(j, j, 1);
      if (!target) continue;
      for (int k = 1; k <= n; ++k)
        if (k != j) den *= l - mu.ell(k, k);
    } else {
      int l = mu.ell(j, a + j);
      target = mu.shifted(j, a + j, 1);
      if (!target) continue;
      num = -1;
      for (int k = 1; k <= n; ++k) num *= l - mu.ell(k, a - 1 + k);
      for (int k = 1; k <= n; ++k)
        if (k != j) den *= l - mu.ell(k, a + k);
    }
    add_to(out, *target, Rational(num / den));
  }
  return out;
}

GZVector gz_lower(const GZPattern& mu, int a) {
  int n = mu.width();
  GZVector out;
  for (int j = 1; j <= n; ++j) {
    Rational num(1), den(1);
    std::optional<GZPattern> target;
    if (a <= -1) {
      int i = -a;
      int l = mu.ell(i + j, j);
      target = mu.shifted(i + j, j, -1);
      if (!target) continue;
      num = -1;
      for (int k = 1; k <= n; ++k) num *= l - mu.ell(i + 1 + k, k);
      for (int k = 1; k <= n; ++k)
        if (k != j) den *= l - mu.ell(i + k, k);
    } else if (a == 0) {
      int l = mu.ell(j, j);
      target = mu.shifted(j, j, -1);
      if (!target) continue;
      num = -1;
      for (int k = 1; k <= n; ++k) num *= (l - mu.ell(k + 1, k)) * (l - mu.ell(k, k + 1));
      for (int k = 1; k <= n; ++k)
        if (k != j) den *= l - mu.ell(k, k);
    } else {
      int l = mu.ell(j, a + j);
      target = mu.shifted(j, a + j, -1);
      if (!target) continue;
      for (int k = 1; k <= n; ++k) num *= l - mu.ell(k, a + 1 + k);
      for (int k = 1; k <= n; ++k)
        if (k != j) den *= l - mu.ell(k, a + k);
    }
    add_to(out, *target, Rational(num / den));
  }
  return out;
}

Integer gz_diag(const GZPattern& mu, int a) {
  int n = mu.width();
  Integer s = 0;
  if (a <= 0) {
    int i = -a;
    for (int j = 1; j <= n; ++j) s += mu.entry(i + j, j) - mu.entry(i + 1 + j, j);
  } else {
    for (int j = 1; j <= n; ++j) s += mu.entry(j, a + j) - mu.entry(j, a - 1 + j);
    s -= n;
  }
  return s;
}

GZVector gz_action_half(int sign, const GZPattern& mu, int a, bool raise) {
  if (sign == -1 && a > -1) throw PreconditionError("gl^- generators need a <= -1");
  if (sign == 1 && a < 1) throw PreconditionError("gl^+ generators need a >= 1");
  if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
  return raise ? gz_raise(mu, a) : gz_lower(mu, a);
}

GZVector gz_action_zero(const GZPattern& mu, bool raise) { return raise ? gz_raise(mu, 0) : gz_lower(mu, 0); }

GZPattern half_minus_minimal(int n, const Partition& eta, const Partition& gamma) {
  for (int i = 1; i <= n; ++i)
    if (eta[i] < gamma[i]) throw PreconditionError("Y^- needs eta_i >= gamma_i");
  return GZPattern(n, eta, gamma);
}

GZPattern half_plus_minimal(int n, const Partition& eta, const Partition& alpha) {
  for (int i = 1; i <= n; ++i)
    if (eta[i] < alpha[i]) throw PreconditionError("Y^+ needs eta_i >= alpha_i");
  return GZPattern(n, alpha, eta);
}

std::map<int, Integer> lowest_weight_theta(int n, const Partition& alpha, int c, int window) {
  if (alpha.length() > n) throw PreconditionError("alpha needs at most n parts");
  if (c < 0) throw PreconditionError("c must be non-negative");
  int k = 0;
  while (k < n && alpha[k + 1] > c) ++k;
  std::map<int, Integer> theta;
  for (int i = -window; i <= window; ++i) {
    if (i <= -k)
      theta[i] = 0;
    else if (i <= 0)
      theta[i] = alpha[-i + 1] - c;
    else if (i <= n - k)
      theta[i] = alpha[n - i + 1] - c - n;
    else
      theta[i] = -n;
  }
  return theta;
}

std::map<int, Integer> theta_from_boundary(const Partition& alpha, const Partition& gamma, int kappa_minus,
                                           int window) {
  auto d = [&](int i, int j) { return std::max(gamma[i], alpha[j]); };
  int J = alpha.length() + gamma.length() + window + 2;
  std::map<int, Integer> theta;
  for (int i = -window; i <= window; ++i) {
    Integer t;
    if (i <= 0) {
      t = d(1, 1 - i);
      for (int j = 1; j <= J; ++j) t -= d(j, j - i + 1) - d(j + 1, j - i + 1);
    } else {
      t = kappa_minus;
      for (int j = 1; j <= J; ++j) t -= d(j + i - 1, j) - d(j + i, j);
    }
    theta[i] = t;
  }
  return theta;
}

RelationReport check_glinf_relations(int n, const Partition& alpha, const Partition& gamma,
                                     const GZCheckOptions& opt) {
  std::ostringstream name;
  name << "hook n=" << n << " alpha=" << alpha.to_string() << " gamma=" << gamma.to_string();
  GlFamily<GZPattern> fam;
  fam.raise = [](const GZPattern& p, int a) { return gz_raise(p, a); };
  fam.lower = [](const GZPattern& p, int a) { return gz_lower(p, a); };
  fam.diag = [](const GZPattern& p, int a) { return gz_diag(p, a); };
  for (int a = -opt.window; a <= opt.window; ++a) fam.indices.push_back(a);
  fam.label = [](const GZPattern& p) { return p.to_string(); };
  std::vector<GZPattern> states;
  auto levels = gz_levels(n, alpha, gamma, opt.max_deviation, GZRegion::Full);
  for (auto& l : levels) states.insert(states.end(), l.begin(), l.end());
  return check_family(fam, states, name.str());
}

GZPattern pp_to_gz(const PlanePartition& mu, int n) {
  const auto& b = mu.boundary();
  if (!b.beta.empty()) throw PreconditionError("hook patterns need beta = empty");
  if (b.alpha.length() > n || b.gamma.length() > n) throw PreconditionError("alpha and gamma need at most n parts");
  if (mu.height(n + 1, n + 1) != 0) throw PreconditionError("mu^(n+1)_{n+1} must vanish");
  GZPattern g = GZPattern::from_deviations(n, b.alpha, b.gamma, mu.deviations());
  for (const auto& [key, v] : g.deviations())
    if (g.entry(key.first, key.second) != mu.height(key.first, key.second))
      throw std::logic_error("hook pattern entries disagree with the plane partition");
  return g;
}

PlanePartition gz_to_pp(const GZPattern& g) {
  BoundaryTriple b{g.alpha(), Partition{}, g.gamma()};
  PlanePartition omega(b);
  std::vector<Box> boxes;
  for (const auto& [key, v] : g.deviations()) {
    int base = omega.height(key.first, key.second);
    for (int t = 1; t <= v; ++t) boxes.push_back(Box{key.second, base + t, key.first});
  }
  return PlanePartition::from_deviation_boxes(b, boxes);
}

}  // namespace qtor
