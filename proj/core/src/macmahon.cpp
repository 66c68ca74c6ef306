#include "qtor/macmahon.hpp"

#include "qtor/fock.hpp"

#include <algorithm>

namespace qtor {

namespace {

const Monomial kQ1{1, 0, 0, 0};
const Monomial kU{0, 0, 1, 0};

struct LayerData {
  std::vector<Layer> layers;  // 1-based through layer(k)
  std::vector<PsiEigenvalue> psis;
  int top = 0;

  explicit LayerData(const PlanePartition& mu, int top_layer) : top(top_layer) {
    layers = to_layers(mu, top_layer);
    for (const auto& l : layers) psis.push_back(fock_psi(l.lambda).rescaled(l.shift.monomial()));
  }
  const Layer& layer(int k) const { return layers[static_cast<std::size_t>(k - 1)]; }
  const PsiEigenvalue& psi(int k) const { return psis[static_cast<std::size_t>(k - 1)]; }
};

// (1-Kx) times the telescoped remainder of the layers above N, which all equal gamma.
PsiEigenvalue tail_correction(const Partition& gamma, int N) {
  PsiEigenvalue g = PsiEigenvalue::k_factor();
  Monomial q2N{0, N, 0, 0};
  g.multiply(Monomial{gamma[1], 0, 0, 0} * q2N, -1);
  for (int j = 1; j <= gamma.length() + 1; ++j) {
    g.multiply(Monomial{gamma[j], 0, 0, 0} * q2N * Monomial::q3(j), 1);
    g.multiply(Monomial{gamma[j + 1], 0, 0, 0} * q2N * Monomial::q3(j), -1);
  }
  return g;
}

Monomial box_point(const Box& b) { return MonomialTriple{-b.i, -b.j, -b.k}.monomial(); }
Monomial box_support(const Box& b) { return b.triple().monomial() * kU; }

void assert_no_pole(const BinomialProduct& c, const Box& b, const char* what) {
  if (c.has_pole())
    throw PoleError(std::string(what) + " coefficient has a pole at the support of box " + b.to_string());
}

}  // namespace

PsiEigenvalue psi_head(const PlanePartition& mu, int k) {
  PsiEigenvalue psi;
  if (k <= 0) return psi;
  LayerData data(mu, k);
  for (int m = 1; m <= k; ++m) psi *= data.psi(m);
  return psi;
}

PsiEigenvalue psi_tail(const PlanePartition& mu, int k) {
  int N = std::max(mu.extent() + 1, k);
  LayerData data(mu, N);
  PsiEigenvalue psi = tail_correction(mu.boundary().gamma, N);
  for (int m = std::max(k, 1); m <= N; ++m) psi *= data.psi(m);
  return psi;
}

std::vector<PPTerm> e_terms(const PlanePartition& mu) {
  auto corners = mu.corners().concave;
  int top = 1;
  for (const auto& b : corners) top = std::max(top, b.k);
  LayerData data(mu, top);
  std::vector<PsiEigenvalue> head(static_cast<std::size_t>(top) + 1);
  for (int k = 1; k <= top; ++k) head[static_cast<std::size_t>(k)] = head[static_cast<std::size_t>(k - 1)] * data.psi(k);

  const auto& beta = mu.boundary().beta;
  std::vector<PPTerm> out;
  for (const auto& b : corners) {
    BinomialProduct c = head[static_cast<std::size_t>(b.k - 1)].at_point(box_point(b));
    assert_no_pole(c, b, "e");
    c *= fock_e_factor(data.layer(b.k).lambda, b.i - beta[b.k]);
    c.binomial(kQ1, -1);
    assert_no_pole(c, b, "e");
    if (c.is_zero()) continue;
    out.push_back({mu.add_box(b), std::move(c), box_support(b), b});
  }
  return out;
}

std::vector<PPTerm> f_terms(const PlanePartition& mu, std::optional<std::pair<int, int>> resonance) {
  auto corners = mu.corners().convex;
  if (corners.empty()) return {};
  int N = mu.extent() + 2;
  LayerData data(mu, N);
  std::vector<PsiEigenvalue> tail(static_cast<std::size_t>(N) + 2);
  tail[static_cast<std::size_t>(N + 1)] = tail_correction(mu.boundary().gamma, N);
  for (int k = N; k >= 1; --k) tail[static_cast<std::size_t>(k)] = tail[static_cast<std::size_t>(k + 1)] * data.psi(k);

  const auto& beta = mu.boundary().beta;
  std::vector<PPTerm> out;
  for (const auto& b : corners) {
    PsiEigenvalue t = tail[static_cast<std::size_t>(b.k + 1)];
    if (resonance) t = t.at_resonance(resonance->first, resonance->second);
    BinomialProduct c = t.at_point(box_point(b));
    assert_no_pole(c, b, "f");
    c *= fock_f_factor(data.layer(b.k).lambda, b.i - beta[b.k]);
    c.binomial(kQ1, -1);
    c.times(kQ1);
    assert_no_pole(c, b, "f");
    if (c.is_zero()) continue;
    out.push_back({mu.remove_box(b), std::move(c), box_support(b), b});
  }
  return out;
}

// ---------------------------------------------------------------------------

MacmahonModule::MacmahonModule(BoundaryTriple boundary, ParamSpec params, bool quotient)
    : boundary_(std::move(boundary)), params_(std::move(params)) {
  if (quotient) {
    if (!params_.resonant()) throw PreconditionError("a quotient needs a resonant level K = q2^m q3^n");
    forbidden_ = resonance_box(boundary_, params_.m, params_.n);
  }
}

std::string MacmahonModule::name() const {
  std::string s = quotient() ? "N" : "M";
  if (params_.resonant()) s += "^{" + std::to_string(params_.m) + "," + std::to_string(params_.n) + "}";
  return s + "[" + boundary_.to_string() + "]";
}

std::optional<std::pair<int, int>> MacmahonModule::resonance() const {
  if (!params_.resonant()) return std::nullopt;
  return std::make_pair(params_.m, params_.n);
}

const std::vector<PlanePartition>& MacmahonModule::basis(int d) const {
  static const std::vector<PlanePartition> kEmpty;
  if (d < 0) return kEmpty;
  std::lock_guard lock(mutex_);
  auto it = bases_.find(d);
  if (it == bases_.end()) {
    it = bases_.emplace(d, enumerate_pp(boundary_, d, forbidden_)).first;
    auto& idx = index_[d];
    for (std::size_t t = 0; t < it->second.size(); ++t) idx[it->second[t].deviations()] = t;
  }
  return it->second;
}

std::optional<std::size_t> MacmahonModule::find(const PlanePartition& mu) const {
  int d = mu.degree();
  basis(d);
  std::lock_guard lock(mutex_);
  const auto& idx = index_.at(d);
  auto it = idx.find(mu.deviations());
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t MacmahonModule::dimension(int d) const { return basis(d).size(); }

std::string MacmahonModule::label(int d, std::size_t index) const { return basis(d).at(index).to_string(); }

std::vector<Transition> MacmahonModule::raise(int d, std::size_t index) const {
  std::vector<Transition> out;
  for (auto& term : e_terms(basis(d).at(index))) {
    auto target = find(term.target);
    if (!target) continue;
    out.push_back({*target, std::move(term.coeff), term.support});
  }
  return out;
}

std::vector<Transition> MacmahonModule::lower(int d, std::size_t index) const {
  std::vector<Transition> out;
  for (auto& term : f_terms(basis(d).at(index), resonance())) {
    auto target = find(term.target);
    if (!target) throw std::logic_error("f left the basis from " + label(d, index));
    out.push_back({*target, std::move(term.coeff), term.support});
  }
  return out;
}

PsiEigenvalue MacmahonModule::psi(int d, std::size_t index) const {
  PsiEigenvalue p = psi_shell(basis(d).at(index));
  if (auto res = resonance()) p = p.at_resonance(res->first, res->second);
  return p;
}

namespace {

PPVector evaluate_terms(const std::vector<PPTerm>& terms, const ParamSpec& p, int r) {
  PPVector out;
  for (const auto& t : terms) {
    Rational v = t.coeff.evaluate(p) * power(p.eval(t.support), r);
    if (v != 0) out.emplace_back(t.target, v);
  }
  return out;
}

}  // namespace

PPVector e_action(const MacmahonModule& mod, const PlanePartition& mu, int r) {
  if (mu.boundary() != mod.boundary()) throw PreconditionError("plane partition has a different boundary");
  return evaluate_terms(e_terms(mu), mod.params(), r);
}

PPVector f_action(const MacmahonModule& mod, const PlanePartition& mu, int r) {
  if (mu.boundary() != mod.boundary()) throw PreconditionError("plane partition has a different boundary");
  return evaluate_terms(f_terms(mu, mod.resonance()), mod.params(), r);
}

bool singular_vector_check(const MacmahonModule& mod, int t, std::optional<std::pair<int, int>> mn, int r_min,
                           int r_max) {
  if (t < 1) throw PreconditionError("t must be at least 1");
  if (!mn) mn = mod.resonance();
  if (!mn) throw PreconditionError("omega_t needs (m,n)");
  PlanePartition w = omega_t(mod.boundary(), mn->first, mn->second, t);
  for (int r = r_min; r <= r_max; ++r)
    if (!f_action(mod, w, r).empty()) return false;
  return true;
}

// ---------------------------------------------------------------------------

int rescaling_exponent(const PlanePartition& mu) {
  int p = 0;
  int top = mu.extent() + 1;
  auto layers = to_layers(mu, top);
  for (int i = 1; i <= top; ++i) p += layers[static_cast<std::size_t>(i - 1)].lambda[i];
  return p;
}

std::map<int, int> limit_cartan(const PlanePartition& mu, int kappa, int window) {
  std::map<int, int> delta;
  delta[1] += kappa;
  for (const auto& pt : shell(mu)) {
    const Box& b = pt.position;
    delta[b.i - b.k + 1] += pt.order * (b.j - b.i);
  }
  std::map<int, int> theta;
  int lo = std::min(-window, delta.empty() ? 0 : delta.begin()->first);
  int acc = 0;
  for (int i = lo; i <= window; ++i) {
    auto it = delta.find(i);
    if (it != delta.end()) acc += it->second;
    if (i >= -window) theta[i] = acc;
  }
  return theta;
}

LimitReport limit_coefficients(const BoundaryTriple& b, int n, int max_degree, const Rational& q2, const Rational& u,
                               bool quotient, int window) {
  if (!b.beta.empty()) throw PreconditionError("the q1 -> 1 limit needs beta = empty");
  if (n < 0) throw PreconditionError("n must be non-negative");
  LimitReport report;
  report.n = n;
  report.max_degree = max_degree;
  std::optional<Box> forbidden;
  if (quotient) forbidden = resonance_box(b, n, n);
  auto allowed = [&](const PlanePartition& mu) { return !forbidden || !mu.contains(*forbidden); };

  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& mu : enumerate_pp(b, d, forbidden)) {
      int p_src = rescaling_exponent(mu);
      auto record = [&](const PPTerm& term, bool raising) {
        if (!allowed(term.target)) return;
        if (raising && term.target.degree() > max_degree) return;
        FactoredQ1Scalar s = term.coeff.in_q1(q2, u, -n);
        s.mul_binomial(1, Rational(1), rescaling_exponent(term.target) - p_src);
        LimitEntry entry{raising, mu.to_string(), term.target.to_string(), s, limit_at_q1_one(s)};
        if (entry.limit.pole()) report.all_finite = false;
        report.entries.push_back(std::move(entry));
      };
      for (const auto& term : e_terms(mu)) record(term, true);
      for (const auto& term : f_terms(mu, std::make_pair(n, n))) record(term, false);
    }
  }
  report.theta = limit_cartan(minimal_pp(b), -n, window);
  return report;
}

}  // namespace qtor
