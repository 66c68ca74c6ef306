#include "qtor/psi.hpp"

#include <algorithm>
#include <sstream>

namespace qtor {

PsiEigenvalue PsiEigenvalue::k_factor() {
  PsiEigenvalue p;
  p.multiply(Monomial{0, 0, 0, 1});
  return p;
}

PsiEigenvalue& PsiEigenvalue::multiply(const Monomial& mono, int e) {
  if (e == 0) return *this;
  int& slot = factors_[mono];
  slot += e;
  if (slot == 0) factors_.erase(mono);
  return *this;
}

PsiEigenvalue& PsiEigenvalue::operator*=(const PsiEigenvalue& other) {
  for (const auto& [mono, e] : other.factors_) multiply(mono, e);
  return *this;
}

PsiEigenvalue& PsiEigenvalue::operator/=(const PsiEigenvalue& other) {
  for (const auto& [mono, e] : other.factors_) multiply(mono, -e);
  return *this;
}

PsiEigenvalue PsiEigenvalue::rescaled(const Monomial& s) const {
  PsiEigenvalue r;
  for (const auto& [mono, e] : factors_) r.multiply(mono * s, e);
  return r;
}

PsiEigenvalue PsiEigenvalue::at_resonance(int m, int n) const {
  PsiEigenvalue r;
  for (const auto& [mono, e] : factors_)
    r.multiply({mono.q1 - n * mono.K, mono.q2 + (m - n) * mono.K, mono.u, 0}, e);
  return r;
}

bool PsiEigenvalue::has_k_factor() const {
  for (const auto& [mono, e] : factors_)
    if (mono.K != 0) return true;
  return false;
}

std::vector<std::pair<MonomialTriple, int>> PsiEigenvalue::triples() const {
  std::vector<std::pair<MonomialTriple, int>> out;
  for (const auto& [mono, e] : factors_)
    if (mono.K == 0 && mono.u == 0) out.emplace_back(MonomialTriple{0, mono.q1, mono.q2}.canonical(), e);
  std::sort(out.begin(), out.end());
  return out;
}

int PsiEigenvalue::total_order() const {
  int t = 0;
  for (const auto& [mono, e] : factors_) t += e;
  return t;
}

BinomialProduct PsiEigenvalue::at_point(const Monomial& point) const {
  BinomialProduct b;
  for (const auto& [mono, e] : factors_) b.binomial(mono * point, e);
  return b;
}

Rational PsiEigenvalue::evaluate(const Rational& x, const ParamSpec& p) const {
  Rational num(1), den(1);
  for (const auto& [mono, e] : factors_) {
    Rational b = 1 - p.eval(mono) * x;
    if (b == 0) {
      if (e < 0) throw PoleError("x=" + qtor::to_string(x) + " is a pole of " + to_string());
      return Rational(0);
    }
    if (e > 0)
      num *= power(b, e);
    else
      den *= power(b, -e);
  }
  return num / den;
}

namespace {

// (1 - a y)^e as a truncated series in y.
std::vector<Rational> binomial_series(const Rational& a, int e, int order) {
  std::vector<Rational> s(static_cast<std::size_t>(order) + 1);
  s[0] = 1;
  // generalized binomial: coefficient of y^n is C(e, n) (-a)^n
  for (int n = 1; n <= order; ++n) {
    Rational step(e - n + 1, n);
    step.canonicalize();
    s[static_cast<std::size_t>(n)] = s[static_cast<std::size_t>(n - 1)] * step * (-a);
  }
  return s;
}

std::vector<Rational> truncated_product(const std::vector<Rational>& a, const std::vector<Rational>& b, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order; ++j)
      c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return c;
}

}  // namespace

std::vector<Rational> PsiEigenvalue::expand_at_zero(const ParamSpec& p, int order) const {
  std::vector<Rational> s(static_cast<std::size_t>(order) + 1);
  s[0] = 1;
  for (const auto& [mono, e] : factors_) s = truncated_product(s, binomial_series(p.eval(mono), e, order), order);
  return s;
}

std::vector<Rational> PsiEigenvalue::expand_at_infinity(const ParamSpec& p, int order) const {
  if (total_order() != 0) throw PreconditionError("psi is not bounded at infinity: " + to_string());
  Rational lead(1);
  std::vector<Rational> s(static_cast<std::size_t>(order) + 1);
  s[0] = 1;
  for (const auto& [mono, e] : factors_) {
    Rational a = p.eval(mono);
    if (a == 0) throw PoleError("vanishing monomial in psi");
    lead *= power(-a, e);
    s = truncated_product(s, binomial_series(1 / a, e, order), order);
  }
  for (auto& c : s) c *= lead;
  return s;
}

std::string PsiEigenvalue::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, e] : factors_) {
    if (!first) os << '*';
    first = false;
    os << "(1-";
    if (mono.K) os << "K^" << mono.K << '*';
    os << "q1^" << mono.q1 << "*q2^" << mono.q2 << "*x)^" << e;
  }
  return first ? "1" : os.str();
}

Rational PsiModes::plus_mode(int r) const {
  if (r < 0) return 0;
  if (r >= static_cast<int>(plus.size())) throw PreconditionError("psi mode beyond computed order");
  return plus[static_cast<std::size_t>(r)];
}

Rational PsiModes::minus_mode(int r) const {
  if (r > 0) return 0;
  if (-r >= static_cast<int>(minus.size())) throw PreconditionError("psi mode beyond computed order");
  return minus[static_cast<std::size_t>(-r)];
}

PsiModes psi_modes(const PsiEigenvalue& psi, const ParamSpec& p, int order) {
  PsiModes m;
  m.plus = psi.expand_at_zero(p, order);
  m.minus = psi.expand_at_infinity(p, order);
  for (int r = 0; r <= order; ++r) {
    m.plus[static_cast<std::size_t>(r)] *= power(p.u, r);
    m.minus[static_cast<std::size_t>(r)] *= power(p.u, -r);
  }
  return m;
}

// ---------------------------------------------------------------------------

PsiEigenvalue psi_shell(const PlanePartition& mu) {
  PsiEigenvalue psi = PsiEigenvalue::k_factor();
  for (const auto& pt : shell(mu)) psi.multiply(pt.position.triple().monomial(), pt.order);
  if (!mu.contains(1, 1, 1)) psi.multiply(Monomial{}, -1);
  return psi;
}

PsiEigenvalue psi_product(const PlanePartition& mu) {
  int count = mu.extent() + 2;
  auto layers = to_layers(mu, count + 1);
  int jmax = 1;
  for (const auto& l : layers) jmax = std::max(jmax, l.lambda.length() + 1);
  const Monomial q2{0, 1, 0, 0};
  auto s = [&](int i) { return layers[static_cast<std::size_t>(i - 1)].shift.monomial(); };
  auto lam = [&](int i, int j) { return layers[static_cast<std::size_t>(i - 1)].lambda[j]; };
  auto q1 = [](int a) { return Monomial{a, 0, 0, 0}; };

  PsiEigenvalue psi = PsiEigenvalue::k_factor();
  psi.multiply(q1(lam(1, 1)) * s(1), -1);
  for (int i = 1; i <= count; ++i) {
    psi.multiply(q1(lam(i, 1)) * q2 * s(i), 1);
    psi.multiply(q1(lam(i + 1, 1)) * s(i + 1), -1);
  }
  for (int j = 1; j <= jmax; ++j) {
    psi.multiply(q1(lam(1, j)) * Monomial::q3(j) * s(1), 1);
    psi.multiply(q1(lam(1, j + 1)) * Monomial::q3(j) * s(1), -1);
  }
  for (int i = 1; i <= count; ++i)
    for (int j = 1; j <= jmax; ++j) {
      psi.multiply(q1(lam(i + 1, j)) * Monomial::q3(j) * s(i + 1), 1);
      psi.multiply(q1(lam(i, j + 1)) * q2 * Monomial::q3(j) * s(i), 1);
      psi.multiply(q1(lam(i + 1, j + 1)) * Monomial::q3(j) * s(i + 1), -1);
      psi.multiply(q1(lam(i, j)) * q2 * Monomial::q3(j) * s(i), -1);
    }
  return psi;
}

PsiEigenvalue psi_boxes(const PlanePartition& mu) {
  PsiEigenvalue psi = psi_product(minimal_pp(mu.boundary()));
  for (const auto& b : mu.deviation_boxes()) {
    psi.multiply(MonomialTriple{b.i, b.j, b.k - 1}.monomial(), 1);
    psi.multiply(MonomialTriple{b.i, b.j - 1, b.k}.monomial(), 1);
    psi.multiply(MonomialTriple{b.i - 1, b.j, b.k}.monomial(), 1);
    psi.multiply(MonomialTriple{b.i - 1, b.j - 1, b.k}.monomial(), -1);
    psi.multiply(MonomialTriple{b.i, b.j - 1, b.k - 1}.monomial(), -1);
    psi.multiply(MonomialTriple{b.i - 1, b.j, b.k - 1}.monomial(), -1);
  }
  return psi;
}

}  // namespace qtor
