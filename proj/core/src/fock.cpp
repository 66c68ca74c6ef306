#include "qtor/fock.hpp"

namespace qtor {

namespace {

const Monomial kQ1{1, 0, 0, 0};
const Monomial kU{0, 0, 1, 0};

Monomial q1_pow(int a) { return {a, 0, 0, 0}; }

BinomialProduct over_one_minus_q1() {
  BinomialProduct b;
  b.binomial(kQ1, -1);
  return b;
}

Rational mode_power(const ParamSpec& p, const Monomial& support, int r) { return power(p.eval(support), r); }

}  // namespace

PsiEigenvalue vector_psi(int i) {
  PsiEigenvalue psi;
  Monomial s = q1_pow(i);
  psi.multiply(Monomial::q3() * s, 1);
  psi.multiply(Monomial{0, 1, 0, 0} * s, 1);
  psi.multiply(s, -1);
  psi.multiply(Monomial{0, 1, 0, 0} * Monomial::q3() * s, -1);
  return psi;
}

std::vector<WeightedIndex> vector_action(Generator gen, int r, int i, const ParamSpec& p) {
  switch (gen) {
    case Generator::E:
      return {{i + 1, power(power(p.q1, i) * p.u, r) / (1 - p.q1)}};
    case Generator::F:
      return {{i - 1, -power(power(p.q1, i - 1) * p.u, r) / (1 - 1 / p.q1)}};
    case Generator::PsiPlus:
    case Generator::PsiMinus: {
      int order = r < 0 ? -r : r;
      auto modes = psi_modes(vector_psi(i), p, order);
      Rational c = gen == Generator::PsiPlus ? modes.plus_mode(r) : modes.minus_mode(r);
      if (c == 0) return {};
      return {{i, c}};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

PsiEigenvalue fock_psi(const Partition& lambda) {
  PsiEigenvalue psi;
  auto c = corners2d(lambda);
  for (const auto& [i, j] : c.concave) {
    psi.multiply(q13(j - 2, i - 2), 1);
    psi.multiply(q13(j - 1, i - 1), -1);
  }
  for (const auto& [i, j] : c.convex) {
    psi.multiply(q13(j, i), 1);
    psi.multiply(q13(j - 1, i - 1), -1);
  }
  return psi;
}

BinomialProduct fock_e_factor(const Partition& lambda, int i) {
  BinomialProduct b;
  for (int k = 1; k < i; ++k) {
    int d = lambda[k] - lambda[i];
    b.binomial(q13(d, k - i + 1), 1);
    b.binomial(q13(d - 1, k - i - 1), 1);
    b.binomial(q13(d, k - i), -1);
    b.binomial(q13(d - 1, k - i), -1);
  }
  return b;
}

BinomialProduct fock_f_factor(const Partition& lambda, int i) {
  BinomialProduct b;
  int li = lambda[i];
  b.binomial(q13(lambda[i + 1] - li, 0), 1);
  b.binomial(q13(lambda[i + 1] - li + 1, 1), -1);
  for (int k = i + 1; k <= lambda.length() + 1; ++k) {
    b.binomial(q13(lambda[k] - li + 1, k - i + 1), 1);
    b.binomial(q13(lambda[k + 1] - li, k - i), 1);
    b.binomial(q13(lambda[k + 1] - li + 1, k - i + 1), -1);
    b.binomial(q13(lambda[k] - li, k - i), -1);
  }
  return b;
}

FockVector fock_e(const Partition& lambda, int r, const ParamSpec& p) {
  FockVector out;
  for (const auto& [i, j] : corners2d(lambda).concave) {
    BinomialProduct c = fock_e_factor(lambda, i);
    c *= over_one_minus_q1();
    Monomial support = q13(j - 1, i - 1) * kU;
    Rational v = c.evaluate(p) * mode_power(p, support, r);
    if (v != 0) out[lambda.add_box(i)] += v;
  }
  return out;
}

FockVector fock_f(const Partition& lambda, int r, const ParamSpec& p) {
  FockVector out;
  for (const auto& [i, j] : corners2d(lambda).convex) {
    BinomialProduct c = fock_f_factor(lambda, i);
    c *= over_one_minus_q1();
    c.times(kQ1);
    Monomial support = q13(j - 1, i - 1) * kU;
    Rational v = c.evaluate(p) * mode_power(p, support, r);
    if (v != 0) out[lambda.remove_box(i)] += v;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string VectorModule::label(int d, std::size_t) const { return "[u]_" + std::to_string(d); }

std::vector<Transition> VectorModule::raise(int d, std::size_t) const {
  return {{0, over_one_minus_q1(), q1_pow(d) * kU}};
}

std::vector<Transition> VectorModule::lower(int d, std::size_t) const {
  BinomialProduct c = over_one_minus_q1();
  c.times(kQ1);
  return {{0, c, q1_pow(d - 1) * kU}};
}

PsiEigenvalue VectorModule::psi(int d, std::size_t) const { return vector_psi(d); }

// ---------------------------------------------------------------------------

const std::vector<Partition>& FockModule::basis(int d) const {
  std::lock_guard lock(mutex_);
  auto it = bases_.find(d);
  if (it == bases_.end()) {
    it = bases_.emplace(d, partitions_of(d)).first;
    for (std::size_t t = 0; t < it->second.size(); ++t) index_[it->second[t]] = t;
  }
  return it->second;
}

std::size_t FockModule::index_of(const Partition& lambda) const {
  basis(lambda.size());
  std::lock_guard lock(mutex_);
  return index_.at(lambda);
}

std::size_t FockModule::dimension(int d) const { return d < 0 ? 0 : basis(d).size(); }

std::string FockModule::label(int d, std::size_t index) const { return basis(d).at(index).to_string(); }

std::vector<Transition> FockModule::raise(int d, std::size_t index) const {
  const Partition& lambda = basis(d).at(index);
  std::vector<Transition> out;
  for (const auto& [i, j] : corners2d(lambda).concave) {
    BinomialProduct c = fock_e_factor(lambda, i);
    c *= over_one_minus_q1();
    if (c.is_zero()) continue;
    out.push_back({index_of(lambda.add_box(i)), c, q13(j - 1, i - 1) * kU});
  }
  return out;
}

std::vector<Transition> FockModule::lower(int d, std::size_t index) const {
  const Partition& lambda = basis(d).at(index);
  std::vector<Transition> out;
  for (const auto& [i, j] : corners2d(lambda).convex) {
    BinomialProduct c = fock_f_factor(lambda, i);
    c *= over_one_minus_q1();
    c.times(kQ1);
    if (c.is_zero()) continue;
    out.push_back({index_of(lambda.remove_box(i)), c, q13(j - 1, i - 1) * kU});
  }
  return out;
}

PsiEigenvalue FockModule::psi(int d, std::size_t index) const { return fock_psi(basis(d).at(index)); }

}  // namespace qtor
