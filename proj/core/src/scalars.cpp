#include "qtor/scalars.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qtor {

Rational power(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw PoleError("zero raised to a negative power");
    return Rational(0);
  }
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  if (exponent < 0) r = 1 / r;
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

MonomialTriple MonomialTriple::canonical() const {
  int t = std::min({i, j, k});
  return shifted(-t);
}

std::string to_string(const MonomialTriple& t) {
  std::ostringstream os;
  os << '(' << t.i << ',' << t.j << ',' << t.k << ')';
  return os.str();
}

Rational ParamSpec::eval(const Monomial& mono) const {
  return power(q1, mono.q1) * power(q2, mono.q2) * power(u, mono.u) * power(K, mono.K);
}

std::string ParamSpec::describe() const {
  std::ostringstream os;
  os << "q1=" << q1 << " q2=" << q2 << " u=" << u << " K=" << K;
  if (resonant()) os << " (K=q2^" << m << " q3^" << n << ")";
  return os.str();
}

namespace {

std::map<Rational, int> power_table(const Rational& q, int range) {
  std::map<Rational, int> table;
  for (int a = -range; a <= range; ++a) table.emplace(power(q, a), a);
  return table;
}

}  // namespace

bool is_generic_pair(const Rational& q1, const Rational& q2, int bound) {
  if (q1 == 0 || q2 == 0) return false;
  int range = 2 * bound;
  auto table2 = power_table(q2, range);
  if (static_cast<int>(table2.size()) != 2 * range + 1) return false;  // q2 a root of unity
  for (int a = -range; a <= range; ++a) {
    auto it = table2.find(power(q1, a));
    if (it == table2.end()) continue;
    if (a != 0 || it->second != 0) return false;
  }
  return true;
}

bool is_generic_level(const Rational& q1, const Rational& q2, const Rational& K, int bound) {
  if (K == 0) return false;
  int range = 2 * bound;
  auto table2 = power_table(q2, range);
  for (int a = -range; a <= range; ++a)
    if (table2.count(K / power(q1, a))) return false;
  return true;
}

ParamSpec make_params(const Rational& q1, const Rational& q2, const Rational& u, const Rational& K, int bound) {
  if (!is_generic_pair(q1, q2, bound))
    throw PreconditionError("q1=" + to_string(q1) + ", q2=" + to_string(q2) + " are not generic");
  if (u == 0) throw PreconditionError("u must be nonzero");
  ParamSpec p{q1, q2, u, K};
  if (!is_generic_level(q1, q2, K, bound)) throw PreconditionError("K=" + to_string(K) + " is not generic");
  return p;
}

namespace {

Rational draw_ratio(std::mt19937_64& rng, int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  long num = lo + static_cast<long>(rng() % span);
  long den = lo + static_cast<long>(rng() % span);
  Rational r(num, den);
  r.canonicalize();
  if (rng() % 2) r = -r;
  return r;
}

}  // namespace

ParamSpec make_generic_params(std::uint64_t seed, int bound) {
  if (bound < 1) throw PreconditionError("genericity bound must be at least 1");
  std::mt19937_64 rng(seed);
  for (;;) {
    Rational q1 = draw_ratio(rng, 2, 19);
    Rational q2 = draw_ratio(rng, 2, 19);
    Rational u = draw_ratio(rng, 1, 9);
    Rational K = draw_ratio(rng, 2, 23);
    if (!is_generic_pair(q1, q2, bound)) continue;
    if (!is_generic_level(q1, q2, K, bound)) continue;
    return ParamSpec{q1, q2, u, K};
  }
}

ParamSpec with_resonance(const ParamSpec& p, int m, int n) {
  ParamSpec r = p;
  r.K = power(p.q2, m) * power(p.q3(), n);
  r.level = LevelKind::Resonant;
  r.m = m;
  r.n = n;
  return r;
}

ParamSpec make_resonant_params(std::uint64_t seed, int m, int n, int bound) {
  return with_resonance(make_generic_params(seed, bound), m, n);
}

Rational eval_monomial(const MonomialTriple& t, const ParamSpec& p) { return p.eval(t); }

// ---------------------------------------------------------------------------

BinomialProduct& BinomialProduct::scale(const Rational& c) {
  constant_ *= c;
  return *this;
}

BinomialProduct& BinomialProduct::times(const Monomial& mono) {
  prefactor_ = prefactor_ * mono;
  return *this;
}

BinomialProduct& BinomialProduct::binomial(const Monomial& mono, int e) {
  if (e == 0) return *this;
  int& slot = factors_[mono];
  slot += e;
  if (slot == 0) factors_.erase(mono);
  return *this;
}

BinomialProduct& BinomialProduct::operator*=(const BinomialProduct& other) {
  constant_ *= other.constant_;
  prefactor_ = prefactor_ * other.prefactor_;
  for (const auto& [mono, e] : other.factors_) binomial(mono, e);
  return *this;
}

BinomialProduct& BinomialProduct::operator/=(const BinomialProduct& other) {
  if (other.constant_ == 0) throw PoleError("division by a zero constant");
  constant_ /= other.constant_;
  prefactor_ = prefactor_ / other.prefactor_;
  for (const auto& [mono, e] : other.factors_) binomial(mono, -e);
  return *this;
}

bool BinomialProduct::is_zero() const {
  if (constant_ == 0) return true;
  auto it = factors_.find(Monomial{});
  return it != factors_.end() && it->second > 0;
}

bool BinomialProduct::has_pole() const {
  auto it = factors_.find(Monomial{});
  return it != factors_.end() && it->second < 0;
}

Rational BinomialProduct::evaluate(const ParamSpec& p) const {
  if (has_pole()) throw PoleError("symbolic pole (1-1)^-1 in " + to_string());
  if (is_zero()) return Rational(0);
  Rational value = constant_ * p.eval(prefactor_);
  Rational num(1), den(1);
  for (const auto& [mono, e] : factors_) {
    Rational b = 1 - p.eval(mono);
    if (b == 0) {
      if (e < 0) throw PoleError("evaluation hits a pole at " + p.describe());
      return Rational(0);
    }
    if (e > 0)
      num *= power(b, e);
    else
      den *= power(b, -e);
  }
  return value * num / den;
}

namespace {

Monomial substitute_K(const Monomial& mono, int m, int n) {
  // K = q2^m q3^n = q1^-n q2^(m-n)
  return {mono.q1 - n * mono.K, mono.q2 + (m - n) * mono.K, mono.u, 0};
}

}  // namespace

BinomialProduct BinomialProduct::at_resonance(int m, int n) const {
  BinomialProduct r(constant_);
  r.prefactor_ = substitute_K(prefactor_, m, n);
  for (const auto& [mono, e] : factors_) r.binomial(substitute_K(mono, m, n), e);
  return r;
}

FactoredQ1Scalar BinomialProduct::in_q1(const Rational& q2, const Rational& u, int kappa) const {
  auto rest = [&](const Monomial& mono) -> Rational { return power(q2, mono.q2) * power(u, mono.u); };
  FactoredQ1Scalar s(constant_ * rest(prefactor_), prefactor_.q1 + kappa * prefactor_.K);
  for (const auto& [mono, e] : factors_) s.mul_binomial(mono.q1 + kappa * mono.K, rest(mono), e);
  return s;
}

std::string BinomialProduct::to_string() const {
  std::ostringstream os;
  auto mono_str = [](const Monomial& m) {
    std::ostringstream o;
    o << "q1^" << m.q1 << "*q2^" << m.q2;
    if (m.u) o << "*u^" << m.u;
    if (m.K) o << "*K^" << m.K;
    return o.str();
  };
  os << constant_;
  if (!prefactor_.is_one()) os << '*' << mono_str(prefactor_);
  for (const auto& [mono, e] : factors_) os << "*(1-" << mono_str(mono) << ")^" << e;
  return os.str();
}

// ---------------------------------------------------------------------------

FactoredQ1Scalar::FactoredQ1Scalar(Rational c, int exponent) : c_(std::move(c)), exponent_(exponent) {}

FactoredQ1Scalar FactoredQ1Scalar::binomial(int a, const Rational& rho, int e) {
  FactoredQ1Scalar s;
  s.mul_binomial(a, rho, e);
  return s;
}

FactoredQ1Scalar& FactoredQ1Scalar::mul_binomial(int a, const Rational& rho, int e) {
  if (e == 0 || c_ == 0) return *this;
  if (rho == 0) return *this;
  if (a == 0) {
    Rational b = 1 - rho;
    if (b == 0) {
      if (e < 0) throw PoleError("identically singular factor (1-1)^-1");
      c_ = 0;
      factors_.clear();
      exponent_ = 0;
      return *this;
    }
    c_ *= power(b, e);
    return *this;
  }
  for (auto it = factors_.begin(); it != factors_.end(); ++it) {
    if (it->a == a && it->rho == rho) {
      it->e += e;
      if (it->e == 0) factors_.erase(it);
      return *this;
    }
  }
  factors_.push_back({a, rho, e});
  return *this;
}

FactoredQ1Scalar& FactoredQ1Scalar::operator*=(const FactoredQ1Scalar& other) {
  if (other.c_ == 0 || c_ == 0) {
    *this = FactoredQ1Scalar(Rational(0));
    return *this;
  }
  c_ *= other.c_;
  exponent_ += other.exponent_;
  for (const auto& f : other.factors_) mul_binomial(f.a, f.rho, f.e);
  return *this;
}

FactoredQ1Scalar& FactoredQ1Scalar::operator/=(const FactoredQ1Scalar& other) {
  if (other.c_ == 0) throw PoleError("division by zero scalar");
  c_ /= other.c_;
  exponent_ -= other.exponent_;
  for (const auto& f : other.factors_) mul_binomial(f.a, f.rho, -f.e);
  return *this;
}

Rational FactoredQ1Scalar::evaluate(const Rational& q1) const {
  if (c_ == 0) return Rational(0);
  Rational num = c_ * power(q1, exponent_), den(1);
  for (const auto& f : factors_) {
    Rational b = 1 - power(q1, f.a) * f.rho;
    if (b == 0) {
      if (f.e < 0) throw PoleError("q1=" + qtor::to_string(q1) + " is a pole");
      return Rational(0);
    }
    if (f.e > 0)
      num *= power(b, f.e);
    else
      den *= power(b, -f.e);
  }
  return num / den;
}

std::string FactoredQ1Scalar::to_string() const {
  std::ostringstream os;
  os << c_;
  if (exponent_) os << "*q1^" << exponent_;
  for (const auto& f : factors_) os << "*(1-q1^" << f.a << "*" << f.rho << ")^" << f.e;
  return os.str();
}

Q1Limit limit_at_q1_one(const FactoredQ1Scalar& s) {
  if (s.is_zero()) return {Rational(0), Q1Limit::kExactZero};
  int order = 0;
  Rational value = s.constant();
  for (const auto& f : s.factors()) {
    if (f.rho == 1) {
      order += f.e;
      value *= power(Rational(f.a), f.e);
    } else {
      value *= power(1 - f.rho, f.e);
    }
  }
  if (order != 0) value = 0;
  return {value, order};
}

}  // namespace qtor
