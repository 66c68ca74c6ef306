#include "qtor/module.hpp"

namespace qtor {

ModeOperator ModeOperator::zero(int source, int target, std::size_t rows, std::size_t cols) {
  ModeOperator m;
  m.source_degree = source;
  m.target_degree = target;
  m.rows = rows;
  m.cols = cols;
  return m;
}

Rational ModeOperator::at(std::size_t row, std::size_t col) const {
  auto it = entries.find({row, col});
  return it == entries.end() ? Rational(0) : it->second;
}

void ModeOperator::add(std::size_t row, std::size_t col, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = entries.emplace(std::make_pair(row, col), v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries.erase(it);
  }
}

ModeOperator& ModeOperator::axpy(const Rational& c, const ModeOperator& other) {
  if (other.rows != rows || other.cols != cols) throw std::logic_error("mode operator shapes differ");
  if (c == 0) return *this;
  for (const auto& [key, v] : other.entries) add(key.first, key.second, c * v);
  return *this;
}

ModeOperator compose(const ModeOperator& a, const ModeOperator& b) {
  if (a.cols != b.rows) throw std::logic_error("mode operator shapes do not compose");
  ModeOperator c = ModeOperator::zero(b.source_degree, a.target_degree, a.rows, b.cols);
  std::map<std::size_t, std::vector<std::pair<std::size_t, const Rational*>>> by_col;
  for (const auto& [key, v] : a.entries) by_col[key.second].emplace_back(key.first, &v);
  for (const auto& [key, v] : b.entries) {
    auto it = by_col.find(key.first);
    if (it == by_col.end()) continue;
    for (const auto& [row, av] : it->second) c.add(row, key.second, *av * v);
  }
  return c;
}

// ---------------------------------------------------------------------------

const std::vector<std::vector<EvaluatedModule::Evaluated>>& EvaluatedModule::transitions(bool raise, int d) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(raise, d);
  auto it = transitions_.find(key);
  if (it != transitions_.end()) return it->second;
  const ParamSpec& p = params();
  std::vector<std::vector<Evaluated>> all(module_.dimension(d));
  for (std::size_t t = 0; t < all.size(); ++t) {
    auto terms = raise ? module_.raise(d, t) : module_.lower(d, t);
    for (const auto& term : terms) {
      Rational c = term.coeff.evaluate(p);
      if (c == 0) continue;
      all[t].push_back({term.target, c, p.eval(term.support)});
    }
    if (raise && fault_ && std::get<0>(*fault_) == d && std::get<1>(*fault_) == t && !all[t].empty())
      all[t].front().coeff *= std::get<2>(*fault_);
  }
  return transitions_.emplace(key, std::move(all)).first->second;
}

const PsiModes& EvaluatedModule::psi_modes_at(int d, std::size_t index, int order) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(d, index);
  auto it = psi_.find(key);
  if (it == psi_.end() || static_cast<int>(it->second.plus.size()) <= order) {
    PsiModes m = psi_modes(module_.psi(d, index), params(), std::max(order, 8));
    it = psi_.insert_or_assign(key, std::move(m)).first;
  }
  return it->second;
}

const ModeOperator& EvaluatedModule::mode(Generator gen, int r, int d) {
  std::lock_guard lock(mutex_);
  auto key = std::make_tuple(static_cast<int>(gen), r, d);
  auto it = modes_.find(key);
  if (it != modes_.end()) return it->second;

  ModeOperator m;
  std::size_t cols = module_.dimension(d);
  switch (gen) {
    case Generator::E:
    case Generator::F: {
      bool raise = gen == Generator::E;
      int target = raise ? d + 1 : d - 1;
      m = ModeOperator::zero(d, target, module_.dimension(target), cols);
      if (m.rows == 0) break;
      const auto& all = transitions(raise, d);
      for (std::size_t c = 0; c < cols; ++c)
        for (const auto& t : all[c]) m.add(t.target, c, t.coeff * power(t.support, r));
      break;
    }
    case Generator::PsiPlus:
    case Generator::PsiMinus: {
      m = ModeOperator::zero(d, d, cols, cols);
      int order = r < 0 ? -r : r;
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& pm = psi_modes_at(d, c, order);
        m.add(c, c, gen == Generator::PsiPlus ? pm.plus_mode(r) : pm.minus_mode(r));
      }
      break;
    }
  }
  return modes_.emplace(key, std::move(m)).first->second;
}

void EvaluatedModule::inject_fault(int d, std::size_t index, Rational factor) {
  std::lock_guard lock(mutex_);
  fault_ = std::make_tuple(d, index, std::move(factor));
  transitions_.clear();
  modes_.clear();
}

ModeOperator mode_matrix(const GradedModule& module, Generator gen, int r, int d) {
  EvaluatedModule ev(module);
  return ev.mode(gen, r, d);
}

}  // namespace qtor
