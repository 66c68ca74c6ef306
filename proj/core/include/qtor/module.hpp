#pragma once

#include "qtor/psi.hpp"
#include "qtor/scalars.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <mutex>
#include <tuple>
#include <string>
#include <vector>

namespace qtor {

enum class Generator { E, F, PsiPlus, PsiMinus };

/// One term of e(z) or f(z): coeff * delta(support / z) |target>.
struct Transition {
  std::size_t target = 0;
  BinomialProduct coeff;
  /// Delta-function support including its power of u.
  Monomial support;
};

/// A Z-graded module with finite graded pieces and a diagonal psi action.
class GradedModule {
 public:
  virtual ~GradedModule() = default;

  virtual std::string name() const = 0;
  virtual const ParamSpec& params() const = 0;
  /// Zero outside the grading window.
  virtual std::size_t dimension(int d) const = 0;
  virtual std::string label(int d, std::size_t index) const = 0;
  /// e(z) from degree d to d+1.
  virtual std::vector<Transition> raise(int d, std::size_t index) const = 0;
  /// f(z) from degree d to d-1.
  virtual std::vector<Transition> lower(int d, std::size_t index) const = 0;
  /// Eigenvalue in x = u/z, with K already specialized if the level is resonant.
  virtual PsiEigenvalue psi(int d, std::size_t index) const = 0;
};

/// Sparse exact matrix of one mode between graded pieces; entries keyed by (row, column).
struct ModeOperator {
  int source_degree = 0;
  int target_degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries;

  static ModeOperator zero(int source, int target, std::size_t rows, std::size_t cols);

  Rational at(std::size_t row, std::size_t col) const;
  void add(std::size_t row, std::size_t col, const Rational& v);
  bool is_zero() const { return entries.empty(); }
  /// this += c * other.
  ModeOperator& axpy(const Rational& c, const ModeOperator& other);
};

/// a after b.
ModeOperator compose(const ModeOperator& a, const ModeOperator& b);

/// Caches evaluated coefficients, psi modes and mode matrices of a module.
class EvaluatedModule {
 public:
  explicit EvaluatedModule(const GradedModule& module) : module_(module) {}

  const GradedModule& module() const { return module_; }
  const ParamSpec& params() const { return module_.params(); }
  std::size_t dimension(int d) const { return module_.dimension(d); }

  /// Generator mode r acting on degree d.
  const ModeOperator& mode(Generator gen, int r, int d);
  const PsiModes& psi_modes_at(int d, std::size_t index, int order);

  /// Test hook: multiplies the first e coefficient out of (d, index) by factor.
  void inject_fault(int d, std::size_t index, Rational factor);

 private:
  struct Evaluated {
    std::size_t target;
    Rational coeff;
    Rational support;
  };
  const std::vector<std::vector<Evaluated>>& transitions(bool raise, int d);

  const GradedModule& module_;
  std::map<std::pair<bool, int>, std::vector<std::vector<Evaluated>>> transitions_;
  std::map<std::pair<int, std::size_t>, PsiModes> psi_;
  std::map<std::tuple<int, int, int>, ModeOperator> modes_;
  std::optional<std::tuple<int, std::size_t, Rational>> fault_;
  std::recursive_mutex mutex_;
};

ModeOperator mode_matrix(const GradedModule& module, Generator gen, int r, int d);

}  // namespace qtor
