#include "qtor/verify.hpp"

#include <array>
#include <map>
#include <sstream>

namespace qtor {

namespace {

struct GTerm {
  int p;
  int t;
  Rational c;
};

// g(z,w) = (z - q1 w)(z - q2 w)(z - q3 w) = sum c z^p w^t.
std::array<GTerm, 4> g_terms(const ParamSpec& par) {
  Rational q3 = par.q3();
  Rational s1 = par.q1 + par.q2 + q3;
  Rational s2 = par.q1 * par.q2 + par.q2 * q3 + par.q1 * q3;
  return {GTerm{3, 0, Rational(1)}, GTerm{2, 1, -s1}, GTerm{1, 2, s2}, GTerm{0, 3, Rational(-1)}};
}

std::string describe(const EvaluatedModule& mod) {
  return mod.module().name() + " " + mod.params().describe();
}

std::string modes_text(int a, int b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

RelationReport finish(EvaluatedModule& mod, std::string relation, int d, std::string modes,
                      const ModeOperator& residual) {
  RelationReport r{std::move(relation), describe(mod), d, std::move(modes), residual.is_zero(), {}};
  if (!r.passed) {
    const auto& [key, v] = *residual.entries.begin();
    std::ostringstream os;
    os << "row " << mod.module().label(residual.target_degree, key.first) << " col "
       << mod.module().label(residual.source_degree, key.second) << " residual " << v;
    r.counterexample = os.str();
  }
  return r;
}

const char* gen_name(Generator g) {
  switch (g) {
    case Generator::E: return "e";
    case Generator::F: return "f";
    case Generator::PsiPlus: return "psi+";
    case Generator::PsiMinus: return "psi-";
  }
  return "?";
}

}  // namespace

RelationReport check_ef(EvaluatedModule& mod, int d, int r, int s) {
  const ParamSpec& p = mod.params();
  std::size_t n = mod.dimension(d);
  ModeOperator res = ModeOperator::zero(d, d, n, n);
  if (mod.dimension(d - 1)) res.axpy(1, compose(mod.mode(Generator::E, r, d - 1), mod.mode(Generator::F, s, d)));
  if (mod.dimension(d + 1)) res.axpy(-1, compose(mod.mode(Generator::F, s, d + 1), mod.mode(Generator::E, r, d)));
  Rational g11 = (1 - p.q1) * (1 - p.q2) * (1 - p.q3());
  res.axpy(-1 / g11, mod.mode(Generator::PsiPlus, r + s, d));
  res.axpy(1 / g11, mod.mode(Generator::PsiMinus, r + s, d));
  return finish(mod, "rel3 [e,f]", d, modes_text(r, s), res);
}

RelationReport check_quadratic(EvaluatedModule& mod, Generator gen, int d, int a, int b) {
  if (gen != Generator::E && gen != Generator::F) throw PreconditionError("quadratic relation needs e or f");
  int step = gen == Generator::E ? 1 : -1;
  int mid = d + step, top = d + 2 * step;
  ModeOperator res = ModeOperator::zero(d, top, mod.dimension(top), mod.dimension(d));
  if (res.rows && res.cols && mod.dimension(mid)) {
    auto pair = [&](int x, int y) { return compose(mod.mode(gen, x, mid), mod.mode(gen, y, d)); };
    for (const auto& g : g_terms(mod.params())) {
      if (gen == Generator::E) {
        res.axpy(g.c, pair(a + g.p, b + g.t));
        res.axpy(g.c, pair(b + g.p, a + g.t));
      } else {
        res.axpy(g.c, pair(a + g.t, b + g.p));
        res.axpy(g.c, pair(b + g.t, a + g.p));
      }
    }
  }
  return finish(mod, std::string("rel4 ") + gen_name(gen) + gen_name(gen), d, modes_text(a, b), res);
}

RelationReport check_psi_e(EvaluatedModule& mod, Generator psi, Generator gen, int d, int a, int b) {
  if (psi != Generator::PsiPlus && psi != Generator::PsiMinus) throw PreconditionError("psi must be psi+ or psi-");
  if (gen != Generator::E && gen != Generator::F) throw PreconditionError("second generator must be e or f");
  int target = gen == Generator::E ? d + 1 : d - 1;
  ModeOperator res = ModeOperator::zero(d, target, mod.dimension(target), mod.dimension(d));
  if (res.rows && res.cols) {
    for (const auto& g : g_terms(mod.params())) {
      // e: sum g_pt psi_{a+p} e_{b+t} + g_pt e_{b+p} psi_{a+t}
      // f: sum g_pt psi_{a+t} f_{b+p} + g_pt f_{b+t} psi_{a+p}
      int x1 = gen == Generator::E ? a + g.p : a + g.t;
      int y1 = gen == Generator::E ? b + g.t : b + g.p;
      int y2 = gen == Generator::E ? b + g.p : b + g.t;
      int x2 = gen == Generator::E ? a + g.t : a + g.p;
      res.axpy(g.c, compose(mod.mode(psi, x1, target), mod.mode(gen, y1, d)));
      res.axpy(g.c, compose(mod.mode(gen, y2, d), mod.mode(psi, x2, d)));
    }
  }
  return finish(mod, std::string("rel2 ") + gen_name(psi) + gen_name(gen), d, modes_text(a, b), res);
}

RelationReport check_psi_psi(EvaluatedModule& mod, int d, int r, int s) {
  std::size_t n = mod.dimension(d);
  ModeOperator res = ModeOperator::zero(d, d, n, n);
  for (Generator x : {Generator::PsiPlus, Generator::PsiMinus})
    for (Generator y : {Generator::PsiPlus, Generator::PsiMinus}) {
      res.axpy(1, compose(mod.mode(x, r, d), mod.mode(y, s, d)));
      res.axpy(-1, compose(mod.mode(y, s, d), mod.mode(x, r, d)));
    }
  return finish(mod, "rel1 psi psi", d, modes_text(r, s), res);
}

std::vector<RelationReport> check_serre(EvaluatedModule& mod, int d) {
  std::vector<RelationReport> out;
  for (Generator gen : {Generator::E, Generator::F}) {
    int st = gen == Generator::E ? 1 : -1;
    ModeOperator res = ModeOperator::zero(d, d + 3 * st, mod.dimension(d + 3 * st), mod.dimension(d));
    if (res.rows && res.cols && mod.dimension(d + st) && mod.dimension(d + 2 * st)) {
      // inner(x) = [g1, g-1] from degree x to x + 2 st
      auto inner = [&](int x) {
        ModeOperator m = compose(mod.mode(gen, 1, x + st), mod.mode(gen, -1, x));
        m.axpy(-1, compose(mod.mode(gen, -1, x + st), mod.mode(gen, 1, x)));
        return m;
      };
      res.axpy(1, compose(mod.mode(gen, 0, d + 2 * st), inner(d)));
      res.axpy(-1, compose(inner(d + st), mod.mode(gen, 0, d)));
    }
    out.push_back(finish(mod, std::string("rel5 serre ") + gen_name(gen), d, "(0,1,-1)", res));
  }
  return out;
}

RelationReport check_tame(const GradedModule& mod, int d) {
  RelationReport r{"tame", mod.name() + " " + mod.params().describe(), d, "-", true, {}};
  std::map<PsiEigenvalue, std::size_t> seen;
  for (std::size_t i = 0; i < mod.dimension(d); ++i) {
    auto [it, inserted] = seen.emplace(mod.psi(d, i), i);
    if (!inserted) {
      r.passed = false;
      r.counterexample = mod.label(d, it->second) + " and " + mod.label(d, i) + " share " + it->first.to_string();
      break;
    }
  }
  return r;
}

std::vector<RelationReport> run_relation_suite(EvaluatedModule& mod, const SuiteOptions& opt) {
  std::vector<RelationReport> out;
  auto push = [&](RelationReport r) {
    bool ok = r.passed;
    out.push_back(std::move(r));
    return ok || !opt.stop_at_first_failure;
  };
  for (int d = opt.min_degree; d <= opt.max_degree; ++d) {
    if (mod.dimension(d) == 0) continue;
    for (int a = opt.mode_min; a <= opt.mode_max; ++a)
      for (int b = opt.mode_min; b <= opt.mode_max; ++b) {
        if (!push(check_psi_psi(mod, d, a, b))) return out;
        if (!push(check_ef(mod, d, a, b))) return out;
        for (Generator g : {Generator::E, Generator::F}) {
          if (!push(check_quadratic(mod, g, d, a, b))) return out;
          for (Generator psi : {Generator::PsiPlus, Generator::PsiMinus})
            if (!push(check_psi_e(mod, psi, g, d, a, b))) return out;
        }
      }
    for (auto& r : check_serre(mod, d))
      if (!push(std::move(r))) return out;
    if (!push(check_tame(mod.module(), d))) return out;
  }
  return out;
}

bool all_passed(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace qtor
