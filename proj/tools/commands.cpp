#include "commands.hpp"

#include "qtor/characters.hpp"
#include "qtor/fock.hpp"
#include "qtor/gz.hpp"
#include "qtor/macmahon.hpp"
#include "qtor/plane_partition.hpp"
#include "qtor/psi.hpp"
#include "qtor/verify.hpp"

#include <memory>
#include <sstream>

namespace qtor::cli {

using nlohmann::json;

namespace {

json series_json(const IntegerSeries& s) {
  json out = json::array();
  for (const auto& c : s.coefficients()) out.push_back(c.get_str());
  return out;
}

json report_json(const RelationReport& r) {
  json j{{"relation", r.relation}, {"module", r.module}, {"degree", r.degree}, {"modes", r.modes},
         {"passed", r.passed}};
  if (!r.passed) j["counterexample"] = r.counterexample;
  return j;
}

ParamSpec params_for(const RunConfig& cfg) {
  auto level = parse_level(cfg.level);
  if (level) return make_resonant_params(cfg.seed, level->first, level->second, cfg.bound);
  return make_generic_params(cfg.seed, cfg.bound);
}

Partition partition_arg(const std::string& text) {
  std::vector<int> parts = parse_ints(text);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 0 || (i && parts[i] > parts[i - 1])) throw UsageError("not a partition: " + text);
  return Partition(parts);
}

Rational rational_arg(const std::string& text) {
  try {
    Rational r(text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw UsageError("bad rational: " + text);
  }
}

}  // namespace

std::optional<std::pair<int, int>> parse_level(const std::string& text) {
  if (text == "generic" || text.empty()) return std::nullopt;
  return parse_pair(text);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(item, &used));
    } catch (const std::exception&) {
      throw UsageError("bad integer: " + item);
    }
    if (used != item.size()) throw UsageError("bad integer: " + item);
  }
  return out;
}

std::pair<int, int> parse_pair(const std::string& text) {
  auto v = parse_ints(text);
  if (v.size() != 2) throw UsageError("expected two integers 'a,b': " + text);
  return {v[0], v[1]};
}

std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) throw UsageError("expected a range 'a..b': " + text);
  try {
    int a = std::stoi(text.substr(0, pos));
    int b = std::stoi(text.substr(pos + 2));
    if (a > b) throw UsageError("empty range: " + text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("expected a range 'a..b': " + text);
  }
}

// ---------------------------------------------------------------------------

Outcome cmd_enumerate(const RunConfig& cfg) {
  BoundaryTriple b = BoundaryTriple::parse(cfg.boundary);
  std::optional<Box> forbidden;
  if (!cfg.forbidden_from_resonance.empty()) {
    auto [m, n] = parse_pair(cfg.forbidden_from_resonance);
    forbidden = resonance_box(b, m, n);
  }
  json out{{"command", "enumerate"}, {"boundary", b.to_string()}};
  if (forbidden) out["forbidden"] = forbidden->to_string();
  if (cfg.counts) {
    json counts = json::array();
    for (auto c : count_pp(b, cfg.max_degree, forbidden)) counts.push_back(c);
    out["counts"] = counts;
    return {out, 0};
  }
  json states = json::array();
  for (int d = 0; d <= cfg.max_degree; ++d)
    for (const auto& mu : enumerate_pp(b, d, forbidden)) states.push_back({{"degree", d}, {"state", mu.to_string()}});
  out["states"] = states;
  return {out, 0};
}

Outcome cmd_verify(const RunConfig& cfg) {
  ParamSpec p = params_for(cfg);
  std::unique_ptr<GradedModule> mod;
  if (cfg.module == "vector") {
    mod = std::make_unique<VectorModule>(p);
  } else if (cfg.module == "fock") {
    mod = std::make_unique<FockModule>(p);
  } else if (cfg.module == "macmahon") {
    mod = std::make_unique<MacmahonModule>(BoundaryTriple::parse(cfg.boundary), p, cfg.quotient);
  } else {
    throw UsageError("unknown module '" + cfg.module + "' (vector, fock, macmahon)");
  }
  EvaluatedModule ev(*mod);
  if (cfg.fault) ev.inject_fault(cfg.fault->first, cfg.fault->second, Rational(2));
  SuiteOptions opt;
  opt.min_degree = cfg.min_degree;
  opt.max_degree = cfg.max_degree;
  std::tie(opt.mode_min, opt.mode_max) = parse_range(cfg.modes);
  auto reports = run_relation_suite(ev, opt);
  json failures = json::array();
  for (const auto& r : reports)
    if (!r.passed) failures.push_back(report_json(r));
  bool ok = all_passed(reports);
  json out{{"command", "verify"},  {"module", mod->name()},   {"params", p.describe()},
           {"checks", reports.size()}, {"passed", ok}, {"failures", failures}};
  return {out, ok ? 0 : 1};
}

Outcome cmd_psi(const RunConfig& cfg) {
  BoundaryTriple b = BoundaryTriple::parse(cfg.boundary);
  PlanePartition omega(b);
  PsiEigenvalue psi = psi_shell(omega);
  auto level = parse_level(cfg.level);
  if (level) psi = psi.at_resonance(level->first, level->second);
  json factors = json::array();
  for (const auto& [t, e] : psi.triples()) factors.push_back({{"triple", to_string(t)}, {"order", e}});
  json out{{"command", "psi"}, {"boundary", b.to_string()}, {"psi", psi.to_string()}, {"factors", factors},
           {"k_factor", psi.has_k_factor()}};
  ParamSpec p = params_for(cfg);
  PsiModes modes = psi_modes(psi, p, cfg.order);
  json plus = json::array(), minus = json::array();
  for (const auto& v : modes.plus) plus.push_back(to_string(v));
  for (const auto& v : modes.minus) minus.push_back(to_string(v));
  out["params"] = p.describe();
  out["plus"] = plus;
  out["minus"] = minus;
  return {out, 0};
}

Outcome cmd_character(const RunConfig& cfg) {
  IntegerSeries s;
  json out{{"command", "character"}, {"series_kind", cfg.series}, {"order", cfg.order}};
  if (cfg.series == "macmahon") {
    s = macmahon_series(cfg.order);
  } else if (cfg.series == "chi") {
    s = chi(cfg.k, cfg.order);
    out["k"] = cfg.k;
  } else if (cfg.series == "chi-bar") {
    s = chi_bar(cfg.k, cfg.order);
    out["k"] = cfg.k;
  } else if (cfg.series == "theorem") {
    auto alpha = parse_ints(cfg.alpha);
    if (static_cast<int>(alpha.size()) != cfg.n) throw UsageError("--alpha needs exactly n entries");
    s = theorem_character(alpha, cfg.order);
    IntegerSeries h = hook_character(alpha, cfg.order);
    out["p_alpha"] = p_alpha(alpha);
    out["hook_patterns"] = series_json(h);
    out["agrees"] = h == s;
  } else if (cfg.series == "module") {
    s = module_character(BoundaryTriple::parse(cfg.boundary), parse_level(cfg.level), cfg.order);
    out["boundary"] = cfg.boundary;
    out["level"] = cfg.level;
  } else {
    throw UsageError("unknown series '" + cfg.series + "' (macmahon, chi, chi-bar, theorem, module)");
  }
  out["series"] = series_json(s);
  return {out, out.value("agrees", true) ? 0 : 1};
}

Outcome cmd_conjecture(const RunConfig& cfg) {
  IntegerSeries formula;
  std::pair<int, int> level;
  if (cfg.id == 1) {
    formula = conjecture1(cfg.m, cfg.order);
    level = {1, cfg.m};
  } else if (cfg.id == 2) {
    formula = conjecture2(cfg.n, cfg.m, cfg.order);
    level = {cfg.n, cfg.m};
  } else {
    throw UsageError("--id must be 1 or 2");
  }
  IntegerSeries counted = module_character(BoundaryTriple{}, level, cfg.order);
  auto diff = formula.first_difference(counted);
  json out{{"command", "conjecture"},
           {"id", cfg.id},
           {"level", std::to_string(level.first) + "," + std::to_string(level.second)},
           {"formula", series_json(formula)},
           {"enumerated", series_json(counted)},
           {"agrees", !diff}};
  if (diff) out["first_difference"] = *diff;
  return {out, diff ? 1 : 0};
}

Outcome cmd_gz(const RunConfig& cfg) {
  Partition alpha = partition_arg(cfg.alpha);
  Partition gamma = cfg.gamma.empty() ? Partition(std::vector<int>(static_cast<std::size_t>(cfg.n), cfg.c))
                                      : partition_arg(cfg.gamma);
  GZCheckOptions opt;
  opt.window = cfg.window;
  opt.max_deviation = cfg.max_degree;
  RelationReport rep = check_glinf_relations(cfg.n, alpha, gamma, opt);
  GZPattern lowest(cfg.n, alpha, gamma);
  json weights = json::object();
  for (int a = -cfg.window; a <= cfg.window + 1; ++a) weights[std::to_string(a)] = gz_diag(lowest, a).get_si();
  json counts = json::array();
  for (auto c : count_gz(cfg.n, alpha, gamma, cfg.max_degree)) counts.push_back(c);
  json out{{"command", "gz"},     {"n", cfg.n},          {"alpha", alpha.to_string()}, {"gamma", gamma.to_string()},
           {"relations", report_json(rep)}, {"lowest_weight", weights}, {"counts", counts}};
  return {out, rep.passed ? 0 : 1};
}

Outcome cmd_limit(const RunConfig& cfg) {
  BoundaryTriple b = BoundaryTriple::parse(cfg.boundary);
  LimitReport rep = limit_coefficients(b, cfg.n, cfg.max_degree, rational_arg(cfg.q2), rational_arg(cfg.u));
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json j{{"op", e.raising ? "e" : "f"}, {"source", e.source}, {"target", e.target}, {"order", e.limit.order}};
    if (e.limit.order == 0) j["limit"] = to_string(e.limit.value);
    entries.push_back(j);
  }
  json theta = json::object();
  for (const auto& [i, t] : rep.theta) theta[std::to_string(i)] = t;
  json expected = json::object();
  for (const auto& [i, t] : theta_from_boundary(b.alpha, b.gamma, -cfg.n, cfg.window))
    expected[std::to_string(i)] = t.get_si();
  json out{{"command", "limit"}, {"n", cfg.n},         {"max_degree", cfg.max_degree}, {"all_finite", rep.all_finite},
           {"entries", entries}, {"theta", theta}, {"theta_from_boundary", expected}};
  return {out, rep.all_finite ? 0 : 1};
}

Outcome cmd_tensor(const RunConfig& cfg) {
  BoundaryTriple b = BoundaryTriple::parse(cfg.boundary);
  auto v = parse_ints(cfg.abc);
  if (v.size() != 3) throw UsageError("--abc needs three integers");
  FactorizationReport rep = tensor_factorization_check(b, v[0], v[1], v[2], cfg.order);
  json out{{"command", "tensor"}, {"boundary", b.to_string()}, {"splits", rep.splits}};
  if (!rep.splits) return {out, 1};
  json factors = json::array();
  for (const auto& f : rep.factors) factors.push_back(series_json(f));
  out["level"] = std::to_string(rep.m) + "," + std::to_string(rep.n);
  out["module"] = series_json(rep.module);
  out["product"] = series_json(rep.product);
  out["factors"] = factors;
  out["agrees"] = rep.agrees();
  if (rep.first_difference) out["first_difference"] = *rep.first_difference;
  return {out, rep.agrees() ? 0 : 1};
}

// ---------------------------------------------------------------------------

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
    return s;
  }
  return v.dump();
}

void text_lines(const json& v, const std::string& prefix, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) text_lines(x, prefix.empty() ? k : prefix + "." + k, os);
  } else if (v.is_array() && !v.empty() && v[0].is_object()) {
    for (std::size_t i = 0; i < v.size(); ++i) text_lines(v[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string render(const json& result, const std::string& format) {
  if (format == "json") return result.dump(2) + "\n";
  std::ostringstream os;
  if (format == "text") {
    text_lines(result, "", os);
    return os.str();
  }
  if (format == "csv") {
    for (const char* key : {"series", "counts"}) {
      if (!result.contains(key)) continue;
      os << "degree,value\n";
      const auto& arr = result[key];
      for (std::size_t d = 0; d < arr.size(); ++d) os << d << "," << scalar_text(arr[d]) << "\n";
      return os.str();
    }
    os << "key,value\n";
    for (const auto& [k, v] : result.items())
      if (!v.is_object() && !(v.is_array() && !v.empty() && v[0].is_object())) os << k << ",\"" << scalar_text(v) << "\"\n";
    return os.str();
  }
  throw UsageError("unknown format '" + format + "' (json, csv, text)");
}

}  // namespace qtor::cli
