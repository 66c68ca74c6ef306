#include "commands.hpp"

#include "qtor/scalars.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using namespace qtor::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--boundary", cfg.boundary, "Boundary triple, e.g. \"(1);();(2,1)\"");
  sub->add_option("--level", cfg.level, "generic or m,n for K = q2^m q3^n");
  sub->add_option("--seed", cfg.seed, "Seed for the random generic parameters");
  sub->add_option("--bound", cfg.bound, "Genericity bound on exponents");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Macmahon modules of the quantum toroidal gl1 algebra"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";
  std::string output;
  std::string fault;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", output, "Write to this file instead of stdout");

  std::function<Outcome(const RunConfig&)> run;

  auto* en = app.add_subcommand("enumerate", "List plane partitions or count them by degree");
  add_common(en, cfg);
  en->add_option("--max-degree", cfg.max_degree);
  en->add_flag("--counts", cfg.counts, "Only print counts per degree");
  en->add_option("--forbidden-from-resonance", cfg.forbidden_from_resonance, "m,n: drop states containing the resonance box");
  en->callback([&] { run = cmd_enumerate; });

  auto* ve = app.add_subcommand("verify", "Check the defining relations as exact matrix identities");
  add_common(ve, cfg);
  ve->add_option("--module", cfg.module, "vector, fock or macmahon");
  ve->add_flag("--quotient", cfg.quotient, "Use the quotient at a resonant level");
  ve->add_option("--min-degree", cfg.min_degree);
  ve->add_option("--max-degree", cfg.max_degree);
  ve->add_option("--modes", cfg.modes, "Mode window a..b");
  ve->add_option("--inject-fault", fault)->group("");
  ve->callback([&] { run = cmd_verify; });

  auto* ps = app.add_subcommand("psi", "psi eigenvalue of the minimal state");
  add_common(ps, cfg);
  ps->add_option("--order", cfg.order, "Number of modes to expand");
  ps->callback([&] { run = cmd_psi; });

  auto* ch = app.add_subcommand("character", "q-series characters");
  add_common(ch, cfg);
  ch->add_option("--series", cfg.series, "macmahon, chi, chi-bar, theorem or module");
  ch->add_flag_callback("--theorem", [&] { cfg.series = "theorem"; }, "Same as --series theorem");
  ch->add_option("--k", cfg.k);
  ch->add_option("--n", cfg.n);
  ch->add_option("--alpha", cfg.alpha, "Comma separated integers");
  ch->add_option("--order", cfg.order);
  ch->callback([&] { run = cmd_character; });

  auto* co = app.add_subcommand("conjecture", "Compare a conjectured character with enumeration");
  co->add_option("--id", cfg.id, "1 or 2")->required();
  co->add_option("--m", cfg.m);
  co->add_option("--n", cfg.n);
  co->add_option("--order", cfg.order);
  co->callback([&] { run = cmd_conjecture; });

  auto* gz = app.add_subcommand("gz", "Hook Gelfand-Zetlin patterns and gl_infinity relations");
  gz->add_option("--n", cfg.n, "Hook width");
  gz->add_option("--alpha", cfg.alpha);
  gz->add_option("--gamma", cfg.gamma, "Defaults to c repeated n times");
  gz->add_option("--c", cfg.c);
  gz->add_option("--window", cfg.window);
  gz->add_option("--max-degree", cfg.max_degree, "Deviation bound");
  gz->callback([&] { run = cmd_gz; });

  auto* li = app.add_subcommand("limit", "Matrix coefficients as q1 -> 1 with K = (q2 q3)^n");
  li->add_option("--boundary", cfg.boundary);
  li->add_option("--n", cfg.n);
  li->add_option("--max-degree", cfg.max_degree);
  li->add_option("--q2", cfg.q2);
  li->add_option("--u", cfg.u);
  li->add_option("--window", cfg.window);
  li->callback([&] { run = cmd_limit; });

  auto* te = app.add_subcommand("tensor", "Character check of a split quotient against its factors");
  te->add_option("--boundary", cfg.boundary);
  te->add_option("--abc", cfg.abc, "a,b,c")->required();
  te->add_option("--order", cfg.order);
  te->callback([&] { run = cmd_tensor; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!fault.empty()) {
      auto [d, i] = parse_pair(fault);
      cfg.fault = std::make_pair(d, static_cast<std::size_t>(i));
    }
    Outcome out = run(cfg);
    std::string text = render(out.result, format);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(output);
      if (!f) throw UsageError("cannot write " + output);
      f << text;
    }
    return out.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qtor::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
}
