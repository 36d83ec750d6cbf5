// mu2forge: command-line front end.
// Exit codes: 0 success, 1 Distinct / NoCertificate / failed criterion,
// 2 input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "mu2forge/acceptance.hpp"
#include "mu2forge/cps.hpp"
#include "mu2forge/encodings.hpp"
#include "mu2forge/focality.hpp"
#include "mu2forge/free_theorems.hpp"
#include "mu2forge/inverse_cps.hpp"
#include "mu2forge/mu_theory.hpp"
#include "mu2forge/normalizer.hpp"
#include "mu2forge/syntax.hpp"

using namespace mu2forge;

namespace {

struct Options {
  std::vector<std::string> vars, names, tvars, params;
  std::string mode = "plain";
  std::string theory = "p";
  std::string golden_dir;
  std::uint64_t seed = AcceptanceConfig{}.seed;
  bool trace = false;
  bool ascii = false;
  bool raw = false;
  bool json = false;
  std::string at;
  std::vector<std::string> args;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PrintStyle style(const Options& o) { return o.ascii ? PrintStyle::Ascii : PrintStyle::Unicode; }

Mode mode_of(const Options& o) {
  if (o.mode == "plain") return Mode::Plain;
  if (o.mode == "parametric") return Mode::Parametric;
  throw InputError("--mode must be plain or parametric");
}

Theory theory_of(const Options& o) {
  if (o.theory == "beta-eta") return Theory::BetaEta;
  if (o.theory == "p") return Theory::LambdaMu2P;
  throw InputError("--theory must be beta-eta or p");
}

// "x:t" -> (x, t)
std::pair<std::string, std::string> split_binding(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0) throw InputError("expected NAME:TYPE, got '" + s + "'");
  return {s.substr(0, colon), s.substr(colon + 1)};
}

Context mu_context(const std::vector<std::string>& entries) {
  Context out;
  for (const auto& e : entries) {
    auto [x, t] = split_binding(e);
    out.emplace_back(x, parse_mu_type(t));
  }
  return out;
}

TargetContext target_context(const Options& o) {
  TargetContext ctx = cps_context(mu_context(o.vars), mu_context(o.names));
  for (const auto& e : o.tvars) {
    auto [x, t] = split_binding(e);
    ctx.emplace_back(x, parse_target_type(t));
  }
  return ctx;
}

std::string show_context(const Context& c, PrintStyle st) {
  std::string out;
  for (const auto& [x, t] : c) out += (out.empty() ? "" : ", ") + x + ":" + to_string(t, st);
  return out;
}

void print_trace(const Trace& trace) {
  for (const auto& step : trace) std::cout << "  " << format_step(step) << "\n";
}

std::string show_inverted(const Inverted& inv, PrintStyle st) {
  std::string text = to_string(inv.term, st);
  if (inv.kind != CanonicalForm::Kind::Continuation) return text;
  const std::string hole = kHole, box = st == PrintStyle::Ascii ? "[ ]" : "□";
  for (auto p = text.find(hole); p != std::string::npos; p = text.find(hole, p + box.size()))
    text.replace(p, hole.size(), box);
  return text + "    (hole : " + to_string(*inv.hole_type, st) + ")";
}

// ---------------------------------------------------------------------------

int cmd_typecheck(const Options& o) {
  Context gamma = mu_context(o.vars), delta = mu_context(o.names);
  MuTerm m = parse_open_mu_term(o.args.at(0), gamma, delta);
  MuType t = typecheck_mu(gamma, delta, m);
  if (!gamma.empty() || !delta.empty())
    std::cout << show_context(gamma, style(o)) << " | " << show_context(delta, style(o)) << " ⊢ ";
  std::cout << to_string(m, style(o)) << " : " << to_string(t, style(o)) << "\n";
  return 0;
}

int cmd_cps(const Options& o) {
  Context gamma = mu_context(o.vars), delta = mu_context(o.names);
  MuTerm m = parse_open_mu_term(o.args.at(0), gamma, delta);
  MuType t = typecheck_mu(gamma, delta, m);
  TargetContext ctx = cps_context(gamma, delta);
  TargetTerm image = cps_term(gamma, delta, m);
  if (o.raw) {
    std::cout << to_string(image, style(o)) << "\n";
    return 0;
  }
  CanonicalForm f = canonicalize(ctx, image, TargetType::neg(cps_type(t)), mode_of(o));
  std::cout << to_string(f.term, style(o)) << "\n";
  if (o.trace) {
    std::cout << "trace (" << f.trace.size() << " steps):\n";
    print_trace(f.trace);
  }
  return 0;
}

int cmd_uncps(const Options& o) {
  TargetContext ctx = target_context(o);
  TargetTerm p = parse_target_term(o.args.at(0), ctx);
  Mode mode = mode_of(o);
  TargetType t = typecheck_target(ctx, p, mode);
  CanonicalForm f = canonicalize(ctx, p, t, mode);
  Inverted inv = invert(ctx, f, mode);
  std::cout << show_inverted(inv, style(o)) << "\n";
  if (o.trace) {
    std::cout << kind_name(f.kind) << ", trace (" << f.trace.size() << " steps):\n";
    print_trace(f.trace);
  }
  return 0;
}

int cmd_normalize(const Options& o) {
  TargetContext ctx = target_context(o);
  TargetTerm p = parse_target_term(o.args.at(0), ctx);
  Mode mode = mode_of(o);
  TargetType t = typecheck_target(ctx, p, mode);
  CanonicalForm f = canonicalize(ctx, p, t, mode);
  std::cout << to_string(f.term, style(o)) << " : " << to_string(f.type, style(o)) << "\n";
  std::cout << kind_name(f.kind) << "\n";
  if (o.trace) {
    std::cout << "trace (" << f.trace.size() << " steps):\n";
    print_trace(f.trace);
  }
  return 0;
}

int cmd_eq(const Options& o) {
  Context gamma = mu_context(o.vars), delta = mu_context(o.names);
  MuTerm lhs = parse_open_mu_term(o.args.at(0), gamma, delta);
  MuType t = typecheck_mu(gamma, delta, lhs);
  MuTerm rhs = parse_open_mu_term(o.args.at(1), gamma, delta, t);
  Theory th = theory_of(o);
  EqVerdict v = eq_mu(gamma, delta, lhs, rhs, th);
  std::cout << (v.equal ? "Equal" : "Distinct") << " under " << theory_name(th) << "\n";
  if (o.trace || !v.equal) {
    for (const auto* side : {&v.left, &v.right}) {
      if (!*side) continue;
      std::cout << (side == &v.left ? "left:  " : "right: ") << to_string((*side)->term, style(o)) << "\n";
      if (o.trace) print_trace((*side)->trace);
    }
  }
  return v.equal ? 0 : 1;
}

int cmd_focal_check(const Options& o) {
  Context gamma = mu_context(o.vars), delta = mu_context(o.names);
  MuTerm f = parse_open_mu_term(o.args.at(0), gamma, delta);
  Theory th = theory_of(o);
  FocalCheck r = check_focal(gamma, delta, f, th);
  if (!r) {
    std::cout << "NoCertificate: " << r.reason << "\n";
    return 1;
  }
  const FocalityCertificate& c = *r.certificate;
  std::cout << "focal under " << theory_name(th) << ": " << to_string(c.dom, style(o)) << " → "
            << to_string(c.cod, style(o)) << "\n";
  std::cout << "[[f " << c.arg << "]] = λ" << c.cont << ". " << c.arg << " g  with  g = "
            << to_string(c.transformer, style(o)) << "\n";
  if (o.trace) {
    std::cout << "evidence: " << to_string(c.evidence.term, style(o)) << "\n";
    print_trace(c.evidence.trace);
  }
  return 0;
}

int cmd_free_theorem(const Options& o) {
  MuType sigma = parse_mu_type(o.args.at(0));
  RelFormula f = free_theorem(sigma, o.params);
  std::cout << (o.json ? to_json(f) : to_string(f)) << "\n";
  if (o.at.empty()) return 0;
  Context gamma = mu_context(o.vars), delta = mu_context(o.names);
  MuTerm map = parse_open_mu_term(o.at, gamma, delta);
  GraphInstance inst = instantiate_graph(f, graph_map(gamma, delta, map, theory_of(o)));
  bool all = true;
  for (const auto& eq : inst.equations) {
    DischargeResult d = discharge(eq, theory_of(o));
    all = all && d.status == Discharge::Confirmed;
    std::cout << to_string(eq) << "\n  " << d.note << "\n";
  }
  for (const auto& r : inst.residual) std::cout << "residual: " << to_string(r) << "\n";
  return all && inst.residual.empty() ? 0 : 1;
}

int cmd_catalog(const Options& o) {
  for (const auto& e : catalog()) {
    std::cout << e.name << " : ";
    if (!e.gamma.empty() || !e.delta.empty())
      std::cout << "[" << show_context(e.gamma, style(o)) << " | " << show_context(e.delta, style(o)) << "] ";
    std::cout << to_string(e.type, style(o)) << "\n    " << to_string(e.term, style(o)) << "\n    " << e.topic
              << ": " << e.description << "\n";
  }
  return 0;
}

int cmd_suite(const Options& o) {
  AcceptanceConfig cfg;
  cfg.seed = o.seed;
  cfg.golden_dir = o.golden_dir;
  int failed = 0;
  for (const auto& r : run_acceptance(cfg)) {
    std::cout << format_line(r) << std::endl;
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel for the second-order lambda-mu calculus and its CPS translation"};
  app.require_subcommand(1);
  Options o;

  // Repeatable options take one value per flag, so they never swallow positionals.
  auto repeated = [](CLI::Option* opt) {
    opt->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  };
  auto common = [&](CLI::App* sub) {
    repeated(sub->add_option("--var", o.vars, "term variable x:t (lambda-mu type)"));
    repeated(sub->add_option("--name", o.names, "name a:t"));
    sub->add_flag("--ascii", o.ascii, "print ASCII instead of UTF-8");
    sub->add_flag("--trace", o.trace, "emit rewrite traces");
  };
  auto with_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "plain|parametric")->check(CLI::IsMember({"plain", "parametric"}));
  };
  auto with_theory = [&](CLI::App* sub) {
    sub->add_option("--theory", o.theory, "beta-eta|p")->check(CLI::IsMember({"beta-eta", "p"}));
  };

  struct Sub {
    const char* name;
    const char* help;
    int nargs;
    int (*run)(const Options&);
  };
  const Sub subs[] = {
      {"typecheck", "type a lambda-mu term", 1, cmd_typecheck},
      {"cps", "CPS image of a term, canonicalized unless --raw", 1, cmd_cps},
      {"uncps", "invert a canonical target term", 1, cmd_uncps},
      {"normalize", "canonical form of a target term", 1, cmd_normalize},
      {"eq", "decide M = N", 2, cmd_eq},
      {"focal-check", "extract a focality certificate", 1, cmd_focal_check},
      {"free-theorem", "free theorem of a closed type", 1, cmd_free_theorem},
      {"catalog", "list the built-in terms", 0, cmd_catalog},
      {"suite", "run the acceptance criteria", 0, cmd_suite},
  };
  int (*chosen)(const Options&) = nullptr;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    if (s.nargs > 0) sub->add_option("args", o.args, "input")->required()->expected(s.nargs);
    std::string n = s.name;
    if (n == "cps") sub->add_flag("--raw", o.raw, "print the raw image");
    if (n == "cps" || n == "uncps" || n == "normalize") with_mode(sub);
    if (n == "uncps" || n == "normalize") repeated(sub->add_option("--tvar", o.tvars, "target variable x:T"));
    if (n == "eq" || n == "focal-check" || n == "free-theorem") with_theory(sub);
    if (n == "free-theorem") {
      repeated(sub->add_option("--param", o.params, "free type variable related by identity"));
      sub->add_flag("--json", o.json, "structured export");
      sub->add_option("--at", o.at, "instantiate the first relation quantifier at this map's graph");
    }
    if (n == "suite") {
      sub->add_option("--seed", o.seed, "generator seed");
      sub->add_option("--golden-dir", o.golden_dir, "golden files (default: $MU2FORGE_GOLDEN or the source tree)");
    }
    sub->callback([&chosen, run = s.run] { chosen = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return chosen(o);
  } catch (const KernelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
