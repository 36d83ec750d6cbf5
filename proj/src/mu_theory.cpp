#include "mu2forge/mu_theory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>

namespace mu2forge {

namespace {
constexpr const char* kHoleVar = "%hole";
}  // namespace

std::string_view theory_name(Theory t) { return t == Theory::BetaEta ? "beta-eta" : "p"; }

Mode mode_of(Theory t) { return t == Theory::BetaEta ? Mode::Plain : Mode::Parametric; }

EqVerdict eq_mu(const Context& gamma, const Context& delta, const MuTerm& lhs, const MuTerm& rhs, Theory theory) {
  MuType lt = typecheck_mu(gamma, delta, lhs);
  MuType rt = typecheck_mu(gamma, delta, rhs);
  if (lt != rt) throw KernelError(Errc::TypeMismatch, to_string(lt) + " vs " + to_string(rt));
  TargetContext ctx = cps_context(gamma, delta);
  return eq_target(ctx, cps_term(gamma, delta, lhs), cps_term(gamma, delta, rhs), mode_of(theory));
}

namespace {

MuType tv(const char* n) { return MuType::var(n); }
MuTerm v(const char* n) { return MuTerm::var(n); }
MuTerm app(MuTerm f, MuTerm a) { return MuTerm::app(std::move(f), std::move(a)); }
MuTerm abort_map(const MuType& t) { return MuTerm::lam("x", MuType::bottom(), MuTerm::tyapp(v("x"), t)); }

// A generic term of type ⊥ using the name `a` : `t`, via c : ¬¬t.
MuTerm generic_bottom(const std::string& a, const MuType& t) {
  return app(v("c"), MuTerm::lam("x", t, named(a, v("x"))));
}

// ∀X.X → s, the polymorphic type used by the type-application instances.
MuType poly() { return MuType::forall("X", MuType::arrow(tv("X"), tv("s"))); }

}  // namespace

std::vector<MuEquation> core_axiom_instances() {
  MuType s = tv("s"), t = tv("t"), u = tv("u");
  std::vector<MuEquation> out;
  {
    MuType g = MuType::arrow(s, MuType::arrow(s, t));
    MuTerm body = app(app(v("g"), v("x")), v("x"));
    out.push_back({"beta", {{"g", g}, {"n", s}}, {}, app(MuTerm::lam("x", s, body), v("n")),
                   app(app(v("g"), v("n")), v("n"))});
  }
  out.push_back({"eta", {{"m", MuType::arrow(s, t)}}, {}, MuTerm::lam("x", s, app(v("m"), v("x"))), v("m")});
  {
    MuType h = MuType::forall("Y", MuType::arrow(tv("Y"), tv("Y")));
    MuTerm body = MuTerm::lam("x", tv("X"), app(MuTerm::tyapp(v("h"), tv("X")), v("x")));
    out.push_back({"type-beta", {{"h", h}}, {}, MuTerm::tyapp(MuTerm::tylam("X", body), s),
                   MuTerm::lam("x", s, app(MuTerm::tyapp(v("h"), s), v("x")))});
    out.push_back({"type-eta", {{"h", h}}, {}, MuTerm::tylam("X", MuTerm::tyapp(v("h"), tv("X"))), v("h")});
  }
  {
    // μα.[β](μγ.[α](f (λy.[γ]y))) = μα.[α](f (λy.[β]y))
    MuType f = MuType::arrow(MuType::neg(t), s);
    MuTerm inner = MuTerm::mu("c", t, "a", app(v("f"), MuTerm::lam("y", t, named("c", v("y")))));
    out.push_back({"mu-rename", {{"f", f}}, {{"b", t}}, MuTerm::mu("a", s, "b", inner),
                   MuTerm::mu("a", s, "a", app(v("f"), MuTerm::lam("y", t, named("b", v("y")))))});
  }
  out.push_back({"mu-eta", {{"m", s}}, {}, MuTerm::mu("a", s, "a", v("m")), v("m")});
  {
    MuType st = MuType::arrow(s, t);
    MuType g = MuType::arrow(MuType::neg(st), st);
    MuTerm l = app(v("g"), MuTerm::lam("y", st, named("a", v("y"))));
    MuTerm lhs = app(MuTerm::mu("a", st, "a", l), v("n"));
    MuTerm l2 = mixed_subst(l, "a", MixedMode::app_arg(v("n")), "b");
    out.push_back({"mu-app", {{"g", g}, {"n", s}}, {}, lhs, MuTerm::mu("b", t, "b", app(l2, v("n")))});
  }
  {
    MuType p = poly();
    MuType g = MuType::arrow(MuType::neg(p), p);
    MuTerm l = app(v("g"), MuTerm::lam("y", p, named("a", v("y"))));
    MuTerm lhs = MuTerm::tyapp(MuTerm::mu("a", p, "a", l), u);
    MuTerm l2 = mixed_subst(l, "a", MixedMode::ty_arg(u), "b");
    out.push_back({"mu-type-app", {{"g", g}}, {}, lhs,
                   MuTerm::mu("b", MuType::arrow(u, s), "b", MuTerm::tyapp(l2, u))});
  }
  return out;
}

namespace {

MuEquation bold_app_equation(const char* label) {
  MuType s = tv("s"), t = tv("t"), st = MuType::arrow(s, t);
  MuTerm m = generic_bottom("a", st);
  MuTerm lhs = app(bold_mu("a", st, m), v("n"));
  MuTerm rhs = bold_mu("b", t, mixed_subst(m, "a", MixedMode::app_arg(v("n")), "b"));
  return {label, {{"c", MuType::neg(MuType::neg(st))}, {"n", s}}, {}, lhs, rhs};
}

MuEquation bold_tyapp_equation(const char* label) {
  MuType u = tv("u"), p = poly();
  MuTerm m = generic_bottom("a", p);
  MuTerm lhs = MuTerm::tyapp(bold_mu("a", p, m), u);
  MuTerm rhs = bold_mu("b", MuType::arrow(u, tv("s")), mixed_subst(m, "a", MixedMode::ty_arg(u), "b"));
  return {label, {{"c", MuType::neg(MuType::neg(p))}}, {}, lhs, rhs};
}

MuEquation bold_name_equation(const char* label) {
  MuType s = tv("s");
  MuTerm m = generic_bottom("a", s);
  return {label, {{"c", MuType::neg(MuType::neg(s))}}, {{"a2", s}}, named("a2", bold_mu("a", s, m)),
          rename_name(m, "a", "a2")};
}

}  // namespace

std::vector<MuEquation> named_term_equations() {
  std::vector<MuEquation> out;
  out.push_back(bold_app_equation("bold-mu-app"));
  out.push_back(bold_tyapp_equation("bold-mu-type-app"));
  out.push_back(bold_name_equation("name-bold-mu"));
  out.push_back({"name-bottom", {{"m", MuType::bottom()}}, {{"a", MuType::bottom()}}, named("a", v("m")), v("m")});
  return out;
}

MuEquation additional_axiom(int axiom, int presentation) {
  MuType s = tv("s"), t = tv("t"), u = tv("u"), bot = MuType::bottom();
  // Domain and codomain of the instantiation map, and its body on x.
  MuType dom = s, cod = s;
  MuTerm fx = v("x");
  Context gamma;
  Context delta;
  switch (axiom) {
    case 1:
      dom = MuType::arrow(s, t), cod = t;
      fx = app(v("x"), v("n"));
      gamma = {{"n", s}};
      break;
    case 2:
      dom = poly(), cod = MuType::arrow(u, s);
      fx = MuTerm::tyapp(v("x"), u);
      break;
    case 3:
      dom = s, cod = bot;
      fx = named("a", v("x"));
      delta = {{"a", s}};
      break;
    default: throw KernelError(Errc::ArityMismatch, "additional axiom " + std::to_string(axiom));
  }
  std::string label = "additional-" + std::to_string(axiom) + "." + std::to_string(presentation);
  switch (presentation) {
    case 1: {
      // f ∘ A_dom = A_cod as maps ⊥ → cod.
      MuTerm f = MuTerm::lam("x", dom, fx);
      MuTerm lhs = MuTerm::lam("y", bot, app(f, app(abort_map(dom), v("y"))));
      MuTerm rhs = MuTerm::lam("y", bot, app(abort_map(cod), v("y")));
      return {label, gamma, delta, lhs, rhs};
    }
    case 2: {
      gamma.emplace_back("m", bot);
      MuTerm lhs = subst_term(fx, "x", MuTerm::tyapp(v("m"), dom));
      MuTerm rhs = axiom == 3 ? v("m") : MuTerm::tyapp(v("m"), cod);
      return {label, gamma, delta, lhs, rhs};
    }
    case 3: {
      MuEquation e = axiom == 1 ? bold_app_equation("") : axiom == 2 ? bold_tyapp_equation("") : bold_name_equation("");
      e.label = label;
      return e;
    }
    default: throw KernelError(Errc::ArityMismatch, "presentation " + std::to_string(presentation));
  }
}

bool AdditionalAxiomReport::ok() const {
  for (const auto& c : checks)
    if (!c.equal_p || c.equal_beta_eta) return false;
  for (const auto& l : links)
    if (!l.holds) return false;
  return !checks.empty() && !links.empty();
}

namespace {

Context merge(Context a, const Context& b) {
  for (const auto& e : b)
    if (std::none_of(a.begin(), a.end(), [&](const auto& x) { return x.first == e.first; })) a.push_back(e);
  return a;
}

MuTerm plug(const MuTerm& around, const MuTerm& m) {
  std::function<MuTerm(const MuTerm&)> go = [&](const MuTerm& t) -> MuTerm {
    switch (t.kind()) {
      case MuTerm::Kind::Var: return t.name() == kHoleVar ? m : t;
      case MuTerm::Kind::Lam: return MuTerm::lam(t.name(), t.type(), go(t.body()));
      case MuTerm::Kind::App: return MuTerm::app(go(t.fn()), go(t.arg()));
      case MuTerm::Kind::TyLam: return MuTerm::tylam(t.name(), go(t.body()));
      case MuTerm::Kind::TyApp: return MuTerm::tyapp(go(t.fn()), t.type());
      case MuTerm::Kind::Mu: return MuTerm::mu(t.name(), t.type(), t.target(), go(t.body()));
    }
    return t;
  };
  return go(around);
}

bool chain_holds(const Context& g, const Context& d, const MuTerm& start, const std::vector<ChainStep>& chain) {
  MuTerm prev = start;
  for (const auto& step : chain) {
    if (step.axiom) {
      MuTerm l = plug(*step.around, step.axiom->lhs), r = plug(*step.around, step.axiom->rhs);
      if (!((prev == l && step.term == r) || (prev == r && step.term == l))) return false;
      typecheck_mu(g, d, step.term);
    } else if (!eq_mu(g, d, prev, step.term, Theory::BetaEta).equal) {
      return false;
    }
    prev = step.term;
  }
  return true;
}

ChainStep by_beta_eta(MuTerm t) { return {std::move(t), std::nullopt, std::nullopt}; }

DerivationLink make_link(int axiom, int from, int to, Context g, Context d, const MuTerm& lhs,
                         std::vector<ChainStep> lc, const MuTerm& rhs, std::vector<ChainStep> rc) {
  DerivationLink link{axiom, from, to, std::move(g), std::move(d), std::move(lc), std::move(rc), false};
  link.lhs_chain.insert(link.lhs_chain.begin(), by_beta_eta(lhs));
  link.rhs_chain.insert(link.rhs_chain.begin(), by_beta_eta(rhs));
  link.holds = chain_holds(link.gamma, link.delta, lhs, link.lhs_chain) &&
               chain_holds(link.gamma, link.delta, rhs, link.rhs_chain);
  return link;
}

// m (∀X.σ) σ₁ = m σ[σ₁/X], presentation 2 of the second axiom at any types.
MuEquation instantiation_instance(const MuType& all, const MuType& arg) {
  return {"additional-2.2", {{"m", MuType::bottom()}}, {}, MuTerm::tyapp(MuTerm::tyapp(v("m"), all), arg),
          MuTerm::tyapp(v("m"), subst_type(all.body(), all.name(), arg))};
}

// m ⊥ = m from the second axiom: m ⊥ = ΛX.m ⊥ X = ΛX.m X = m.
std::vector<ChainStep> bottom_instance_is_identity() {
  MuTerm around = MuTerm::tylam("X", MuTerm::var(kHoleVar));
  return {by_beta_eta(MuTerm::tylam("X", MuTerm::tyapp(MuTerm::tyapp(v("m"), MuType::bottom()), tv("X")))),
          {MuTerm::tylam("X", MuTerm::tyapp(v("m"), tv("X"))),
           instantiation_instance(MuType::bottom(), tv("X")), around},
          by_beta_eta(v("m"))};
}

// 1 → 2: apply both sides of the discardability equation to m : ⊥.
DerivationLink link_1_to_2(int a) {
  MuEquation p1 = additional_axiom(a, 1), p2 = additional_axiom(a, 2);
  Context g = merge(p2.gamma, p1.gamma), d = merge(p2.delta, p1.delta);
  std::vector<ChainStep> rc;
  if (a == 3) {
    // A_⊥ m is m ⊥, not m, so the second axiom closes the gap.
    rc.push_back(by_beta_eta(MuTerm::tyapp(v("m"), MuType::bottom())));
    for (auto& s : bottom_instance_is_identity()) rc.push_back(s);
  }
  rc.push_back(by_beta_eta(p2.rhs));
  return make_link(a, 1, 2, g, d, app(p1.lhs, v("m")), {by_beta_eta(p2.lhs)}, app(p1.rhs, v("m")), rc);
}

// 2 → 1: abstract m out of both sides.
DerivationLink link_2_to_1(int a) {
  MuEquation p1 = additional_axiom(a, 1), p2 = additional_axiom(a, 2);
  Context g = p1.gamma, d = merge(p1.delta, p2.delta);
  auto abs = [](const MuTerm& m) { return MuTerm::lam("m", MuType::bottom(), m); };
  std::vector<ChainStep> rc;
  if (a == 3) {
    MuTerm around = MuTerm::lam("m", MuType::bottom(), MuTerm::tylam("X", MuTerm::var(kHoleVar)));
    rc.push_back(by_beta_eta(abs(MuTerm::tylam("X", MuTerm::tyapp(v("m"), tv("X"))))));
    rc.push_back({abs(MuTerm::tylam("X", MuTerm::tyapp(MuTerm::tyapp(v("m"), MuType::bottom()), tv("X")))),
                  instantiation_instance(MuType::bottom(), tv("X")), around});
  }
  rc.push_back(by_beta_eta(p1.rhs));
  return make_link(a, 2, 1, g, d, abs(p2.lhs), {by_beta_eta(p1.lhs)}, abs(p2.rhs), rc);
}

// 3 → 2: presentation 3 at M := m (a body not using the bound name) is
// presentation 2.
DerivationLink link_3_to_2(int a) {
  MuEquation p2 = additional_axiom(a, 2);
  MuType s = tv("s"), t = tv("t"), u = tv("u"), st = MuType::arrow(s, t);
  MuTerm lhs = v("m"), rhs = v("m");
  switch (a) {
    case 1:
      lhs = app(bold_mu("a", st, v("m")), v("n"));
      rhs = bold_mu("b", t, v("m"));
      break;
    case 2:
      lhs = MuTerm::tyapp(bold_mu("a", poly(), v("m")), u);
      rhs = bold_mu("b", MuType::arrow(u, s), v("m"));
      break;
    default:
      lhs = named("a", bold_mu("a1", s, v("m")));
      break;
  }
  return make_link(a, 3, 2, p2.gamma, p2.delta, lhs, {by_beta_eta(p2.lhs)}, rhs, {by_beta_eta(p2.rhs)});
}

// 2 → 3 for the application axioms: presentation 3 is presentation 2 at
// M′ = M[[β](− N)/[α](−)], under μβ.[β](−).
DerivationLink link_2_to_3(int a) {
  MuEquation p2 = additional_axiom(a, 2), p3 = additional_axiom(a, 3);
  MuType s = tv("s"), t = tv("t"), u = tv("u");
  MuType st = MuType::arrow(s, t);
  MuTerm m = generic_bottom("a", a == 1 ? st : poly());
  MixedMode mode = a == 1 ? MixedMode::app_arg(v("n")) : MixedMode::ty_arg(u);
  MuType cod = a == 1 ? t : MuType::arrow(u, s);
  MuTerm m2 = mixed_subst(m, "a", mode, "b");
  auto wrap = [&](const MuTerm& side) { return MuTerm::mu("b", cod, "b", subst_term(side, "m", m2)); };
  return make_link(a, 2, 3, p3.gamma, p3.delta, p3.lhs, {by_beta_eta(wrap(p2.lhs))}, p3.rhs,
                   {by_beta_eta(wrap(p2.rhs))});
}

}  // namespace

AdditionalAxiomReport check_additional_axioms() {
  AdditionalAxiomReport r;
  for (int a = 1; a <= 3; ++a) {
    for (int p = 1; p <= 3; ++p) {
      MuEquation e = additional_axiom(a, p);
      AdditionalAxiomCheck c{a, p, e, false, false};
      c.equal_p = eq_mu(e.gamma, e.delta, e.lhs, e.rhs, Theory::LambdaMu2P).equal;
      c.equal_beta_eta = eq_mu(e.gamma, e.delta, e.lhs, e.rhs, Theory::BetaEta).equal;
      r.checks.push_back(std::move(c));
    }
    r.links.push_back(link_1_to_2(a));
    r.links.push_back(link_2_to_1(a));
    r.links.push_back(link_3_to_2(a));
    if (a != 3) r.links.push_back(link_2_to_3(a));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Term generation

namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, const Context& gamma, const Context& delta, const MuType& goal, std::size_t limit)
      : rng_(seed), gamma_(gamma), delta_(delta), limit_(limit) {
    for (const auto& [n, t] : gamma) note(n, t);
    for (const auto& [n, t] : delta) note(n, t);
    for (const auto& x : free_type_vars(goal)) used_.insert(x), atoms_.push_back(x);
    collect_binders(goal);
  }

  std::optional<MuTerm> run(const MuType& goal, std::size_t budget) { return gen(goal, budget); }

  bool exhausted() const { return calls_ > limit_; }

 private:
  struct Step {
    bool is_arg;
    MuType type;  // argument type, or the flexible variable for an instantiation
  };

  void note(const std::string& n, const MuType& t) {
    used_.insert(n);
    for (const auto& x : free_type_vars(t))
      if (used_.insert(x).second) atoms_.push_back(x);
    collect_binders(t);
  }

  void collect_binders(const MuType& t) {
    switch (t.kind()) {
      case MuType::Kind::Var: break;
      case MuType::Kind::Arrow: collect_binders(t.dom()), collect_binders(t.cod()); break;
      case MuType::Kind::Forall: used_.insert(t.name()), collect_binders(t.body()); break;
    }
  }

  std::string fresh(const char* base) {
    std::size_t& c = counters_[base];
    std::string n;
    do n = base + std::to_string(++c);
    while (used_.count(n));
    used_.insert(n);
    return n;
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::optional<MuTerm> gen(const MuType& goal, std::size_t budget) {
    if (budget == 0 || ++calls_ > limit_) return std::nullopt;
    std::vector<int> options;
    if (!goal.is_var()) options.push_back(0);
    for (std::size_t i = 0; i < gamma_.size(); ++i) options.push_back(1);
    if (budget >= 2) options.push_back(2), options.push_back(2);
    std::shuffle(options.begin(), options.end(), rng_);
    std::vector<int> seen;
    for (int o : options)
      if (std::find(seen.begin(), seen.end(), o) == seen.end()) seen.push_back(o);
    options = seen;
    for (int o : options) {
      std::optional<MuTerm> r = o == 0 ? intro(goal, budget) : o == 1 ? elim(goal, budget) : mu(goal, budget);
      if (r) return r;
      if (calls_ > limit_) break;
    }
    return std::nullopt;
  }

  std::optional<MuTerm> intro(const MuType& goal, std::size_t budget) {
    if (goal.is_arrow()) {
      std::string x = fresh("x");
      gamma_.emplace_back(x, goal.dom());
      auto body = gen(goal.cod(), budget - 1);
      gamma_.pop_back();
      if (body) return MuTerm::lam(x, goal.dom(), *body);
      return std::nullopt;
    }
    std::string y = fresh("Y");
    atoms_.push_back(y);
    auto body = gen(subst_type(goal.body(), goal.name(), MuType::var(y)), budget - 1);
    atoms_.pop_back();
    if (body) return MuTerm::tylam(y, *body);
    return std::nullopt;
  }

  std::optional<MuTerm> mu(const MuType& goal, std::size_t budget) {
    std::string a = fresh("a");
    delta_.emplace_back(a, goal);
    std::vector<std::size_t> order(delta_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    std::optional<MuTerm> out;
    for (std::size_t i : order) {
      auto [b, bt] = delta_[i];
      if (shadowed(delta_, i)) continue;
      if (auto body = gen(bt, budget - 1)) {
        out = MuTerm::mu(a, goal, b, *body);
        break;
      }
      if (calls_ > limit_) break;
    }
    delta_.pop_back();
    return out;
  }

  static bool shadowed(const Context& c, std::size_t i) {
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[j].first == c[i].first) return true;
    return false;
  }

  // Flexible variables are matched against the goal; rigid ones (goal
  // binders opened in lockstep) must match themselves.
  bool match(const MuType& pat, const MuType& goal, const NameSet& flex, std::map<std::string, MuType>& sub,
             std::vector<std::pair<std::string, std::string>>& bound) {
    switch (pat.kind()) {
      case MuType::Kind::Var: {
        for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
          if (it->first == pat.name()) return goal.is_var() && goal.name() == it->second;
          if (goal.is_var() && goal.name() == it->second) return false;
        }
        if (flex.count(pat.name())) {
          for (const auto& x : free_type_vars(goal))
            for (const auto& b : bound)
              if (b.second == x) return false;
          auto it = sub.find(pat.name());
          if (it != sub.end()) return it->second == goal;
          sub.emplace(pat.name(), goal);
          return true;
        }
        return goal.is_var() && goal.name() == pat.name();
      }
      case MuType::Kind::Arrow:
        return goal.is_arrow() && match(pat.dom(), goal.dom(), flex, sub, bound) &&
               match(pat.cod(), goal.cod(), flex, sub, bound);
      case MuType::Kind::Forall: {
        if (!goal.is_forall()) return false;
        bound.emplace_back(pat.name(), goal.name());
        bool ok = match(pat.body(), goal.body(), flex, sub, bound);
        bound.pop_back();
        return ok;
      }
    }
    return false;
  }

  MuType random_type(const MuType& goal) {
    std::vector<MuType> pool{goal, MuType::bottom()};
    for (const auto& a : atoms_) pool.push_back(MuType::var(a));
    return pool[pick(pool.size())];
  }

  std::optional<MuTerm> elim(const MuType& goal, std::size_t budget) {
    std::vector<std::size_t> order(gamma_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    for (std::size_t i : order) {
      if (shadowed(gamma_, i)) continue;
      auto [x, xt] = gamma_[i];
      if (auto r = spine(x, xt, goal, budget)) return r;
      if (calls_ > limit_) break;
    }
    return std::nullopt;
  }

  std::optional<MuTerm> spine(const std::string& x, const MuType& xt, const MuType& goal, std::size_t budget) {
    // Enumerate every prefix of the head's type whose result matches the goal.
    struct Candidate {
      std::vector<Step> steps;
      std::map<std::string, MuType> sub;
    };
    std::vector<Candidate> cands;
    std::vector<Step> steps;
    NameSet flex;
    MuType cur = xt;
    std::size_t min_size = 1;
    for (int depth = 0; depth < 8 && min_size <= budget; ++depth) {
      std::map<std::string, MuType> sub;
      std::vector<std::pair<std::string, std::string>> bound;
      if (match(cur, goal, flex, sub, bound)) cands.push_back({steps, sub});
      if (cur.is_arrow()) {
        steps.push_back({true, cur.dom()});
        cur = cur.cod();
        min_size += 2;
      } else if (cur.is_forall()) {
        std::string f = fresh("F");
        flex.insert(f);
        steps.push_back({false, MuType::var(f)});
        cur = subst_type(cur.body(), cur.name(), MuType::var(f));
        min_size += 1;
      } else {
        break;
      }
    }
    std::shuffle(cands.begin(), cands.end(), rng_);
    for (auto& c : cands) {
      for (const auto& f : flex)
        if (!c.sub.count(f)) c.sub.emplace(f, random_type(goal));
      std::size_t args = 0;
      for (const auto& s : c.steps) args += s.is_arg ? 1 : 0;
      if (1 + c.steps.size() + args > budget) continue;
      std::size_t left = budget - 1 - c.steps.size();
      MuTerm head = MuTerm::var(x);
      bool ok = true;
      std::size_t remaining_args = args;
      for (const auto& s : c.steps) {
        MuType ty = subst_types(s.type, c.sub);
        if (!s.is_arg) {
          head = MuTerm::tyapp(head, ty);
          continue;
        }
        --remaining_args;
        std::size_t share = left - remaining_args;
        auto a = gen(ty, share);
        if (!a) {
          ok = false;
          break;
        }
        left -= term_size(*a);
        head = MuTerm::app(head, *a);
      }
      if (ok) return head;
      if (calls_ > limit_) break;
    }
    return std::nullopt;
  }

  std::mt19937_64 rng_;
  Context gamma_, delta_;
  NameSet used_;
  std::vector<std::string> atoms_;
  std::map<std::string, std::size_t> counters_;
  std::size_t limit_;
  std::size_t calls_ = 0;
};

}  // namespace

MuTerm gen_typed_term(std::uint64_t seed, std::size_t budget, const Context& gamma, const Context& delta,
                      const MuType& goal, std::size_t search_limit) {
  if (budget == 0) throw KernelError(Errc::GaveUp, "empty budget");
  Generator g(seed, gamma, delta, goal, search_limit);
  if (auto m = g.run(goal, budget)) return *m;
  throw KernelError(Errc::GaveUp, "no term of type " + to_string(goal) + " within " + std::to_string(budget) +
                                      (g.exhausted() ? " (search limit reached)" : ""));
}

}  // namespace mu2forge
