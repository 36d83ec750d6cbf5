#include "mu2forge/focality.hpp"

#include "mu2forge/encodings.hpp"

namespace mu2forge {

namespace {

MuTerm var(const std::string& n) { return MuTerm::var(n); }
MuTerm app(MuTerm f, MuTerm a) { return MuTerm::app(std::move(f), std::move(a)); }

NameSet taken(const Context& gamma, const Context& delta, const MuTerm& f) {
  NameSet used = all_identifiers(f);
  for (const auto& x : free_type_vars(f)) used.insert(x);
  for (const auto* c : {&gamma, &delta})
    for (const auto& [n, t] : *c) {
      used.insert(n);
      for (const auto& x : free_type_vars(t)) used.insert(x);
    }
  return used;
}

std::string pick(NameSet& used, std::string_view base) {
  std::string n = fresh_name(base, used);
  used.insert(n);
  return n;
}

MuType map_type(const Context& gamma, const Context& delta, const MuTerm& f) {
  MuType t = typecheck_mu(gamma, delta, f);
  if (!t.is_arrow()) throw KernelError(Errc::IllTyped, "not a map: " + to_string(t));
  return t;
}

bool is_let(const TargetTerm& t) { return t.is(TargetTerm::Kind::LetPair) || t.is(TargetTerm::Kind::LetPack); }

TargetTerm rebuild_let(const TargetTerm& let, const TargetTerm& body) {
  if (let.is(TargetTerm::Kind::LetPair)) return TargetTerm::let_pair(let.name(), let.name2(), let.scrutinee(), body);
  return TargetTerm::let_pack(let.name(), let.name2(), let.scrutinee(), body);
}

}  // namespace

FocalCheck check_focal(const Context& gamma, const Context& delta, const MuTerm& f, Theory theory) {
  MuType t = map_type(gamma, delta, f);
  NameSet used = taken(gamma, delta, f);
  std::string x = pick(used, "x");
  Context g2 = gamma;
  g2.emplace_back(x, t.dom());
  TargetContext ctx = cps_context(g2, delta);
  TargetTerm image = cps_term(g2, delta, app(f, var(x)));
  Mode mode = mode_of(theory);
  CanonicalForm form = canonicalize(ctx, image, TargetType::neg(cps_type(t.cod())), mode);

  FocalCheck out;
  auto certify = [&](std::string k, TargetTerm g) {
    out.certificate = FocalityCertificate{gamma, delta, f, t.dom(), t.cod(), theory, x, std::move(k), std::move(g),
                                          form};
  };
  const TargetTerm& p = form.term;
  if (p.is(TargetTerm::Kind::Var)) {
    if (p.name() != x) {
      out.reason = "the image ignores its argument";
      return out;
    }
    NameSet avoid = all_identifiers(p);
    for (const auto& [n, ty] : ctx) avoid.insert(n);
    std::string k = fresh_name("k", avoid);
    certify(k, TargetTerm::var(k));
    return out;
  }
  if (!p.is(TargetTerm::Kind::Lam)) {
    out.reason = "canonical form is not a program";
    return out;
  }
  std::vector<TargetTerm> lets;
  TargetTerm a = p.body();
  while (is_let(a)) {
    if (free_vars(a.scrutinee()).count(x)) {
      out.reason = "the argument is decomposed before use";
      return out;
    }
    lets.push_back(a);
    a = a.body();
  }
  if (!a.is(TargetTerm::Kind::App) || !a.fn().is(TargetTerm::Kind::Var) || a.fn().name() != x) {
    out.reason = "the answer is not headed by the argument";
    return out;
  }
  if (free_vars(a.arg()).count(x)) {
    out.reason = "the argument occurs in its own continuation";
    return out;
  }
  TargetTerm g = a.arg();
  for (auto it = lets.rbegin(); it != lets.rend(); ++it) g = rebuild_let(*it, g);
  certify(p.name(), g);
  return out;
}

std::string validate_certificate(const FocalityCertificate& c) {
  try {
    MuType t = map_type(c.gamma, c.delta, c.subject);
    if (t.dom() != c.dom || t.cod() != c.cod) return "subject type changed";
    Mode mode = mode_of(c.theory);
    TargetContext base = cps_context(c.gamma, c.delta);
    TargetContext kctx = base;
    kctx.emplace_back(c.cont, cps_type(c.cod));
    if (free_vars(c.transformer).count(c.arg)) return "argument occurs in the transformer";
    TargetType gt = typecheck_target(kctx, c.transformer, mode);
    if (gt != cps_type(c.dom)) return "transformer has type " + to_string(gt);
    Context g2 = c.gamma;
    g2.emplace_back(c.arg, c.dom);
    TargetContext xctx = cps_context(g2, c.delta);
    TargetTerm factor = TargetTerm::lam(c.cont, cps_type(c.cod), TargetTerm::app(TargetTerm::var(c.arg), c.transformer));
    TargetTerm image = cps_term(g2, c.delta, app(c.subject, var(c.arg)));
    if (!eq_target(xctx, factor, image, mode).equal) return "factorization does not match the image";
    if (!eq_target(xctx, c.evidence.term, image, mode).equal) return "evidence does not match the image";
  } catch (const KernelError& e) {
    return e.what();
  }
  return "";
}

EqVerdict check_discardable(const Context& gamma, const Context& delta, const MuTerm& f, Theory theory) {
  MuType t = map_type(gamma, delta, f);
  NameSet used = taken(gamma, delta, f);
  std::string y = pick(used, "y");
  MuTerm lhs = MuTerm::lam(y, MuType::bottom(), app(f, app(mk_combinator("Abort", {t.dom()}), var(y))));
  return eq_mu(gamma, delta, lhs, mk_combinator("Abort", {t.cod()}), theory);
}

EqVerdict check_repeatable(const Context& gamma, const Context& delta, const MuTerm& f, Theory theory) {
  MuType t = map_type(gamma, delta, f);
  NameSet used = taken(gamma, delta, f);
  MuType s3 = MuType::var(pick(used, "r"));
  std::string m = pick(used, "m"), h = pick(used, "h"), x = pick(used, "x");
  MuType mt = MuType::arrow(MuType::arrow(t.dom(), s3), t.dom());
  // (f → σ₃) → f applied to m
  MuTerm mapped = MuTerm::lam(h, MuType::arrow(t.cod(), s3),
                              app(f, app(var(m), MuTerm::lam(x, t.dom(), app(var(h), app(f, var(x)))))));
  MuTerm lhs = MuTerm::lam(m, mt, app(mk_combinator("Peirce", {t.cod(), s3}), mapped));
  MuTerm rhs = MuTerm::lam(m, mt, app(f, app(mk_combinator("Peirce", {t.dom(), s3}), var(m))));
  return eq_mu(gamma, delta, lhs, rhs, theory);
}

EqVerdict check_algebra_square(const Context& gamma, const Context& delta, const MuTerm& f, Theory theory) {
  MuType t = map_type(gamma, delta, f);
  NameSet used = taken(gamma, delta, f);
  std::string k = pick(used, "k"), a = pick(used, "a"), b = pick(used, "b"), x = pick(used, "x");
  Context g2 = gamma;
  g2.emplace_back(k, MuType::neg(MuType::neg(t.dom())));
  MuTerm lhs = app(f, bold_mu(a, t.dom(), app(var(k), MuTerm::lam(x, t.dom(), named(a, var(x))))));
  MuTerm rhs = bold_mu(b, t.cod(), app(var(k), MuTerm::lam(x, t.dom(), named(b, app(f, var(x))))));
  return eq_mu(g2, delta, lhs, rhs, theory);
}

EqVerdict check_linear(const Context& gamma, const Context& delta, const MuTerm& f, Theory theory) {
  MuType t = map_type(gamma, delta, f);
  NameSet used = taken(gamma, delta, f);
  std::string m = pick(used, "M"), x = pick(used, "x");
  Context g2 = gamma;
  g2.emplace_back(m, l_type(t.dom()));
  MuTerm lhs = app(f, app(MuTerm::tyapp(var(m), t.dom()), MuTerm::lam(x, t.dom(), var(x))));
  MuTerm rhs = app(MuTerm::tyapp(var(m), t.cod()), f);
  return eq_mu(g2, delta, lhs, rhs, theory);
}

EqVerdict check_naturality_square(const FocalityCertificate& c, Square square) {
  switch (square) {
    case Square::C: return check_algebra_square(c.gamma, c.delta, c.subject, c.theory);
    case Square::Peirce: return check_repeatable(c.gamma, c.delta, c.subject, c.theory);
    case Square::Fold: break;
  }
  NameSet used = taken(c.gamma, c.delta, c.subject);
  std::string r = pick(used, "r"), a = pick(used, "a"), y = pick(used, "y"), z = pick(used, "z");
  MuType rt = MuType::var(r);
  TypeScheme F{pick(used, "X"), rt};
  Context g2 = c.gamma;
  g2.emplace_back(a, MuType::arrow(rt, c.dom));
  g2.emplace_back(y, rt);
  const MuTerm& h = c.subject;
  MuTerm b = MuTerm::lam(z, rt, app(h, app(var(a), var(z))));
  // Premise h ∘ a = b ∘ F[h]; F is constant so F[h] is an identity.
  MuTerm fh = functorial_action(F, h, c.dom, c.cod);
  EqVerdict premise = eq_mu(g2, c.delta, MuTerm::lam(z, rt, app(h, app(var(a), var(z)))),
                            MuTerm::lam(z, rt, app(b, app(fh, var(z)))), c.theory);
  if (!premise.equal) return premise;
  MuTerm in_y = app(mk_combinator("in", {F.body}), var(y));
  MuTerm lhs = app(h, app(app(mk_combinator("fold", {F.body, c.dom}), var(a)), in_y));
  MuTerm rhs = app(app(mk_combinator("fold", {F.body, c.cod}), b), in_y);
  return eq_mu(g2, c.delta, lhs, rhs, c.theory);
}

FocalityCertificate compose(const FocalityCertificate& f, const FocalityCertificate& h) {
  if (f.cod != h.dom) throw KernelError(Errc::TypeMismatch, to_string(f.cod) + " vs " + to_string(h.dom));
  Context gamma = f.gamma, delta = f.delta;
  for (const auto& e : h.gamma) gamma.push_back(e);
  for (const auto& e : h.delta) delta.push_back(e);
  NameSet used = taken(gamma, delta, app(h.subject, f.subject));
  std::string x = pick(used, "x");
  MuTerm composite = MuTerm::lam(x, f.dom, app(h.subject, app(f.subject, var(x))));
  FocalCheck direct = check_focal(gamma, delta, composite, f.theory);
  if (!direct) throw KernelError(Errc::NotFocal, "composite not certified: " + direct.reason);
  FocalityCertificate out = *direct.certificate;
  TargetTerm gh = target_subst(h.transformer, h.cont, TargetTerm::var(out.cont));
  TargetTerm g = target_subst(f.transformer, f.cont, gh);
  TargetContext kctx = cps_context(gamma, delta);
  kctx.emplace_back(out.cont, cps_type(out.cod));
  if (!eq_target(kctx, g, out.transformer, mode_of(f.theory)).equal)
    throw KernelError(Errc::NotFocal, "composed transformer disagrees with extraction");
  out.transformer = g;
  return out;
}

}  // namespace mu2forge
