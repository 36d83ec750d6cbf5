#include "mu2forge/inverse_cps.hpp"

namespace mu2forge {

MuType inverse_type(const TargetType& t) {
  switch (t.kind()) {
    case TargetType::Kind::Var: return MuType::var(t.name());
    case TargetType::Kind::Conj:
      if (t.left().is(TargetType::Kind::Neg))
        return MuType::arrow(inverse_type(t.left().body()), inverse_type(t.right()));
      break;
    case TargetType::Kind::Exists: return MuType::forall(t.name(), inverse_type(t.body()));
    default: break;
  }
  throw KernelError(Errc::NotInImageType, to_string(t));
}

std::pair<Context, Context> inverse_context(const TargetContext& ctx) {
  Context gamma, delta;
  for (const auto& [n, t] : ctx) {
    if (t.is(TargetType::Kind::Neg))
      gamma.emplace_back(n, inverse_type(t.body()));
    else
      delta.emplace_back(n, inverse_type(t));
  }
  return {gamma, delta};
}

MuTerm fill(const MuHoleContext& c, const MuTerm& plug) {
  std::function<MuTerm(const MuTerm&)> go = [&](const MuTerm& m) -> MuTerm {
    switch (m.kind()) {
      case MuTerm::Kind::Var: return m.name() == kHole ? plug : m;
      case MuTerm::Kind::Lam: return MuTerm::lam(m.name(), m.type(), go(m.body()));
      case MuTerm::Kind::App: return MuTerm::app(go(m.fn()), go(m.arg()));
      case MuTerm::Kind::TyLam: return MuTerm::tylam(m.name(), go(m.body()));
      case MuTerm::Kind::TyApp: return MuTerm::tyapp(go(m.fn()), m.type());
      case MuTerm::Kind::Mu: return MuTerm::mu(m.name(), m.type(), m.target(), go(m.body()));
    }
    return m;
  };
  return go(c.body);
}

namespace {

class Inverter {
 public:
  Inverter(const TargetContext& ctx, const TargetTerm& t, Mode mode) : mode_(mode) {
    used_ = all_identifiers(t);
    for (const auto& [n, ty] : ctx) used_.insert(n);
  }

  MuTerm program(TargetContext& ctx, const TargetTerm& t) {
    if (t.is(TargetTerm::Kind::Var)) return MuTerm::var(t.name());
    if (t.is(TargetTerm::Kind::Lam)) {
      ctx.emplace_back(t.name(), t.type());
      MuTerm a = answer(ctx, t.body());
      ctx.pop_back();
      return bold_mu(t.name(), inverse_type(t.type()), a);
    }
    throw KernelError(Errc::NotCanonical, "not a Program: " + to_string(t));
  }

  MuHoleContext continuation(TargetContext& ctx, const TargetTerm& t) {
    MuTerm hole = MuTerm::var(kHole);
    switch (t.kind()) {
      case TargetTerm::Kind::Var: {
        std::string d = fresh_name("d", used_);
        used_.insert(d);
        return {MuTerm::mu(d, MuType::bottom(), t.name(), hole), inverse_type(type_of(ctx, t))};
      }
      case TargetTerm::Kind::Star:
        if (mode_ != Mode::Parametric) break;
        return {hole, MuType::bottom()};
      case TargetTerm::Kind::Pair: {
        MuHoleContext c = continuation(ctx, t.snd());
        MuType arg = inverse_type(type_of(ctx, t.fst()).body());
        return {fill(c, MuTerm::app(hole, program(ctx, t.fst()))), MuType::arrow(arg, c.hole_type)};
      }
      case TargetTerm::Kind::Pack: {
        MuHoleContext c = continuation(ctx, t.payload());
        return {fill(c, MuTerm::tyapp(hole, inverse_type(t.type()))), inverse_type(t.pack_type())};
      }
      case TargetTerm::Kind::LetPair:
      case TargetTerm::Kind::LetPack: {
        MuHoleContext outer = continuation(ctx, t.scrutinee());
        std::optional<MuType> hole_type;
        MuTerm abs = binder_abstraction(ctx, t, [&](TargetContext& c) {
          MuHoleContext inner = continuation(c, t.body());
          hole_type = inner.hole_type;
          return inner.body;
        });
        return {fill(outer, abs), *hole_type};
      }
      default: break;
    }
    throw KernelError(Errc::NotCanonical, "not a Continuation: " + to_string(t));
  }

  MuTerm answer(TargetContext& ctx, const TargetTerm& t) {
    switch (t.kind()) {
      case TargetTerm::Kind::App: {
        MuHoleContext c = continuation(ctx, t.arg());
        return fill(c, program(ctx, t.fn()));
      }
      case TargetTerm::Kind::LetPair:
      case TargetTerm::Kind::LetPack: {
        MuHoleContext outer = continuation(ctx, t.scrutinee());
        return fill(outer, binder_abstraction(ctx, t, [&](TargetContext& c) { return answer(c, t.body()); }));
      }
      default: break;
    }
    throw KernelError(Errc::NotCanonical, "not an Answer: " + to_string(t));
  }

 private:
  TargetType type_of(const TargetContext& ctx, const TargetTerm& t) const {
    return typecheck_target(ctx, t, mode_);
  }

  // λx.𝛍k.B or ΛX.𝛍k.B for the binders of a let, B : ⊥ built by `body`.
  template <typename F>
  MuTerm binder_abstraction(TargetContext& ctx, const TargetTerm& let, F&& body) {
    TargetType st = type_of(ctx, let.scrutinee());
    std::size_t mark = ctx.size();
    MuTerm out = MuTerm::var(kHole);
    if (let.is(TargetTerm::Kind::LetPair)) {
      if (!st.is(TargetType::Kind::Conj) || !st.left().is(TargetType::Kind::Neg))
        throw KernelError(Errc::NotCanonical, "let-pair over " + to_string(st));
      ctx.emplace_back(let.name(), st.left());
      ctx.emplace_back(let.name2(), st.right());
      MuTerm b = body(ctx);
      out = MuTerm::lam(let.name(), inverse_type(st.left().body()),
                        bold_mu(let.name2(), inverse_type(st.right()), b));
    } else {
      TargetType kt = subst_type(st.body(), st.name(), TargetType::var(let.name()));
      ctx.emplace_back(let.name2(), kt);
      MuTerm b = body(ctx);
      out = MuTerm::tylam(let.name(), bold_mu(let.name2(), inverse_type(kt), b));
    }
    ctx.erase(ctx.begin() + static_cast<long>(mark), ctx.end());
    return out;
  }

  Mode mode_;
  NameSet used_;
};

}  // namespace

Inverted invert(const TargetContext& ctx, const CanonicalForm& form, Mode mode) {
  classify(form.term, form.type, mode);
  Inverter inv(ctx, form.term, mode);
  TargetContext c = ctx;
  switch (form.kind) {
    case CanonicalForm::Kind::Program: return {form.kind, inv.program(c, form.term), std::nullopt};
    case CanonicalForm::Kind::Answer: return {form.kind, inv.answer(c, form.term), std::nullopt};
    case CanonicalForm::Kind::Continuation: {
      MuHoleContext h = inv.continuation(c, form.term);
      return {form.kind, h.body, h.hole_type};
    }
  }
  throw KernelError(Errc::NotCanonical, "unknown form");
}

EqVerdict roundtrip(const TargetContext& ctx, const CanonicalForm& program, Mode mode) {
  if (program.kind != CanonicalForm::Kind::Program)
    throw KernelError(Errc::NotCanonical, "roundtrip expects a Program");
  Inverted inv = invert(ctx, program, mode);
  auto [gamma, delta] = inverse_context(ctx);
  TargetTerm image = cps_term(gamma, delta, inv.term);
  return eq_target(ctx, image, program.term, mode);
}

}  // namespace mu2forge
