#include "mu2forge/cps.hpp"

namespace mu2forge {

TargetType cps_type(const MuType& t) {
  switch (t.kind()) {
    case MuType::Kind::Var: return TargetType::var(t.name());
    case MuType::Kind::Arrow:
      return TargetType::conj(TargetType::neg(cps_type(t.dom())), cps_type(t.cod()));
    case MuType::Kind::Forall: return TargetType::exists(t.name(), cps_type(t.body()));
  }
  return TargetType::answer();
}

TargetContext cps_context(const Context& gamma, const Context& delta) {
  NameSet vars;
  for (const auto& [x, t] : gamma) vars.insert(x);
  TargetContext out;
  for (const auto& [x, t] : gamma) out.emplace_back(x, TargetType::neg(cps_type(t)));
  for (const auto& [a, t] : delta) {
    if (vars.count(a)) throw KernelError(Errc::NameClash, a + " is both a variable and a name");
    out.emplace_back(a, cps_type(t));
  }
  return out;
}

namespace {

class Translator {
 public:
  Translator(const Context& gamma, const Context& delta, const MuTerm& m) {
    used_ = all_identifiers(m);
    for (const auto& [x, t] : gamma) {
      used_.insert(x);
      env_.push_back({x, x, false, t});
    }
    for (const auto& [a, t] : delta) {
      used_.insert(a);
      env_.push_back({a, a, true, t});
    }
    z_ = fresh_name("z", used_);
    k_ = fresh_name("k", used_);
    used_.insert(z_);
    used_.insert(k_);
  }

  std::pair<TargetTerm, MuType> run(const MuTerm& m) {
    switch (m.kind()) {
      case MuTerm::Kind::Var: {
        const Entry& e = find(m.name(), false);
        return {TargetTerm::var(e.target), e.type};
      }
      case MuTerm::Kind::Lam: {
        std::string x = bind(m.name(), false, m.type());
        auto [body, cod] = run(m.body());
        env_.pop_back();
        MuType t = MuType::arrow(m.type(), cod);
        TargetTerm r = TargetTerm::lam(
            z_, cps_type(t),
            TargetTerm::let_pair(x, k_, TargetTerm::var(z_), TargetTerm::app(body, TargetTerm::var(k_))));
        return {r, t};
      }
      case MuTerm::Kind::App: {
        auto [f, ft] = run(m.fn());
        auto [a, at] = run(m.arg());
        TargetTerm r = TargetTerm::lam(k_, cps_type(ft.cod()),
                                       TargetTerm::app(f, TargetTerm::pair(a, TargetTerm::var(k_))));
        return {r, ft.cod()};
      }
      case MuTerm::Kind::TyLam: {
        auto [body, bt] = run(m.body());
        MuType t = MuType::forall(m.name(), bt);
        TargetTerm r = TargetTerm::lam(
            z_, cps_type(t),
            TargetTerm::let_pack(m.name(), k_, TargetTerm::var(z_), TargetTerm::app(body, TargetTerm::var(k_))));
        return {r, t};
      }
      case MuTerm::Kind::TyApp: {
        auto [f, ft] = run(m.fn());
        MuType inst = subst_type(ft.body(), ft.name(), m.type());
        TargetTerm r = TargetTerm::lam(
            k_, cps_type(inst),
            TargetTerm::app(f, TargetTerm::pack(cps_type(m.type()), TargetTerm::var(k_), cps_type(ft))));
        return {r, inst};
      }
      case MuTerm::Kind::Mu: {
        std::string a = bind(m.name(), true, m.type());
        const Entry& target = find(m.target(), true);
        std::string b = target.target;
        auto [body, bt] = run(m.body());
        env_.pop_back();
        return {TargetTerm::lam(a, cps_type(m.type()), TargetTerm::app(body, TargetTerm::var(b))), m.type()};
      }
    }
    throw KernelError(Errc::IllTyped, "unknown term");
  }

 private:
  struct Entry {
    std::string source, target;
    bool is_name;
    MuType type;
  };

  const Entry& find(const std::string& id, bool is_name) const {
    for (std::size_t i = env_.size(); i-- > 0;)
      if (env_[i].is_name == is_name && env_[i].source == id) return env_[i];
    throw KernelError(is_name ? Errc::UnboundName : Errc::UnboundVariable, id);
  }

  // Keeps the source identifier unless it would capture a visible binder of
  // the other namespace, which shares the target's single namespace.
  std::string bind(const std::string& id, bool is_name, const MuType& t) {
    bool clash = false;
    for (const auto& e : env_)
      if (e.is_name != is_name && e.target == id) clash = true;
    std::string target = id;
    if (clash) {
      NameSet avoid = used_;
      for (const auto& e : env_) avoid.insert(e.target);
      target = fresh_name(id, avoid);
      used_.insert(target);
    }
    env_.push_back({id, target, is_name, t});
    return target;
  }

  NameSet used_;
  std::vector<Entry> env_;
  std::string z_, k_;
};

}  // namespace

TargetTerm cps_term(const Context& gamma, const Context& delta, const MuTerm& m) {
  typecheck_mu(gamma, delta, m);
  cps_context(gamma, delta);
  Translator t(gamma, delta, m);
  return t.run(m).first;
}

TargetTerm cps_term(const MuJudgement& j) { return cps_term(j.gamma, j.delta, j.subject); }

SoundnessReport check_type_soundness(const MuJudgement& j) {
  MuType sigma = typecheck_mu(j.gamma, j.delta, j.subject);
  if (sigma != j.type)
    throw KernelError(Errc::IllTyped, "judgement claims " + to_string(j.type) + ", term has " + to_string(sigma));
  SoundnessReport r{j, cps_context(j.gamma, j.delta), cps_term(j), TargetType::neg(cps_type(sigma))};
  try {
    TargetType got = typecheck_target(r.context, r.image, Mode::Plain);
    if (got != r.type)
      throw KernelError(Errc::SoundnessViolation, "image has type " + to_string(got) + ", expected " +
                                                      to_string(r.type));
  } catch (const KernelError& e) {
    if (e.code() == Errc::SoundnessViolation) throw;
    throw KernelError(Errc::SoundnessViolation, std::string("image ill-typed: ") + e.what());
  }
  return r;
}

LemmaReport check_type_subst_lemma(const MuType& sigma, const std::string& x, const MuType& tau) {
  TargetType lhs = cps_type(subst_type(sigma, x, tau));
  TargetType rhs = subst_type(cps_type(sigma), x, cps_type(tau));
  return {"type-in-type", to_string(lhs), to_string(rhs), lhs == rhs};
}

LemmaReport check_term_subst_lemma(const Context& gamma, const Context& delta, const MuTerm& m, const std::string& x,
                                   const MuTerm& n) {
  TargetTerm lhs = cps_term(gamma, delta, subst_term(m, x, n));
  TargetTerm rhs = target_subst(cps_term(gamma, delta, m), x, cps_term(gamma, delta, n));
  return {"term-in-term", to_string(lhs), to_string(rhs), lhs == rhs};
}

LemmaReport check_type_in_term_lemma(const Context& gamma, const Context& delta, const MuTerm& m,
                                     const std::string& x, const MuType& sigma) {
  // M is typed with X free; the substituted side lives in the substituted
  // contexts.
  Context g2, d2;
  for (const auto& [v, t] : gamma) g2.emplace_back(v, subst_type(t, x, sigma));
  for (const auto& [v, t] : delta) d2.emplace_back(v, subst_type(t, x, sigma));
  TargetTerm lhs = cps_term(g2, d2, subst_type(m, x, sigma));
  TargetTerm rhs = target_subst_type(cps_term(gamma, delta, m), x, cps_type(sigma));
  return {"type-in-term", to_string(lhs), to_string(rhs), lhs == rhs};
}

}  // namespace mu2forge
