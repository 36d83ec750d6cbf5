#include "mu2forge/mu_kernel.hpp"

#include <algorithm>
#include <sstream>

namespace mu2forge {

// ---------------------------------------------------------------------------
// Types

MuType MuType::var(std::string name) {
  return MuType(std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
}

MuType MuType::arrow(MuType dom, MuType cod) {
  return MuType(std::make_shared<const Node>(Node{Kind::Arrow, {}, dom.node_, cod.node_}));
}

MuType MuType::forall(std::string binder, MuType body) {
  return MuType(std::make_shared<const Node>(Node{Kind::Forall, std::move(binder), body.node_, nullptr}));
}

MuType MuType::bottom() { return forall("X", var("X")); }

MuType MuType::neg(MuType t) { return arrow(std::move(t), bottom()); }

bool MuType::is_bottom() const {
  return is_forall() && body().is_var() && body().name() == name();
}

namespace {

using Scope = std::vector<std::string>;

long lookup(const Scope& s, const std::string& n) {
  for (std::size_t i = s.size(); i-- > 0;)
    if (s[i] == n) return static_cast<long>(i);
  return -1;
}

bool type_eq(const MuType& a, const MuType& b, Scope& la, Scope& lb) {
  if (a.id() == b.id() && la == lb) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MuType::Kind::Var: {
      long ia = lookup(la, a.name()), ib = lookup(lb, b.name());
      return ia == ib && (ia >= 0 || a.name() == b.name());
    }
    case MuType::Kind::Arrow:
      return type_eq(a.dom(), b.dom(), la, lb) && type_eq(a.cod(), b.cod(), la, lb);
    case MuType::Kind::Forall: {
      la.push_back(a.name());
      lb.push_back(b.name());
      bool r = type_eq(a.body(), b.body(), la, lb);
      la.pop_back();
      lb.pop_back();
      return r;
    }
  }
  return false;
}

void collect_ftv(const MuType& t, Scope& bound, NameSet& out) {
  switch (t.kind()) {
    case MuType::Kind::Var:
      if (lookup(bound, t.name()) < 0) out.insert(t.name());
      return;
    case MuType::Kind::Arrow:
      collect_ftv(t.dom(), bound, out);
      collect_ftv(t.cod(), bound, out);
      return;
    case MuType::Kind::Forall:
      bound.push_back(t.name());
      collect_ftv(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

bool operator==(const MuType& lhs, const MuType& rhs) {
  Scope la, lb;
  return type_eq(lhs, rhs, la, lb);
}

NameSet free_type_vars(const MuType& t) {
  NameSet out;
  Scope bound;
  collect_ftv(t, bound, out);
  return out;
}

MuType subst_types(const MuType& t, const std::map<std::string, MuType>& sub) {
  if (sub.empty()) return t;
  switch (t.kind()) {
    case MuType::Kind::Var: {
      auto it = sub.find(t.name());
      return it == sub.end() ? t : it->second;
    }
    case MuType::Kind::Arrow: {
      MuType d = subst_types(t.dom(), sub), c = subst_types(t.cod(), sub);
      if (d.id() == t.dom().id() && c.id() == t.cod().id()) return t;
      return MuType::arrow(d, c);
    }
    case MuType::Kind::Forall: {
      std::map<std::string, MuType> inner = sub;
      inner.erase(t.name());
      NameSet body_ftv = free_type_vars(t.body());
      NameSet range;
      bool touches = false;
      for (const auto& [k, v] : inner) {
        if (!body_ftv.count(k)) continue;
        touches = true;
        NameSet f = free_type_vars(v);
        range.insert(f.begin(), f.end());
      }
      if (!touches) return t;
      std::string binder = t.name();
      if (range.count(binder)) {
        NameSet avoid = range;
        avoid.insert(body_ftv.begin(), body_ftv.end());
        for (const auto& [k, v] : inner) avoid.insert(k);
        binder = fresh_name(binder, avoid);
        inner.insert_or_assign(t.name(), MuType::var(binder));
      }
      return MuType::forall(binder, subst_types(t.body(), inner));
    }
  }
  return t;
}

MuType subst_type(const MuType& t, const std::string& var, const MuType& replacement) {
  return subst_types(t, {{var, replacement}});
}

// ---------------------------------------------------------------------------
// Terms

MuTerm MuTerm::var(std::string name) {
  return MuTerm(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, std::nullopt, nullptr, nullptr}));
}

MuTerm MuTerm::lam(std::string binder, MuType annotation, MuTerm body) {
  return MuTerm(std::make_shared<const Node>(
      Node{Kind::Lam, std::move(binder), {}, std::move(annotation), body.node_, nullptr}));
}

MuTerm MuTerm::app(MuTerm fn, MuTerm arg) {
  return MuTerm(std::make_shared<const Node>(Node{Kind::App, {}, {}, std::nullopt, fn.node_, arg.node_}));
}

MuTerm MuTerm::tylam(std::string binder, MuTerm body) {
  return MuTerm(
      std::make_shared<const Node>(Node{Kind::TyLam, std::move(binder), {}, std::nullopt, body.node_, nullptr}));
}

MuTerm MuTerm::tyapp(MuTerm fn, MuType arg) {
  return MuTerm(std::make_shared<const Node>(Node{Kind::TyApp, {}, {}, std::move(arg), fn.node_, nullptr}));
}

MuTerm MuTerm::mu(std::string binder, MuType annotation, std::string target, MuTerm body) {
  return MuTerm(std::make_shared<const Node>(
      Node{Kind::Mu, std::move(binder), std::move(target), std::move(annotation), body.node_, nullptr}));
}

namespace {

struct TermScopes {
  Scope vars, names, tvars;
};

bool type_eq_in(const MuType& a, const MuType& b, TermScopes& sa, TermScopes& sb) {
  return type_eq(a, b, sa.tvars, sb.tvars);
}

bool term_eq(const MuTerm& a, const MuTerm& b, TermScopes& sa, TermScopes& sb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MuTerm::Kind::Var: {
      long ia = lookup(sa.vars, a.name()), ib = lookup(sb.vars, b.name());
      return ia == ib && (ia >= 0 || a.name() == b.name());
    }
    case MuTerm::Kind::Lam: {
      if (!type_eq_in(a.type(), b.type(), sa, sb)) return false;
      sa.vars.push_back(a.name());
      sb.vars.push_back(b.name());
      bool r = term_eq(a.body(), b.body(), sa, sb);
      sa.vars.pop_back();
      sb.vars.pop_back();
      return r;
    }
    case MuTerm::Kind::App:
      return term_eq(a.fn(), b.fn(), sa, sb) && term_eq(a.arg(), b.arg(), sa, sb);
    case MuTerm::Kind::TyLam: {
      sa.tvars.push_back(a.name());
      sb.tvars.push_back(b.name());
      bool r = term_eq(a.body(), b.body(), sa, sb);
      sa.tvars.pop_back();
      sb.tvars.pop_back();
      return r;
    }
    case MuTerm::Kind::TyApp:
      return type_eq_in(a.type(), b.type(), sa, sb) && term_eq(a.fn(), b.fn(), sa, sb);
    case MuTerm::Kind::Mu: {
      if (!type_eq_in(a.type(), b.type(), sa, sb)) return false;
      sa.names.push_back(a.name());
      sb.names.push_back(b.name());
      long ia = lookup(sa.names, a.target()), ib = lookup(sb.names, b.target());
      bool r = ia == ib && (ia >= 0 || a.target() == b.target()) && term_eq(a.body(), b.body(), sa, sb);
      sa.names.pop_back();
      sb.names.pop_back();
      return r;
    }
  }
  return false;
}

void collect_free(const MuTerm& m, TermScopes& s, NameSet* fv, NameSet* fn, NameSet* ftv) {
  auto types = [&](const MuType& t) {
    if (!ftv) return;
    collect_ftv(t, s.tvars, *ftv);
  };
  switch (m.kind()) {
    case MuTerm::Kind::Var:
      if (fv && lookup(s.vars, m.name()) < 0) fv->insert(m.name());
      return;
    case MuTerm::Kind::Lam:
      types(m.type());
      s.vars.push_back(m.name());
      collect_free(m.body(), s, fv, fn, ftv);
      s.vars.pop_back();
      return;
    case MuTerm::Kind::App:
      collect_free(m.fn(), s, fv, fn, ftv);
      collect_free(m.arg(), s, fv, fn, ftv);
      return;
    case MuTerm::Kind::TyLam:
      s.tvars.push_back(m.name());
      collect_free(m.body(), s, fv, fn, ftv);
      s.tvars.pop_back();
      return;
    case MuTerm::Kind::TyApp:
      types(m.type());
      collect_free(m.fn(), s, fv, fn, ftv);
      return;
    case MuTerm::Kind::Mu:
      types(m.type());
      s.names.push_back(m.name());
      if (fn && lookup(s.names, m.target()) < 0) fn->insert(m.target());
      collect_free(m.body(), s, fv, fn, ftv);
      s.names.pop_back();
      return;
  }
}

void collect_all(const MuType& t, NameSet& out) {
  out.insert(t.name());
  if (t.is_arrow()) {
    collect_all(t.dom(), out);
    collect_all(t.cod(), out);
  } else if (t.is_forall()) {
    collect_all(t.body(), out);
  }
}

void collect_all(const MuTerm& m, NameSet& out) {
  if (!m.name().empty()) out.insert(m.name());
  if (!m.target().empty()) out.insert(m.target());
  switch (m.kind()) {
    case MuTerm::Kind::Var: return;
    case MuTerm::Kind::Lam:
    case MuTerm::Kind::Mu:
      collect_all(m.type(), out);
      collect_all(m.body(), out);
      return;
    case MuTerm::Kind::TyLam: collect_all(m.body(), out); return;
    case MuTerm::Kind::App:
      collect_all(m.fn(), out);
      collect_all(m.arg(), out);
      return;
    case MuTerm::Kind::TyApp:
      collect_all(m.type(), out);
      collect_all(m.fn(), out);
      return;
  }
}

}  // namespace

bool operator==(const MuTerm& lhs, const MuTerm& rhs) {
  TermScopes sa, sb;
  return term_eq(lhs, rhs, sa, sb);
}

NameSet free_vars(const MuTerm& m) {
  NameSet out;
  TermScopes s;
  collect_free(m, s, &out, nullptr, nullptr);
  return out;
}

NameSet free_names(const MuTerm& m) {
  NameSet out;
  TermScopes s;
  collect_free(m, s, nullptr, &out, nullptr);
  return out;
}

NameSet free_type_vars(const MuTerm& m) {
  NameSet out;
  TermScopes s;
  collect_free(m, s, nullptr, nullptr, &out);
  return out;
}

NameSet all_identifiers(const MuTerm& m) {
  NameSet out;
  collect_all(m, out);
  return out;
}

std::size_t term_size(const MuTerm& m) {
  switch (m.kind()) {
    case MuTerm::Kind::Var: return 1;
    case MuTerm::Kind::Lam:
    case MuTerm::Kind::TyLam:
    case MuTerm::Kind::Mu:
    case MuTerm::Kind::TyApp: return 1 + term_size(m.body());
    case MuTerm::Kind::App: return 1 + term_size(m.fn()) + term_size(m.arg());
  }
  return 1;
}

MuTerm named(const std::string& target, const MuTerm& body) {
  NameSet avoid = free_names(body);
  avoid.insert(target);
  std::string binder = fresh_name("d", avoid);
  return MuTerm::mu(binder, MuType::bottom(), target, body);
}

MuTerm bold_mu(const std::string& binder, const MuType& annotation, const MuTerm& body) {
  return MuTerm::mu(binder, annotation, binder, MuTerm::tyapp(body, annotation));
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

struct NameAction {
  std::string target;
  MixedMode mode;
};

struct TermSubst {
  std::map<std::string, MuTerm> vars;
  std::map<std::string, MuType> types;
  std::map<std::string, NameAction> names;
  // Identifiers that occur free in the range; binders among them are renamed.
  NameSet range_vars, range_names, range_types;

  bool empty() const { return vars.empty() && types.empty() && names.empty(); }
};

void add_range(TermSubst& s, const MuTerm& m) {
  NameSet fv, fn, ftv;
  TermScopes sc;
  collect_free(m, sc, &fv, &fn, &ftv);
  s.range_vars.insert(fv.begin(), fv.end());
  s.range_names.insert(fn.begin(), fn.end());
  s.range_types.insert(ftv.begin(), ftv.end());
}

void add_range(TermSubst& s, const MuType& t) {
  NameSet f = free_type_vars(t);
  s.range_types.insert(f.begin(), f.end());
}

void finish_ranges(TermSubst& s) {
  for (const auto& [k, v] : s.vars) add_range(s, v);
  for (const auto& [k, v] : s.types) add_range(s, v);
  for (const auto& [k, a] : s.names) {
    s.range_names.insert(a.target);
    if (a.mode.term) add_range(s, *a.mode.term);
    if (a.mode.type) add_range(s, *a.mode.type);
  }
}

MuTerm apply(const MuTerm& m, const TermSubst& s);

MuTerm apply_lam(const MuTerm& m, const TermSubst& s) {
  TermSubst inner = s;
  inner.vars.erase(m.name());
  MuType ann = subst_types(m.type(), s.types);
  std::string binder = m.name();
  if (inner.range_vars.count(binder) && !inner.empty()) {
    NameSet avoid = inner.range_vars;
    NameSet fv = free_vars(m.body());
    avoid.insert(fv.begin(), fv.end());
    for (const auto& [k, v] : inner.vars) avoid.insert(k);
    binder = fresh_name(binder, avoid);
    inner.vars.insert_or_assign(m.name(), MuTerm::var(binder));
    inner.range_vars.insert(binder);
  }
  return MuTerm::lam(binder, ann, apply(m.body(), inner));
}

MuTerm apply_tylam(const MuTerm& m, const TermSubst& s) {
  TermSubst inner = s;
  inner.types.erase(m.name());
  std::string binder = m.name();
  if (inner.range_types.count(binder) && !inner.empty()) {
    NameSet avoid = inner.range_types;
    NameSet ftv = free_type_vars(m.body());
    avoid.insert(ftv.begin(), ftv.end());
    for (const auto& [k, v] : inner.types) avoid.insert(k);
    binder = fresh_name(binder, avoid);
    inner.types.insert_or_assign(m.name(), MuType::var(binder));
    inner.range_types.insert(binder);
  }
  return MuTerm::tylam(binder, apply(m.body(), inner));
}

MuTerm apply_mu(const MuTerm& m, const TermSubst& s) {
  TermSubst inner = s;
  inner.names.erase(m.name());
  MuType ann = subst_types(m.type(), s.types);
  std::string binder = m.name();
  if (inner.range_names.count(binder) && !inner.empty()) {
    NameSet avoid = inner.range_names;
    NameSet fn = free_names(m.body());
    avoid.insert(fn.begin(), fn.end());
    avoid.insert(m.target());
    for (const auto& [k, v] : inner.names) avoid.insert(k);
    binder = fresh_name(binder, avoid);
    inner.names[m.name()] = NameAction{binder, MixedMode::rename()};
    inner.range_names.insert(binder);
  }
  MuTerm body = apply(m.body(), inner);
  auto it = inner.names.find(m.target());
  if (it == inner.names.end()) return MuTerm::mu(binder, ann, m.target(), body);
  const NameAction& act = it->second;
  switch (act.mode.kind) {
    case MixedMode::Kind::Rename: return MuTerm::mu(binder, ann, act.target, body);
    case MixedMode::Kind::AppArg: return MuTerm::mu(binder, ann, act.target, MuTerm::app(body, *act.mode.term));
    case MixedMode::Kind::TyArg: return MuTerm::mu(binder, ann, act.target, MuTerm::tyapp(body, *act.mode.type));
  }
  return m;
}

MuTerm apply(const MuTerm& m, const TermSubst& s) {
  if (s.empty()) return m;
  switch (m.kind()) {
    case MuTerm::Kind::Var: {
      auto it = s.vars.find(m.name());
      return it == s.vars.end() ? m : it->second;
    }
    case MuTerm::Kind::Lam: return apply_lam(m, s);
    case MuTerm::Kind::App: return MuTerm::app(apply(m.fn(), s), apply(m.arg(), s));
    case MuTerm::Kind::TyLam: return apply_tylam(m, s);
    case MuTerm::Kind::TyApp: return MuTerm::tyapp(apply(m.fn(), s), subst_types(m.type(), s.types));
    case MuTerm::Kind::Mu: return apply_mu(m, s);
  }
  return m;
}

}  // namespace

MuTerm subst_term(const MuTerm& m, const std::string& var, const MuTerm& replacement) {
  TermSubst s;
  s.vars.emplace(var, replacement);
  finish_ranges(s);
  return apply(m, s);
}

MuTerm subst_type(const MuTerm& m, const std::string& var, const MuType& replacement) {
  TermSubst s;
  s.types.emplace(var, replacement);
  finish_ranges(s);
  return apply(m, s);
}

MuTerm rename_name(const MuTerm& m, const std::string& from, const std::string& to) {
  return mixed_subst(m, from, MixedMode::rename(), to);
}

MuTerm mixed_subst(const MuTerm& m, const std::string& alpha, const MixedMode& mode, const std::string& beta) {
  TermSubst s;
  s.names.emplace(alpha, NameAction{beta, mode});
  finish_ranges(s);
  return apply(m, s);
}

// ---------------------------------------------------------------------------
// Typing

namespace {

const MuType* find_in(const Context& ctx, const std::string& n) {
  for (std::size_t i = ctx.size(); i-- > 0;)
    if (ctx[i].first == n) return &ctx[i].second;
  return nullptr;
}

MuType check(Context& gamma, Context& delta, const MuTerm& m) {
  switch (m.kind()) {
    case MuTerm::Kind::Var: {
      const MuType* t = find_in(gamma, m.name());
      if (!t) throw KernelError(Errc::UnboundVariable, m.name());
      return *t;
    }
    case MuTerm::Kind::Lam: {
      gamma.emplace_back(m.name(), m.type());
      MuType body = check(gamma, delta, m.body());
      gamma.pop_back();
      return MuType::arrow(m.type(), body);
    }
    case MuTerm::Kind::App: {
      MuType f = check(gamma, delta, m.fn());
      if (!f.is_arrow())
        throw KernelError(Errc::TypeMismatch, "app: function has type " + to_string(f));
      MuType a = check(gamma, delta, m.arg());
      if (a != f.dom())
        throw KernelError(Errc::TypeMismatch,
                          "app: expected argument " + to_string(f.dom()) + ", got " + to_string(a));
      return f.cod();
    }
    case MuTerm::Kind::TyLam: {
      for (const Context* ctx : {&gamma, &delta})
        for (const auto& [n, t] : *ctx)
          if (free_type_vars(t).count(m.name()))
            throw KernelError(Errc::EscapingTypeVariable,
                              "type abstraction over " + m.name() + " free in the type of " + n);
      MuType body = check(gamma, delta, m.body());
      return MuType::forall(m.name(), body);
    }
    case MuTerm::Kind::TyApp: {
      MuType f = check(gamma, delta, m.fn());
      if (!f.is_forall())
        throw KernelError(Errc::TypeMismatch, "type application: function has type " + to_string(f));
      return subst_type(f.body(), f.name(), m.type());
    }
    case MuTerm::Kind::Mu: {
      delta.emplace_back(m.name(), m.type());
      MuType body = check(gamma, delta, m.body());
      const MuType* target = find_in(delta, m.target());
      if (!target) {
        delta.pop_back();
        throw KernelError(Errc::UnboundName, m.target());
      }
      bool ok = *target == body;
      MuType target_type = *target;
      delta.pop_back();
      if (!ok)
        throw KernelError(Errc::TypeMismatch, "mu: name " + m.target() + " has type " + to_string(target_type) +
                                                  ", body has type " + to_string(body));
      return m.type();
    }
  }
  throw KernelError(Errc::IllTyped, "unknown term");
}

}  // namespace

MuType typecheck_mu(const Context& gamma, const Context& delta, const MuTerm& term) {
  Context g = gamma, d = delta;
  return check(g, d, term);
}

MuJudgement judge(const Context& gamma, const Context& delta, const MuTerm& term) {
  return MuJudgement{gamma, delta, term, typecheck_mu(gamma, delta, term)};
}

// ---------------------------------------------------------------------------
// Printing

namespace {

struct Glyphs {
  const char* forall;
  const char* arrow;
  const char* neg;
  const char* bot;
  const char* lam;
  const char* tylam;
  const char* mu;
  const char* bold;
};

const Glyphs kAscii{"forall ", " -> ", "not ", "bot", "\\", "/\\", "mu ", "bmu "};
const Glyphs kUnicode{"∀", " → ", "¬", "⊥", "λ", "Λ", "μ", "𝛍"};

const Glyphs& glyphs(PrintStyle s) { return s == PrintStyle::Ascii ? kAscii : kUnicode; }

bool is_neg(const MuType& t) { return t.is_arrow() && t.cod().is_bottom(); }

void print_type(std::ostringstream& os, const MuType& t, PrintStyle st, bool atomic);

void print_type(std::ostringstream& os, const MuType& t, PrintStyle st, bool atomic) {
  const Glyphs& g = glyphs(st);
  if (t.is_bottom()) {
    os << g.bot;
    return;
  }
  if (t.is_var()) {
    os << t.name();
    return;
  }
  if (is_neg(t)) {
    os << g.neg;
    print_type(os, t.dom(), st, true);
    return;
  }
  if (atomic) os << '(';
  if (t.is_arrow()) {
    print_type(os, t.dom(), st, true);
    os << g.arrow;
    print_type(os, t.cod(), st, false);
  } else {
    os << g.forall << t.name() << ". ";
    print_type(os, t.body(), st, false);
  }
  if (atomic) os << ')';
}

// Annotation positions are terminated by '.', so quantified types need
// brackets there.
void print_annotation(std::ostringstream& os, const MuType& t, PrintStyle st) {
  bool wrap = t.is_forall() && !t.is_bottom();
  if (wrap) os << '(';
  print_type(os, t, st, false);
  if (wrap) os << ')';
}

enum class Prec { Full, Head, Atom };

std::optional<MuTerm> as_named(const MuTerm& m) {
  if (m.is(MuTerm::Kind::Mu) && m.type().is_bottom() && m.name() != m.target() &&
      !free_names(m.body()).count(m.name()))
    return m.body();
  return std::nullopt;
}

std::optional<MuTerm> as_bold(const MuTerm& m) {
  if (m.is(MuTerm::Kind::Mu) && m.name() == m.target() && m.body().is(MuTerm::Kind::TyApp) &&
      m.body().type() == m.type())
    return m.body().fn();
  return std::nullopt;
}

void print_term(std::ostringstream& os, const MuTerm& m, PrintStyle st, Prec p) {
  const Glyphs& g = glyphs(st);
  auto open = [&](bool binderish) {
    bool wrap = binderish ? p != Prec::Full : p == Prec::Atom;
    if (wrap) os << '(';
    return wrap;
  };
  switch (m.kind()) {
    case MuTerm::Kind::Var: os << m.name(); return;
    case MuTerm::Kind::Lam: {
      bool w = open(true);
      os << g.lam << m.name() << ':';
      print_annotation(os, m.type(), st);
      os << ". ";
      print_term(os, m.body(), st, Prec::Full);
      if (w) os << ')';
      return;
    }
    case MuTerm::Kind::TyLam: {
      bool w = open(true);
      os << g.tylam << m.name() << ". ";
      print_term(os, m.body(), st, Prec::Full);
      if (w) os << ')';
      return;
    }
    case MuTerm::Kind::Mu: {
      bool w = open(true);
      if (auto b = as_bold(m)) {
        os << g.bold << m.name() << ':';
        print_annotation(os, m.type(), st);
        os << ". ";
        print_term(os, *b, st, Prec::Full);
      } else if (auto n = as_named(m)) {
        os << '[' << m.target() << "] ";
        print_term(os, *n, st, Prec::Full);
      } else {
        os << g.mu << m.name() << ':';
        print_annotation(os, m.type(), st);
        os << ". [" << m.target() << "] ";
        print_term(os, m.body(), st, Prec::Full);
      }
      if (w) os << ')';
      return;
    }
    case MuTerm::Kind::App: {
      bool w = open(false);
      print_term(os, m.fn(), st, Prec::Head);
      os << ' ';
      print_term(os, m.arg(), st, Prec::Atom);
      if (w) os << ')';
      return;
    }
    case MuTerm::Kind::TyApp: {
      bool w = open(false);
      print_term(os, m.fn(), st, Prec::Head);
      os << " [";
      print_type(os, m.type(), st, false);
      os << ']';
      if (w) os << ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const MuType& t, PrintStyle style) {
  std::ostringstream os;
  print_type(os, t, style, false);
  return os.str();
}

std::string to_string(const MuTerm& m, PrintStyle style) {
  std::ostringstream os;
  print_term(os, m, style, Prec::Full);
  return os.str();
}

}  // namespace mu2forge
