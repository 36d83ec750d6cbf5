#include "mu2forge/target_kernel.hpp"

#include <sstream>

namespace mu2forge {

// ---------------------------------------------------------------------------
// Types

TargetType TargetType::var(std::string name) {
  return TargetType(std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
}

TargetType TargetType::answer() {
  static const TargetType r(std::make_shared<const Node>(Node{Kind::Answer, "R", nullptr, nullptr}));
  return r;
}

TargetType TargetType::neg(TargetType t) {
  return TargetType(std::make_shared<const Node>(Node{Kind::Neg, {}, t.node_, nullptr}));
}

TargetType TargetType::conj(TargetType l, TargetType r) {
  return TargetType(std::make_shared<const Node>(Node{Kind::Conj, {}, l.node_, r.node_}));
}

TargetType TargetType::exists(std::string binder, TargetType body) {
  return TargetType(std::make_shared<const Node>(Node{Kind::Exists, std::move(binder), body.node_, nullptr}));
}

TargetType TargetType::top() { return exists("X", var("X")); }

bool TargetType::is_top() const { return is(Kind::Exists) && body().is(Kind::Var) && body().name() == name(); }

namespace {

using Scope = std::vector<std::string>;

long lookup(const Scope& s, const std::string& n) {
  for (std::size_t i = s.size(); i-- > 0;)
    if (s[i] == n) return static_cast<long>(i);
  return -1;
}

bool type_eq(const TargetType& a, const TargetType& b, Scope& la, Scope& lb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TargetType::Kind::Var: {
      long ia = lookup(la, a.name()), ib = lookup(lb, b.name());
      return ia == ib && (ia >= 0 || a.name() == b.name());
    }
    case TargetType::Kind::Answer: return true;
    case TargetType::Kind::Neg: return type_eq(a.body(), b.body(), la, lb);
    case TargetType::Kind::Conj:
      return type_eq(a.left(), b.left(), la, lb) && type_eq(a.right(), b.right(), la, lb);
    case TargetType::Kind::Exists: {
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

void collect_ftv(const TargetType& t, Scope& bound, NameSet& out) {
  switch (t.kind()) {
    case TargetType::Kind::Var:
      if (lookup(bound, t.name()) < 0) out.insert(t.name());
      return;
    case TargetType::Kind::Answer: return;
    case TargetType::Kind::Neg: collect_ftv(t.body(), bound, out); return;
    case TargetType::Kind::Conj:
      collect_ftv(t.left(), bound, out);
      collect_ftv(t.right(), bound, out);
      return;
    case TargetType::Kind::Exists:
      bound.push_back(t.name());
      collect_ftv(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

bool operator==(const TargetType& lhs, const TargetType& rhs) {
  if (lhs.id() == rhs.id()) return true;
  Scope la, lb;
  return type_eq(lhs, rhs, la, lb);
}

NameSet free_type_vars(const TargetType& t) {
  NameSet out;
  Scope bound;
  collect_ftv(t, bound, out);
  return out;
}

TargetType subst_types(const TargetType& t, const std::map<std::string, TargetType>& sub) {
  if (sub.empty()) return t;
  switch (t.kind()) {
    case TargetType::Kind::Var: {
      auto it = sub.find(t.name());
      return it == sub.end() ? t : it->second;
    }
    case TargetType::Kind::Answer: return t;
    case TargetType::Kind::Neg: return TargetType::neg(subst_types(t.body(), sub));
    case TargetType::Kind::Conj: return TargetType::conj(subst_types(t.left(), sub), subst_types(t.right(), sub));
    case TargetType::Kind::Exists: {
      std::map<std::string, TargetType> inner = sub;
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
        inner.insert_or_assign(t.name(), TargetType::var(binder));
      }
      return TargetType::exists(binder, subst_types(t.body(), inner));
    }
  }
  return t;
}

TargetType subst_type(const TargetType& t, const std::string& var, const TargetType& replacement) {
  return subst_types(t, {{var, replacement}});
}

// ---------------------------------------------------------------------------
// Terms

TargetTerm TargetTerm::var(std::string name) {
  return TargetTerm(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, {}, {}, nullptr, nullptr}));
}

TargetTerm TargetTerm::lam(std::string binder, TargetType annotation, TargetTerm body) {
  return TargetTerm(std::make_shared<const Node>(
      Node{Kind::Lam, std::move(binder), {}, std::move(annotation), {}, body.node_, nullptr}));
}

TargetTerm TargetTerm::app(TargetTerm fn, TargetTerm arg) {
  return TargetTerm(std::make_shared<const Node>(Node{Kind::App, {}, {}, {}, {}, fn.node_, arg.node_}));
}

TargetTerm TargetTerm::pair(TargetTerm fst, TargetTerm snd) {
  return TargetTerm(std::make_shared<const Node>(Node{Kind::Pair, {}, {}, {}, {}, fst.node_, snd.node_}));
}

TargetTerm TargetTerm::let_pair(std::string x, std::string y, TargetTerm scrutinee, TargetTerm body) {
  return TargetTerm(std::make_shared<const Node>(
      Node{Kind::LetPair, std::move(x), std::move(y), {}, {}, scrutinee.node_, body.node_}));
}

TargetTerm TargetTerm::pack(TargetType witness, TargetTerm payload, TargetType as) {
  return TargetTerm(std::make_shared<const Node>(
      Node{Kind::Pack, {}, {}, std::move(witness), std::move(as), payload.node_, nullptr}));
}

TargetTerm TargetTerm::let_pack(std::string tvar, std::string x, TargetTerm scrutinee, TargetTerm body) {
  return TargetTerm(std::make_shared<const Node>(
      Node{Kind::LetPack, std::move(tvar), std::move(x), {}, {}, scrutinee.node_, body.node_}));
}

TargetTerm TargetTerm::star() {
  static const TargetTerm s(std::make_shared<const Node>(Node{Kind::Star, {}, {}, {}, {}, nullptr, nullptr}));
  return s;
}

std::size_t TargetTerm::arity() const {
  switch (kind()) {
    case Kind::Var:
    case Kind::Star: return 0;
    case Kind::Lam:
    case Kind::Pack: return 1;
    default: return 2;
  }
}

TargetTerm TargetTerm::body() const { return kind() == Kind::Lam ? child(0) : child(1); }

TargetTerm TargetTerm::with_children(const TargetTerm& c0, const std::optional<TargetTerm>& c1) const {
  Node n = *node_;
  n.a = c0.node_;
  if (c1) n.b = c1->node_;
  return TargetTerm(std::make_shared<const Node>(std::move(n)));
}

namespace {

struct Scopes {
  Scope vars, tvars;
};

bool term_eq(const TargetTerm& a, const TargetTerm& b, Scopes& sa, Scopes& sb) {
  if (a.kind() != b.kind()) return false;
  auto teq = [&](const TargetType& x, const TargetType& y) { return type_eq(x, y, sa.tvars, sb.tvars); };
  switch (a.kind()) {
    case TargetTerm::Kind::Var: {
      long ia = lookup(sa.vars, a.name()), ib = lookup(sb.vars, b.name());
      return ia == ib && (ia >= 0 || a.name() == b.name());
    }
    case TargetTerm::Kind::Star: return true;
    case TargetTerm::Kind::Lam: {
      if (!teq(a.type(), b.type())) return false;
      sa.vars.push_back(a.name());
      sb.vars.push_back(b.name());
      bool r = term_eq(a.body(), b.body(), sa, sb);
      sa.vars.pop_back();
      sb.vars.pop_back();
      return r;
    }
    case TargetTerm::Kind::App:
    case TargetTerm::Kind::Pair:
      return term_eq(a.child(0), b.child(0), sa, sb) && term_eq(a.child(1), b.child(1), sa, sb);
    case TargetTerm::Kind::Pack:
      return teq(a.type(), b.type()) && teq(a.pack_type(), b.pack_type()) &&
             term_eq(a.payload(), b.payload(), sa, sb);
    case TargetTerm::Kind::LetPair: {
      if (!term_eq(a.scrutinee(), b.scrutinee(), sa, sb)) return false;
      sa.vars.push_back(a.name());
      sa.vars.push_back(a.name2());
      sb.vars.push_back(b.name());
      sb.vars.push_back(b.name2());
      bool r = term_eq(a.body(), b.body(), sa, sb);
      sa.vars.resize(sa.vars.size() - 2);
      sb.vars.resize(sb.vars.size() - 2);
      return r;
    }
    case TargetTerm::Kind::LetPack: {
      if (!term_eq(a.scrutinee(), b.scrutinee(), sa, sb)) return false;
      sa.tvars.push_back(a.name());
      sb.tvars.push_back(b.name());
      sa.vars.push_back(a.name2());
      sb.vars.push_back(b.name2());
      bool r = term_eq(a.body(), b.body(), sa, sb);
      sa.tvars.pop_back();
      sb.tvars.pop_back();
      sa.vars.pop_back();
      sb.vars.pop_back();
      return r;
    }
  }
  return false;
}

void collect_free(const TargetTerm& m, Scopes& s, NameSet* fv, NameSet* ftv) {
  auto types = [&](const TargetType& t) {
    if (ftv) collect_ftv(t, s.tvars, *ftv);
  };
  switch (m.kind()) {
    case TargetTerm::Kind::Var:
      if (fv && lookup(s.vars, m.name()) < 0) fv->insert(m.name());
      return;
    case TargetTerm::Kind::Star: return;
    case TargetTerm::Kind::Lam:
      types(m.type());
      s.vars.push_back(m.name());
      collect_free(m.body(), s, fv, ftv);
      s.vars.pop_back();
      return;
    case TargetTerm::Kind::App:
    case TargetTerm::Kind::Pair:
      collect_free(m.child(0), s, fv, ftv);
      collect_free(m.child(1), s, fv, ftv);
      return;
    case TargetTerm::Kind::Pack:
      types(m.type());
      types(m.pack_type());
      collect_free(m.payload(), s, fv, ftv);
      return;
    case TargetTerm::Kind::LetPair:
      collect_free(m.scrutinee(), s, fv, ftv);
      s.vars.push_back(m.name());
      s.vars.push_back(m.name2());
      collect_free(m.body(), s, fv, ftv);
      s.vars.resize(s.vars.size() - 2);
      return;
    case TargetTerm::Kind::LetPack:
      collect_free(m.scrutinee(), s, fv, ftv);
      s.tvars.push_back(m.name());
      s.vars.push_back(m.name2());
      collect_free(m.body(), s, fv, ftv);
      s.tvars.pop_back();
      s.vars.pop_back();
      return;
  }
}

void collect_all(const TargetType& t, NameSet& out) {
  if (!t.name().empty()) out.insert(t.name());
  if (t.is(TargetType::Kind::Neg) || t.is(TargetType::Kind::Exists)) collect_all(t.body(), out);
  if (t.is(TargetType::Kind::Conj)) {
    collect_all(t.left(), out);
    collect_all(t.right(), out);
  }
}

void collect_all(const TargetTerm& m, NameSet& out) {
  if (!m.name().empty()) out.insert(m.name());
  if (!m.name2().empty()) out.insert(m.name2());
  if (m.is(TargetTerm::Kind::Lam)) collect_all(m.type(), out);
  if (m.is(TargetTerm::Kind::Pack)) {
    collect_all(m.type(), out);
    collect_all(m.pack_type(), out);
  }
  for (std::size_t i = 0; i < m.arity(); ++i) collect_all(m.child(i), out);
}

}  // namespace

bool operator==(const TargetTerm& lhs, const TargetTerm& rhs) {
  if (lhs.id() == rhs.id()) return true;
  Scopes sa, sb;
  return term_eq(lhs, rhs, sa, sb);
}

NameSet free_vars(const TargetTerm& m) {
  NameSet out;
  Scopes s;
  collect_free(m, s, &out, nullptr);
  return out;
}

NameSet free_type_vars(const TargetTerm& m) {
  NameSet out;
  Scopes s;
  collect_free(m, s, nullptr, &out);
  return out;
}

NameSet all_identifiers(const TargetTerm& m) {
  NameSet out;
  collect_all(m, out);
  return out;
}

std::size_t term_size(const TargetTerm& m) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < m.arity(); ++i) n += term_size(m.child(i));
  return n;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

struct Subst {
  std::map<std::string, TargetTerm> vars;
  std::map<std::string, TargetType> types;
  NameSet range_vars, range_types;
  bool empty() const { return vars.empty() && types.empty(); }
};

TargetTerm apply(const TargetTerm& m, const Subst& s);

// Drops `name` from the variable map and renames it if it would capture.
std::string bind_var(Subst& inner, const std::string& name, const NameSet& avoid_extra) {
  inner.vars.erase(name);
  if (!inner.range_vars.count(name) || inner.empty()) return name;
  NameSet avoid = inner.range_vars;
  avoid.insert(avoid_extra.begin(), avoid_extra.end());
  for (const auto& [k, v] : inner.vars) avoid.insert(k);
  std::string fresh = fresh_name(name, avoid);
  inner.vars.insert_or_assign(name, TargetTerm::var(fresh));
  inner.range_vars.insert(fresh);
  return fresh;
}

std::string bind_tvar(Subst& inner, const std::string& name, const NameSet& avoid_extra) {
  inner.types.erase(name);
  if (!inner.range_types.count(name) || inner.empty()) return name;
  NameSet avoid = inner.range_types;
  avoid.insert(avoid_extra.begin(), avoid_extra.end());
  for (const auto& [k, v] : inner.types) avoid.insert(k);
  std::string fresh = fresh_name(name, avoid);
  inner.types.insert_or_assign(name, TargetType::var(fresh));
  inner.range_types.insert(fresh);
  return fresh;
}

TargetTerm apply(const TargetTerm& m, const Subst& s) {
  if (s.empty()) return m;
  switch (m.kind()) {
    case TargetTerm::Kind::Var: {
      auto it = s.vars.find(m.name());
      return it == s.vars.end() ? m : it->second;
    }
    case TargetTerm::Kind::Star: return m;
    case TargetTerm::Kind::Lam: {
      Subst inner = s;
      std::string x = bind_var(inner, m.name(), free_vars(m.body()));
      return TargetTerm::lam(x, subst_types(m.type(), s.types), apply(m.body(), inner));
    }
    case TargetTerm::Kind::App: return TargetTerm::app(apply(m.fn(), s), apply(m.arg(), s));
    case TargetTerm::Kind::Pair: return TargetTerm::pair(apply(m.fst(), s), apply(m.snd(), s));
    case TargetTerm::Kind::Pack:
      return TargetTerm::pack(subst_types(m.type(), s.types), apply(m.payload(), s),
                              subst_types(m.pack_type(), s.types));
    case TargetTerm::Kind::LetPair: {
      TargetTerm scrut = apply(m.scrutinee(), s);
      Subst inner = s;
      NameSet fv = free_vars(m.body());
      fv.insert(m.name());
      fv.insert(m.name2());
      std::string x = bind_var(inner, m.name(), fv);
      fv.insert(x);
      std::string y = bind_var(inner, m.name2(), fv);
      return TargetTerm::let_pair(x, y, scrut, apply(m.body(), inner));
    }
    case TargetTerm::Kind::LetPack: {
      TargetTerm scrut = apply(m.scrutinee(), s);
      Subst inner = s;
      std::string tv = bind_tvar(inner, m.name(), free_type_vars(m.body()));
      std::string x = bind_var(inner, m.name2(), free_vars(m.body()));
      return TargetTerm::let_pack(tv, x, scrut, apply(m.body(), inner));
    }
  }
  return m;
}

}  // namespace

TargetTerm target_subst(const TargetTerm& m, const std::map<std::string, TargetTerm>& vars,
                        const std::map<std::string, TargetType>& types) {
  Subst s{vars, types, {}, {}};
  for (const auto& [k, v] : vars) {
    NameSet fv = free_vars(v), ftv = free_type_vars(v);
    s.range_vars.insert(fv.begin(), fv.end());
    s.range_types.insert(ftv.begin(), ftv.end());
  }
  for (const auto& [k, v] : types) {
    NameSet ftv = free_type_vars(v);
    s.range_types.insert(ftv.begin(), ftv.end());
  }
  return apply(m, s);
}

TargetTerm target_subst(const TargetTerm& m, const std::string& var, const TargetTerm& replacement) {
  return target_subst(m, {{var, replacement}}, {});
}

TargetTerm target_subst_type(const TargetTerm& m, const std::string& var, const TargetType& replacement) {
  return target_subst(m, {}, {{var, replacement}});
}

// ---------------------------------------------------------------------------
// Typing

namespace {

struct Checker {
  TargetContext ctx;
  Mode mode;

  const TargetType* find(const std::string& n) const {
    for (std::size_t i = ctx.size(); i-- > 0;)
      if (ctx[i].first == n) return &ctx[i].second;
    return nullptr;
  }

  bool tvar_free_in_context(const std::string& x) const {
    for (const auto& [n, t] : ctx)
      if (free_type_vars(t).count(x)) return true;
    return false;
  }

  TargetType check(const TargetTerm& m) {
    switch (m.kind()) {
      case TargetTerm::Kind::Var: {
        const TargetType* t = find(m.name());
        if (!t) throw KernelError(Errc::UnboundVariable, m.name());
        return *t;
      }
      case TargetTerm::Kind::Star:
        if (mode != Mode::Parametric) throw KernelError(Errc::StarInPlainMode, "* requires parametric mode");
        return TargetType::top();
      case TargetTerm::Kind::Lam: {
        ctx.emplace_back(m.name(), m.type());
        TargetType body = check(m.body());
        ctx.pop_back();
        if (!body.is(TargetType::Kind::Answer))
          throw KernelError(Errc::NonAnswerBody, "body of \\" + m.name() + " has type " + to_string(body));
        return TargetType::neg(m.type());
      }
      case TargetTerm::Kind::App: {
        TargetType f = check(m.fn());
        if (!f.is(TargetType::Kind::Neg))
          throw KernelError(Errc::TypeMismatch, "app: function has type " + to_string(f));
        TargetType a = check(m.arg());
        if (a != f.body())
          throw KernelError(Errc::TypeMismatch,
                            "app: expected argument " + to_string(f.body()) + ", got " + to_string(a));
        return TargetType::answer();
      }
      case TargetTerm::Kind::Pair: return TargetType::conj(check(m.fst()), check(m.snd()));
      case TargetTerm::Kind::Pack: {
        TargetType as = m.pack_type();
        if (!as.is(TargetType::Kind::Exists))
          throw KernelError(Errc::TypeMismatch, "pack annotated with non-existential " + to_string(as));
        TargetType expected = subst_type(as.body(), as.name(), m.type());
        TargetType got = check(m.payload());
        if (got != expected)
          throw KernelError(Errc::TypeMismatch, "pack: expected payload " + to_string(expected) + ", got " +
                                                    to_string(got));
        return as;
      }
      case TargetTerm::Kind::LetPair: {
        TargetType s = check(m.scrutinee());
        if (!s.is(TargetType::Kind::Conj))
          throw KernelError(Errc::TypeMismatch, "let-pair: scrutinee has type " + to_string(s));
        ctx.emplace_back(m.name(), s.left());
        ctx.emplace_back(m.name2(), s.right());
        TargetType body = check(m.body());
        ctx.erase(ctx.begin() + static_cast<long>(ctx.size() - 2), ctx.end());
        return body;
      }
      case TargetTerm::Kind::LetPack: {
        TargetType s = check(m.scrutinee());
        if (!s.is(TargetType::Kind::Exists))
          throw KernelError(Errc::TypeMismatch, "let-pack: scrutinee has type " + to_string(s));
        if (tvar_free_in_context(m.name()))
          throw KernelError(Errc::EscapeCheckFailed, "let-pack binds " + m.name() + " which is free in the context");
        ctx.emplace_back(m.name2(), subst_type(s.body(), s.name(), TargetType::var(m.name())));
        TargetType body = check(m.body());
        ctx.pop_back();
        if (free_type_vars(body).count(m.name()))
          throw KernelError(Errc::EscapeCheckFailed, "let-pack result type " + to_string(body) + " mentions " +
                                                         m.name());
        return body;
      }
    }
    throw KernelError(Errc::IllTyped, "unknown target term");
  }
};

}  // namespace

TargetType typecheck_target(const TargetContext& ctx, const TargetTerm& term, Mode mode) {
  Checker c{ctx, mode};
  return c.check(term);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_type(std::ostringstream& os, const TargetType& t, PrintStyle st, int prec) {
  // prec: 0 full, 1 conjunct, 2 atom
  bool uni = st == PrintStyle::Unicode;
  switch (t.kind()) {
    case TargetType::Kind::Var: os << t.name(); return;
    case TargetType::Kind::Answer: os << 'R'; return;
    case TargetType::Kind::Neg:
      os << (uni ? "¬" : "not ");
      print_type(os, t.body(), st, 2);
      return;
    case TargetType::Kind::Conj:
      if (prec >= 2) os << '(';
      print_type(os, t.left(), st, 2);
      os << (uni ? " ∧ " : " /\\ ");
      print_type(os, t.right(), st, 1);
      if (prec >= 2) os << ')';
      return;
    case TargetType::Kind::Exists:
      if (prec >= 1) os << '(';
      os << (uni ? "∃" : "exists ") << t.name() << ". ";
      print_type(os, t.body(), st, 0);
      if (prec >= 1) os << ')';
      return;
  }
}

void print_annotation(std::ostringstream& os, const TargetType& t, PrintStyle st) {
  bool wrap = t.is(TargetType::Kind::Exists);
  if (wrap) os << '(';
  print_type(os, t, st, 0);
  if (wrap) os << ')';
}

enum class Prec { Full, Head, Atom };

void print_term(std::ostringstream& os, const TargetTerm& m, PrintStyle st, Prec p) {
  bool uni = st == PrintStyle::Unicode;
  auto binder_open = [&]() {
    bool w = p != Prec::Full;
    if (w) os << '(';
    return w;
  };
  switch (m.kind()) {
    case TargetTerm::Kind::Var: os << m.name(); return;
    case TargetTerm::Kind::Star: os << (uni ? "⋆" : "*"); return;
    case TargetTerm::Kind::Lam: {
      bool w = binder_open();
      os << (uni ? "λ" : "\\") << m.name() << ':';
      print_annotation(os, m.type(), st);
      os << ". ";
      print_term(os, m.body(), st, Prec::Full);
      if (w) os << ')';
      return;
    }
    case TargetTerm::Kind::App: {
      bool w = p == Prec::Atom;
      if (w) os << '(';
      print_term(os, m.fn(), st, Prec::Head);
      os << ' ';
      print_term(os, m.arg(), st, Prec::Atom);
      if (w) os << ')';
      return;
    }
    case TargetTerm::Kind::Pair:
      os << (uni ? "⟨" : "<");
      print_term(os, m.fst(), st, Prec::Full);
      os << ", ";
      print_term(os, m.snd(), st, Prec::Full);
      os << (uni ? "⟩" : ">");
      return;
    case TargetTerm::Kind::Pack:
      os << (uni ? "⟨" : "<");
      print_type(os, m.type(), st, 0);
      os << " | ";
      print_term(os, m.payload(), st, Prec::Full);
      if (!uni) {
        os << " as ";
        print_type(os, m.pack_type(), st, 0);
      }
      os << (uni ? "⟩" : ">");
      return;
    case TargetTerm::Kind::LetPair:
    case TargetTerm::Kind::LetPack: {
      bool w = binder_open();
      os << "let " << (uni ? "⟨" : "<") << m.name() << ", " << m.name2() << (uni ? "⟩" : ">") << " = ";
      print_term(os, m.scrutinee(), st, Prec::Full);
      os << " in ";
      print_term(os, m.body(), st, Prec::Full);
      if (w) os << ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const TargetType& t, PrintStyle style) {
  std::ostringstream os;
  print_type(os, t, style, 0);
  return os.str();
}

std::string to_string(const TargetTerm& m, PrintStyle style) {
  std::ostringstream os;
  print_term(os, m, style, Prec::Full);
  return os.str();
}

}  // namespace mu2forge
