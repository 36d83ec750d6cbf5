#include "mu2forge/free_theorems.hpp"

#include <algorithm>
#include <json.hpp>

#include "mu2forge/encodings.hpp"

namespace mu2forge {

struct RelFormula::Node {
  Kind kind;
  std::optional<RelRef> rel;
  std::optional<FTerm> left, right;
  std::optional<RelFormula> a, b;
  std::string var;
  std::optional<FType> type, rel_left, rel_right;
  bool target = false;
  RelKind rel_kind = RelKind::Focal;
};

namespace {

bool is_mu(const FTerm& t) { return std::holds_alternative<MuTerm>(t); }
bool is_mu(const FType& t) { return std::holds_alternative<MuType>(t); }
const MuType& mu(const FType& t) { return std::get<MuType>(t); }
const TargetType& tgt(const FType& t) { return std::get<TargetType>(t); }

FTerm ft_app(const FTerm& f, const FTerm& a) {
  if (is_mu(f)) return MuTerm::app(std::get<MuTerm>(f), std::get<MuTerm>(a));
  return TargetTerm::app(std::get<TargetTerm>(f), std::get<TargetTerm>(a));
}

FTerm ft_var(const std::string& x, bool target) {
  if (target) return TargetTerm::var(x);
  return MuTerm::var(x);
}

NameSet identifiers(const FTerm& t) {
  NameSet out;
  std::visit(
      [&](const auto& m) {
        out = all_identifiers(m);
        for (const auto& x : free_type_vars(m)) out.insert(x);
      },
      t);
  return out;
}

NameSet identifiers(const FType& t) {
  return std::visit([](const auto& ty) { return free_type_vars(ty); }, t);
}

class Namer {
 public:
  explicit Namer(NameSet used = {}) : used_(std::move(used)) {}
  void reserve(const NameSet& names) { used_.insert(names.begin(), names.end()); }
  void reserve(const std::string& name) { used_.insert(name); }
  std::string fresh(const std::string& base) {
    for (;;) {
      std::string n = base + std::to_string(++count_[base]);
      if (used_.insert(n).second) return n;
    }
  }

 private:
  NameSet used_;
  std::map<std::string, int> count_;
};

// Substitution into formulas. Formula binders are generated fresh, so
// shadowing is the only case that needs care.
struct Subst {
  enum class What { Term, Type, Rel } what;
  std::string name;
  std::optional<FTerm> term;
  std::optional<FType> type;
  std::optional<RelRef> rel;
};

FTerm apply(const FTerm& t, const Subst& s) {
  if (s.what == Subst::What::Term) {
    if (is_mu(t) != is_mu(*s.term)) return t;
    if (is_mu(t)) return subst_term(std::get<MuTerm>(t), s.name, std::get<MuTerm>(*s.term));
    return target_subst(std::get<TargetTerm>(t), s.name, std::get<TargetTerm>(*s.term));
  }
  if (s.what == Subst::What::Type) {
    if (is_mu(t) != is_mu(*s.type)) return t;
    if (is_mu(t)) return subst_type(std::get<MuTerm>(t), s.name, mu(*s.type));
    return target_subst_type(std::get<TargetTerm>(t), s.name, tgt(*s.type));
  }
  return t;
}

FType apply(const FType& t, const Subst& s) {
  if (s.what != Subst::What::Type || is_mu(t) != is_mu(*s.type)) return t;
  if (is_mu(t)) return subst_type(mu(t), s.name, mu(*s.type));
  return subst_type(tgt(t), s.name, tgt(*s.type));
}

RelFormula apply(const RelFormula& f, const Subst& s);

RelRef apply(const RelRef& r, const Subst& s) {
  switch (r.kind) {
    case RelRef::Kind::Var: return r;
    case RelRef::Kind::Graph: return RelRef::graph(apply(*r.map, s), r.focal_required);
    case RelRef::Kind::Identity: return RelRef::identity(apply(*r.type, s));
    case RelRef::Kind::Abstract:
      if (s.what == Subst::What::Term && (s.name == r.left_var || s.name == r.right_var)) return r;
      return RelRef::abstract(r.left_var, r.right_var, apply(*r.body, s));
  }
  return r;
}

RelFormula apply(const RelFormula& f, const Subst& s) {
  using K = RelFormula::Kind;
  auto shadows = [&](Subst::What w) { return s.what == w && s.name == f.var(); };
  switch (f.kind()) {
    case K::Atom:
      if (s.what == Subst::What::Rel && f.rel().kind == RelRef::Kind::Var && f.rel().name == s.name)
        return holds(*s.rel, f.left(), f.right());
      return RelFormula::atom(apply(f.rel(), s), apply(f.left(), s), apply(f.right(), s));
    case K::Implies: return RelFormula::implies(apply(f.lhs(), s), apply(f.rhs(), s));
    case K::And: return RelFormula::conj(apply(f.lhs(), s), apply(f.rhs(), s));
    case K::ForallTerm:
    case K::ExistsTerm: {
      RelFormula body = shadows(Subst::What::Term) ? f.body() : apply(f.body(), s);
      return f.is(K::ForallTerm) ? RelFormula::forall_term(f.var(), apply(f.type(), s), body)
                                 : RelFormula::exists_term(f.var(), apply(f.type(), s), body);
    }
    case K::ForallType:
    case K::ExistsType: {
      RelFormula body = shadows(Subst::What::Type) ? f.body() : apply(f.body(), s);
      return f.is(K::ForallType) ? RelFormula::forall_type(f.var(), f.target(), body)
                                 : RelFormula::exists_type(f.var(), f.target(), body);
    }
    case K::ForallRel:
    case K::ExistsRel: {
      RelFormula body = shadows(Subst::What::Rel) ? f.body() : apply(f.body(), s);
      FType l = apply(f.rel_left(), s), r = apply(f.rel_right(), s);
      return f.is(K::ForallRel) ? RelFormula::forall_rel(f.var(), f.rel_kind(), l, r, body)
                                : RelFormula::exists_rel(f.var(), f.rel_kind(), l, r, body);
    }
  }
  return f;
}

void collect(const RelFormula& f, NameSet& out);

void collect(const RelRef& r, NameSet& out) {
  switch (r.kind) {
    case RelRef::Kind::Var: out.insert(r.name); break;
    case RelRef::Kind::Graph: out.merge(identifiers(*r.map)); break;
    case RelRef::Kind::Identity: out.merge(identifiers(*r.type)); break;
    case RelRef::Kind::Abstract:
      out.insert(r.left_var);
      out.insert(r.right_var);
      collect(*r.body, out);
      break;
  }
}

void collect(const RelFormula& f, NameSet& out) {
  using K = RelFormula::Kind;
  switch (f.kind()) {
    case K::Atom:
      collect(f.rel(), out);
      out.merge(identifiers(f.left()));
      out.merge(identifiers(f.right()));
      return;
    case K::Implies:
    case K::And:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      return;
    case K::ForallTerm:
    case K::ExistsTerm: out.merge(identifiers(f.type())); break;
    case K::ForallRel:
    case K::ExistsRel:
      out.merge(identifiers(f.rel_left()));
      out.merge(identifiers(f.rel_right()));
      break;
    default: break;
  }
  out.insert(f.var());
  collect(f.body(), out);
}

NameSet names_of(const Relation& r) {
  NameSet out;
  collect(r.ref, out);
  out.merge(identifiers(r.left));
  out.merge(identifiers(r.right));
  return out;
}

NameSet names_of(const RelEnv& env) {
  NameSet out;
  for (const auto& [x, r] : env) {
    out.insert(x);
    out.merge(names_of(r));
  }
  return out;
}

// ---- admissible relations ----

const TargetType kAnswer = TargetType::answer();

Relation neg_rel(Namer& n, const Relation& r) {
  const TargetType &lt = tgt(r.left), &rt = tgt(r.right);
  std::string u = n.fresh("u"), v = n.fresh("v"), x = n.fresh("x"), y = n.fresh("y");
  RelFormula body = RelFormula::forall_term(
      x, lt,
      RelFormula::forall_term(
          y, rt,
          RelFormula::implies(holds(r.ref, TargetTerm::var(x), TargetTerm::var(y)),
                              RelFormula::atom(RelRef::identity(kAnswer),
                                               TargetTerm::app(TargetTerm::var(u), TargetTerm::var(x)),
                                               TargetTerm::app(TargetTerm::var(v), TargetTerm::var(y))))));
  return {RelRef::abstract(u, v, body), TargetType::neg(lt), TargetType::neg(rt)};
}

Relation conj_rel(Namer& n, const Relation& r, const Relation& s) {
  TargetType lt = TargetType::conj(tgt(r.left), tgt(s.left)), rt = TargetType::conj(tgt(r.right), tgt(s.right));
  std::string u = n.fresh("u"), v = n.fresh("v");
  std::string x = n.fresh("x"), x2 = n.fresh("x"), y = n.fresh("y"), y2 = n.fresh("y");
  auto tv = [](const std::string& z) { return TargetTerm::var(z); };
  RelFormula eqs = RelFormula::conj(
      RelFormula::atom(RelRef::identity(lt), tv(u), TargetTerm::pair(tv(x), tv(x2))),
      RelFormula::atom(RelRef::identity(rt), tv(v), TargetTerm::pair(tv(y), tv(y2))));
  RelFormula body =
      RelFormula::conj(eqs, RelFormula::conj(holds(r.ref, tv(x), tv(y)), holds(s.ref, tv(x2), tv(y2))));
  body = RelFormula::exists_term(y2, s.right, body);
  body = RelFormula::exists_term(y, r.right, body);
  body = RelFormula::exists_term(x2, s.left, body);
  body = RelFormula::exists_term(x, r.left, body);
  return {RelRef::abstract(u, v, body), lt, rt};
}

Relation exists_rel(Namer& n, const std::string& xv, const TargetType& lbody, const TargetType& rbody,
                    const std::function<Relation(const Relation&)>& fn) {
  std::string u = n.fresh("u"), v = n.fresh("v");
  std::string a = n.fresh(xv), b = n.fresh(xv), r = n.fresh("r"), x = n.fresh("x"), y = n.fresh("y");
  TargetType lt = TargetType::exists(xv, lbody), rt = TargetType::exists(xv, rbody);
  TargetType at = TargetType::var(a), bt = TargetType::var(b);
  Relation inner = fn(Relation{RelRef::var(r), at, bt});
  auto tv = [](const std::string& z) { return TargetTerm::var(z); };
  RelFormula body = RelFormula::conj(
      RelFormula::conj(RelFormula::atom(RelRef::identity(lt), tv(u), TargetTerm::pack(at, tv(x), lt)),
                       RelFormula::atom(RelRef::identity(rt), tv(v), TargetTerm::pack(bt, tv(y), rt))),
      holds(inner.ref, tv(x), tv(y)));
  body = RelFormula::exists_term(y, subst_type(rbody, xv, bt), body);
  body = RelFormula::exists_term(x, subst_type(lbody, xv, at), body);
  body = RelFormula::exists_rel(r, RelKind::Admissible, at, bt, body);
  body = RelFormula::exists_type(b, true, body);
  body = RelFormula::exists_type(a, true, body);
  return {RelRef::abstract(u, v, body), lt, rt};
}

template <class T>
std::map<std::string, T> endpoints(const RelEnv& env, bool left, const std::string& except = "") {
  std::map<std::string, T> out;
  for (const auto& [x, r] : env)
    if (x != except) out.emplace(x, std::get<T>(left ? r.left : r.right));
  return out;
}

const Relation& lookup(const RelEnv& env, const std::string& x) {
  auto it = env.find(x);
  if (it == env.end()) throw KernelError(Errc::UnboundRelVar, x);
  return it->second;
}

Relation target_rel(Namer& n, const TargetType& t, const RelEnv& env) {
  switch (t.kind()) {
    case TargetType::Kind::Var: return lookup(env, t.name());
    case TargetType::Kind::Answer: return {RelRef::identity(kAnswer), kAnswer, kAnswer};
    case TargetType::Kind::Neg: return neg_rel(n, target_rel(n, t.body(), env));
    case TargetType::Kind::Conj: {
      Relation l = target_rel(n, t.left(), env);
      return conj_rel(n, l, target_rel(n, t.right(), env));
    }
    case TargetType::Kind::Exists: {
      for (const auto& x : free_type_vars(t)) lookup(env, x);
      TargetType lb = subst_types(t.body(), endpoints<TargetType>(env, true, t.name()));
      TargetType rb = subst_types(t.body(), endpoints<TargetType>(env, false, t.name()));
      return exists_rel(n, t.name(), lb, rb, [&](const Relation& r) {
        RelEnv inner = env;
        inner.insert_or_assign(t.name(), r);
        return target_rel(n, t.body(), inner);
      });
    }
  }
  throw KernelError(Errc::IllTyped, "unknown target type");
}

// ---- focal relations ----

Relation mu_rel(Namer& n, const MuType& t, const RelEnv& env) {
  switch (t.kind()) {
    case MuType::Kind::Var: return lookup(env, t.name());
    case MuType::Kind::Arrow: {
      std::string u = n.fresh("u"), v = n.fresh("v"), x = n.fresh("x"), y = n.fresh("y");
      Relation d = mu_rel(n, t.dom(), env);
      Relation c = mu_rel(n, t.cod(), env);
      MuTerm uf = MuTerm::var(u), vf = MuTerm::var(v), xa = MuTerm::var(x), ya = MuTerm::var(y);
      RelFormula body = RelFormula::forall_term(
          x, d.left,
          RelFormula::forall_term(y, d.right,
                                  RelFormula::implies(holds(d.ref, xa, ya),
                                                      holds(c.ref, MuTerm::app(uf, xa), MuTerm::app(vf, ya)))));
      return {RelRef::abstract(u, v, body), MuType::arrow(mu(d.left), mu(c.left)),
              MuType::arrow(mu(d.right), mu(c.right))};
    }
    case MuType::Kind::Forall: {
      std::string u = n.fresh("u"), v = n.fresh("v");
      std::string a = n.fresh(t.name()), b = n.fresh(t.name()), r = n.fresh("r");
      for (const auto& x : free_type_vars(t)) lookup(env, x);
      MuType lt = MuType::forall(t.name(), subst_types(t.body(), endpoints<MuType>(env, true, t.name())));
      MuType rt = MuType::forall(t.name(), subst_types(t.body(), endpoints<MuType>(env, false, t.name())));
      MuType at = MuType::var(a), bt = MuType::var(b);
      RelEnv inner = env;
      inner.insert_or_assign(t.name(), Relation{RelRef::var(r), at, bt});
      Relation body_rel = mu_rel(n, t.body(), inner);
      RelFormula body = holds(body_rel.ref, MuTerm::tyapp(MuTerm::var(u), at), MuTerm::tyapp(MuTerm::var(v), bt));
      body = RelFormula::forall_rel(r, RelKind::Focal, at, bt, body);
      body = RelFormula::forall_type(b, false, body);
      body = RelFormula::forall_type(a, false, body);
      return {RelRef::abstract(u, v, body), lt, rt};
    }
  }
  throw KernelError(Errc::IllTyped, "unknown type");
}

}  // namespace

// ---- constructors ----

RelRef RelRef::var(std::string name) {
  RelRef r;
  r.kind = Kind::Var;
  r.name = std::move(name);
  return r;
}

RelRef RelRef::graph(FTerm map, bool focal_required) {
  RelRef r;
  r.kind = Kind::Graph;
  r.map = std::move(map);
  r.focal_required = focal_required;
  return r;
}

RelRef RelRef::identity(FType type) {
  RelRef r;
  r.kind = Kind::Identity;
  r.type = std::move(type);
  return r;
}

RelRef RelRef::abstract(std::string x, std::string y, RelFormula body) {
  RelRef r;
  r.kind = Kind::Abstract;
  r.left_var = std::move(x);
  r.right_var = std::move(y);
  r.body = std::make_shared<const RelFormula>(std::move(body));
  return r;
}

RelFormula RelFormula::atom(RelRef rel, FTerm left, FTerm right) {
  Node n{};
  n.kind = Kind::Atom;
  n.rel = std::move(rel);
  n.left = std::move(left);
  n.right = std::move(right);
  return RelFormula(std::make_shared<const Node>(std::move(n)));
}

RelFormula RelFormula::implies(RelFormula premise, RelFormula conclusion) {
  Node n{};
  n.kind = Kind::Implies;
  n.a = std::move(premise);
  n.b = std::move(conclusion);
  return RelFormula(std::make_shared<const Node>(std::move(n)));
}

RelFormula RelFormula::conj(RelFormula lhs, RelFormula rhs) {
  Node n{};
  n.kind = Kind::And;
  n.a = std::move(lhs);
  n.b = std::move(rhs);
  return RelFormula(std::make_shared<const Node>(std::move(n)));
}


RelFormula RelFormula::forall_term(std::string var, FType type, RelFormula body) {
  Node n{};
  n.kind = Kind::ForallTerm;
  n.var = std::move(var);
  n.type = std::move(type);
  n.a = std::move(body);
  return RelFormula(std::make_shared<const Node>(std::move(n)));
}

RelFormula RelFormula::exists_term(std::string var, FType type, RelFormula body) {
  Node n{};
  n.kind = Kind::ExistsTerm;
  n.var = std::move(var);
  n.type = std::move(type);
  n.a = std::move(body);
  return RelFormula(std::make_shared<const Node>(std::move(n)));
}

RelFormula RelFormula::forall_type(std::string var, bool target, RelFormula body) {
  Node n{};
  n.kind = Kind::ForallType;
  n.var = std::move(var);
  n.target = target;
  n.a = std::move(body);
  return RelFormula(std::make_shared<const Node>(std::move(n)));
}

RelFormula RelFormula::exists_type(std::string var, bool target, RelFormula body) {
  Node n{};
  n.kind = Kind::ExistsType;
  n.var = std::move(var);
  n.target = target;
  n.a = std::move(body);
  return RelFormula(std::make_shared<const Node>(std::move(n)));
}

RelFormula RelFormula::forall_rel(std::string var, RelKind kind, FType left, FType right, RelFormula body) {
  Node n{};
  n.kind = Kind::ForallRel;
  n.var = std::move(var);
  n.rel_kind = kind;
  n.rel_left = std::move(left);
  n.rel_right = std::move(right);
  n.target = !is_mu(*n.rel_left);
  n.a = std::move(body);
  return RelFormula(std::make_shared<const Node>(std::move(n)));
}

RelFormula RelFormula::exists_rel(std::string var, RelKind kind, FType left, FType right, RelFormula body) {
  Node n{};
  n.kind = Kind::ExistsRel;
  n.var = std::move(var);
  n.rel_kind = kind;
  n.rel_left = std::move(left);
  n.rel_right = std::move(right);
  n.target = !is_mu(*n.rel_left);
  n.a = std::move(body);
  return RelFormula(std::make_shared<const Node>(std::move(n)));
}

RelFormula::Kind RelFormula::kind() const { return node_->kind; }
const RelRef& RelFormula::rel() const { return *node_->rel; }
const FTerm& RelFormula::left() const { return *node_->left; }
const FTerm& RelFormula::right() const { return *node_->right; }
const RelFormula& RelFormula::lhs() const { return *node_->a; }
const RelFormula& RelFormula::rhs() const { return *node_->b; }
const std::string& RelFormula::var() const { return node_->var; }
const FType& RelFormula::type() const { return *node_->type; }
bool RelFormula::target() const { return node_->target; }
RelKind RelFormula::rel_kind() const { return node_->rel_kind; }
const FType& RelFormula::rel_left() const { return *node_->rel_left; }
const FType& RelFormula::rel_right() const { return *node_->rel_right; }
const RelFormula& RelFormula::body() const { return *node_->a; }

RelFormula holds(const RelRef& rel, const FTerm& left, const FTerm& right) {
  if (rel.kind != RelRef::Kind::Abstract) return RelFormula::atom(rel, left, right);
  bool target = !is_mu(left);
  // Route through a fresh placeholder so `left` cannot be caught by the
  // second substitution.
  NameSet avoid;
  collect(*rel.body, avoid);
  avoid.merge(identifiers(left));
  avoid.merge(identifiers(right));
  std::string hole = fresh_name("%r", avoid);
  RelFormula f = apply(*rel.body, Subst{Subst::What::Term, rel.right_var, ft_var(hole, target), {}, {}});
  f = apply(f, Subst{Subst::What::Term, rel.left_var, left, {}, {}});
  return apply(f, Subst{Subst::What::Term, hole, right, {}, {}});
}

// ---- printing ----

std::string to_string(const FTerm& t, PrintStyle style) {
  return std::visit([&](const auto& m) { return to_string(m, style); }, t);
}

std::string to_string(const FType& t, PrintStyle style) {
  return std::visit([&](const auto& m) { return to_string(m, style); }, t);
}

namespace {

std::string print_atom(const RelFormula& f) {
  std::string l = to_string(f.left()), r = to_string(f.right());
  const RelRef& rel = f.rel();
  switch (rel.kind) {
    case RelRef::Kind::Identity: return l + " = " + r;
    case RelRef::Kind::Var: return rel.name + "(" + l + ", " + r + ")";
    case RelRef::Kind::Graph: return "⟨" + to_string(*rel.map) + "⟩(" + l + ", " + r + ")";
    case RelRef::Kind::Abstract:
      return "(λ(" + rel.left_var + ", " + rel.right_var + "). " + to_string(*rel.body) + ")(" + l + ", " + r + ")";
  }
  return "";
}

// Quantified types are parenthesized after a binder colon.
std::string binder_type(const FType& t) {
  bool quantified = is_mu(t) ? mu(t).is_forall() && !mu(t).is_bottom() : tgt(t).is(TargetType::Kind::Exists);
  return quantified ? "(" + to_string(t) + ")" : to_string(t);
}

// ctx 0: anywhere; 1: left of ⇒ or inside ∧.
std::string print(const RelFormula& f, int ctx) {
  using K = RelFormula::Kind;
  auto wrap = [&](std::string s) { return ctx > 0 ? "(" + s + ")" : s; };
  switch (f.kind()) {
    case K::Atom: return print_atom(f);
    case K::And: {
      auto side = [](const RelFormula& g) { return g.is(K::And) ? print(g, 0) : print(g, 1); };
      return side(f.lhs()) + " ∧ " + side(f.rhs());
    }
    case K::Implies: return wrap(print(f.lhs(), 1) + " ⇒ " + print(f.rhs(), 0));
    case K::ForallTerm:
    case K::ExistsTerm:
      return wrap(std::string(f.is(K::ForallTerm) ? "∀" : "∃") + f.var() + ":" + binder_type(f.type()) + ". " +
                  print(f.body(), 0));
    case K::ForallType:
    case K::ExistsType:
      return wrap(std::string(f.is(K::ForallType) ? "∀" : "∃") + f.var() + ". " + print(f.body(), 0));
    case K::ForallRel:
    case K::ExistsRel:
      return wrap(std::string(f.is(K::ForallRel) ? "∀ " : "∃ ") +
                  (f.rel_kind() == RelKind::Focal ? "focal " : "admissible ") + f.var() + " : " +
                  binder_type(f.rel_left()) + " ↔ " + binder_type(f.rel_right()) + ". " + print(f.body(), 0));
  }
  return "";
}

using json = nlohmann::ordered_json;

json term_json(const FTerm& t) {
  return {{"calculus", is_mu(t) ? "mu" : "target"}, {"term", to_string(t, PrintStyle::Ascii)}};
}

json type_json(const FType& t) {
  return {{"calculus", is_mu(t) ? "mu" : "target"}, {"type", to_string(t, PrintStyle::Ascii)}};
}

json to_json_value(const RelFormula& f);

json rel_json(const RelRef& r) {
  switch (r.kind) {
    case RelRef::Kind::Var: return {{"tag", "rel_var"}, {"name", r.name}};
    case RelRef::Kind::Graph:
      return {{"tag", "graph"}, {"map", term_json(*r.map)}, {"focal_required", r.focal_required}};
    case RelRef::Kind::Identity: return {{"tag", "identity"}, {"type", type_json(*r.type)}};
    case RelRef::Kind::Abstract:
      return {{"tag", "abstract"}, {"left", r.left_var}, {"right", r.right_var}, {"body", to_json_value(*r.body)}};
  }
  return {};
}

json to_json_value(const RelFormula& f) {
  using K = RelFormula::Kind;
  switch (f.kind()) {
    case K::Atom:
      return {{"tag", "atom"}, {"rel", rel_json(f.rel())}, {"left", term_json(f.left())},
              {"right", term_json(f.right())}};
    case K::Implies:
      return {{"tag", "implies"}, {"premise", to_json_value(f.lhs())}, {"conclusion", to_json_value(f.rhs())}};
    case K::And: return {{"tag", "and"}, {"left", to_json_value(f.lhs())}, {"right", to_json_value(f.rhs())}};
    case K::ForallTerm:
    case K::ExistsTerm:
      return {{"tag", f.is(K::ForallTerm) ? "forall_term" : "exists_term"},
              {"var", f.var()},
              {"type", type_json(f.type())},
              {"body", to_json_value(f.body())}};
    case K::ForallType:
    case K::ExistsType:
      return {{"tag", f.is(K::ForallType) ? "forall_type" : "exists_type"},
              {"var", f.var()},
              {"calculus", f.target() ? "target" : "mu"},
              {"body", to_json_value(f.body())}};
    case K::ForallRel:
    case K::ExistsRel:
      return {{"tag", f.is(K::ForallRel) ? "forall_rel" : "exists_rel"},
              {"var", f.var()},
              {"kind", f.rel_kind() == RelKind::Focal ? "focal" : "admissible"},
              {"left", type_json(f.rel_left())},
              {"right", type_json(f.rel_right())},
              {"body", to_json_value(f.body())}};
  }
  return {};
}

}  // namespace

std::string to_string(const RelFormula& f) { return print(f, 0); }

std::string to_json(const RelFormula& f, int indent) { return to_json_value(f).dump(indent); }

// ---- relations ----

Relation neg_relation(const Relation& r) {
  Namer n(names_of(r));
  return neg_rel(n, r);
}

Relation conj_relation(const Relation& r, const Relation& s) {
  NameSet used = names_of(r);
  used.merge(names_of(s));
  Namer n(used);
  return conj_rel(n, r, s);
}

Relation exists_relation(const std::string& x, const TargetType& left_body, const TargetType& right_body,
                         const std::function<Relation(const Relation&)>& body) {
  NameSet used = free_type_vars(left_body);
  used.merge(free_type_vars(right_body));
  used.insert(x);
  Namer n(used);
  return exists_rel(n, x, left_body, right_body, body);
}

Relation target_relation(const TargetType& tau, const RelEnv& env) {
  Namer n(names_of(env));
  n.reserve(free_type_vars(tau));
  return target_rel(n, tau, env);
}

RelFormula target_relation(const TargetType& tau, const RelEnv& env, const TargetTerm& u, const TargetTerm& v) {
  Namer n(names_of(env));
  n.reserve(free_type_vars(tau));
  n.reserve(identifiers(FTerm(u)));
  n.reserve(identifiers(FTerm(v)));
  return holds(target_rel(n, tau, env).ref, u, v);
}

Relation mu_relation(const MuType& sigma, const RelEnv& env) {
  Namer n(names_of(env));
  n.reserve(free_type_vars(sigma));
  return mu_rel(n, sigma, env);
}

RelFormula mu_relation(const MuType& sigma, const RelEnv& env, const MuTerm& u, const MuTerm& v) {
  Namer n(names_of(env));
  n.reserve(free_type_vars(sigma));
  n.reserve(identifiers(FTerm(u)));
  n.reserve(identifiers(FTerm(v)));
  return holds(mu_rel(n, sigma, env).ref, u, v);
}

namespace {

template <class T>
RelEnv parameter_env(const NameSet& free, const std::vector<std::string>& params) {
  RelEnv env;
  for (const auto& x : free) {
    if (std::find(params.begin(), params.end(), x) == params.end())
      throw KernelError(Errc::OpenType, "free type variable " + x);
    T t = T::var(x);
    env.emplace(x, Relation{RelRef::identity(t), t, t});
  }
  return env;
}

}  // namespace

RelFormula free_theorem(const MuType& sigma, const std::vector<std::string>& params) {
  RelEnv env = parameter_env<MuType>(free_type_vars(sigma), params);
  Namer n(free_type_vars(sigma));
  n.reserve("x");
  MuTerm x = MuTerm::var("x");
  return RelFormula::forall_term("x", sigma, holds(mu_rel(n, sigma, env).ref, x, x));
}

RelFormula target_free_theorem(const TargetType& tau, const std::vector<std::string>& params) {
  RelEnv env = parameter_env<TargetType>(free_type_vars(tau), params);
  Namer n(free_type_vars(tau));
  n.reserve("x");
  TargetTerm x = TargetTerm::var("x");
  return RelFormula::forall_term("x", tau, holds(target_rel(n, tau, env).ref, x, x));
}

// ---- graph instances ----

GraphMap graph_map(const Context& gamma, const Context& delta, const MuTerm& f, Theory theory) {
  MuType t = typecheck_mu(gamma, delta, f);
  if (!t.is_arrow()) throw KernelError(Errc::IllTyped, "not a map: " + to_string(t));
  FocalCheck check = check_focal(gamma, delta, f, theory);
  return GraphMap{gamma, delta, f, t.dom(), t.cod(), check.certificate};
}

namespace {

// Rewrites ⟨f⟩(u, v) over a λμ2 map into f u = v.
RelFormula reduce_graphs(const RelFormula& f, const MuType& cod) {
  using K = RelFormula::Kind;
  switch (f.kind()) {
    case K::Atom:
      if (f.rel().kind == RelRef::Kind::Graph && is_mu(*f.rel().map))
        return RelFormula::atom(RelRef::identity(cod), ft_app(*f.rel().map, f.left()), f.right());
      return f;
    case K::Implies: return RelFormula::implies(reduce_graphs(f.lhs(), cod), reduce_graphs(f.rhs(), cod));
    case K::And: return RelFormula::conj(reduce_graphs(f.lhs(), cod), reduce_graphs(f.rhs(), cod));
    case K::ForallTerm: return RelFormula::forall_term(f.var(), f.type(), reduce_graphs(f.body(), cod));
    case K::ExistsTerm: return RelFormula::exists_term(f.var(), f.type(), reduce_graphs(f.body(), cod));
    case K::ForallType: return RelFormula::forall_type(f.var(), f.target(), reduce_graphs(f.body(), cod));
    case K::ExistsType: return RelFormula::exists_type(f.var(), f.target(), reduce_graphs(f.body(), cod));
    case K::ForallRel:
      return RelFormula::forall_rel(f.var(), f.rel_kind(), f.rel_left(), f.rel_right(),
                                    reduce_graphs(f.body(), cod));
    case K::ExistsRel:
      return RelFormula::exists_rel(f.var(), f.rel_kind(), f.rel_left(), f.rel_right(),
                                    reduce_graphs(f.body(), cod));
  }
  return f;
}

struct Reducer {
  GraphInstance out;

  void run(const RelFormula& f, Context gamma, const Context& delta, std::vector<std::string> tparams,
           std::vector<RelFormula> premises) {
    using K = RelFormula::Kind;
    switch (f.kind()) {
      case K::ForallTerm:
        if (!is_mu(f.type())) break;
        gamma.emplace_back(f.var(), mu(f.type()));
        return run(f.body(), std::move(gamma), delta, std::move(tparams), std::move(premises));
      case K::ForallType:
        tparams.push_back(f.var());
        return run(f.body(), std::move(gamma), delta, std::move(tparams), std::move(premises));
      case K::Implies:
        premises.push_back(f.lhs());
        return run(f.rhs(), std::move(gamma), delta, std::move(tparams), std::move(premises));
      case K::And:
        run(f.lhs(), gamma, delta, tparams, premises);
        return run(f.rhs(), std::move(gamma), delta, std::move(tparams), std::move(premises));
      case K::Atom:
        if (f.rel().kind == RelRef::Kind::Identity && is_mu(f.left())) {
          out.equations.push_back(GraphEquation{std::move(gamma), delta, std::move(tparams), std::move(premises),
                                                std::get<MuTerm>(f.left()), std::get<MuTerm>(f.right())});
          return;
        }
        break;
      default: break;
    }
    RelFormula g = f;
    for (auto it = premises.rbegin(); it != premises.rend(); ++it) g = RelFormula::implies(*it, g);
    out.residual.push_back(g);
  }
};

}  // namespace

GraphInstance instantiate_graph(const RelFormula& formula, const GraphMap& g) {
  using K = RelFormula::Kind;
  Context gamma = g.gamma;
  std::vector<std::string> tparams;
  RelFormula f = formula;
  while (!f.is(K::ForallRel)) {
    if (f.is(K::ForallTerm) && is_mu(f.type())) {
      gamma.emplace_back(f.var(), mu(f.type()));
    } else if (f.is(K::ForallType)) {
      tparams.push_back(f.var());
    } else {
      throw KernelError(Errc::IllTyped, "no relation quantifier at the head");
    }
    f = f.body();
  }
  bool focal = f.rel_kind() == RelKind::Focal;
  if (focal && !g.certificate)
    throw KernelError(Errc::NotFocal, to_string(g.map, PrintStyle::Unicode) + " has no focality certificate");
  RelFormula body = f.body();
  auto fix = [&](const FType& end, const MuType& to) {
    if (!is_mu(end)) throw KernelError(Errc::TypeMismatch, "target relation instantiated with a λμ2 map");
    const MuType& t = mu(end);
    auto it = t.is_var() ? std::find(tparams.begin(), tparams.end(), t.name()) : tparams.end();
    if (it != tparams.end()) {
      tparams.erase(it);
      body = apply(body, Subst{Subst::What::Type, t.name(), {}, FType(to), {}});
    } else if (t != to) {
      throw KernelError(Errc::TypeMismatch, to_string(t) + " vs " + to_string(to));
    }
  };
  fix(f.rel_left(), g.dom);
  fix(f.rel_right(), g.cod);
  body = apply(body, Subst{Subst::What::Rel, f.var(), {}, {}, RelRef::graph(g.map, focal)});
  Reducer r;
  r.run(reduce_graphs(body, g.cod), gamma, g.delta, tparams, {});
  return r.out;
}

DischargeResult discharge(const GraphEquation& eq, Theory theory) {
  DischargeResult out;
  try {
    out.verdict = eq_mu(eq.gamma, eq.delta, eq.lhs, eq.rhs, theory);
  } catch (const KernelError& e) {
    out.note = std::string("not checkable: ") + e.what();
    return out;
  }
  if (out.verdict.equal) {
    out.status = Discharge::Confirmed;
    out.note = eq.premises.empty() ? "confirmed" : "confirmed without its premises";
  } else {
    out.note = eq.premises.empty() ? "not confirmed by the oracle" : "depends on its premises";
  }
  return out;
}

std::string to_string(const GraphEquation& eq) {
  std::string s;
  for (const auto& t : eq.type_params) s += "∀" + t + ". ";
  std::string ctx;
  for (const auto& [x, t] : eq.gamma) ctx += (ctx.empty() ? "" : ", ") + x + ":" + binder_type(FType(t));
  if (!eq.delta.empty()) {
    ctx += " |";
    for (const auto& [a, t] : eq.delta) ctx += " " + a + ":" + binder_type(FType(t));
  }
  s += ctx + (ctx.empty() ? "⊢ " : " ⊢ ");
  for (const auto& p : eq.premises) s += print(p, 1) + " ⇒ ";
  return s + to_string(eq.lhs, PrintStyle::Unicode) + " = " + to_string(eq.rhs, PrintStyle::Unicode);
}

// ---- obligations ----

namespace {

MuTerm mv(const std::string& x) { return MuTerm::var(x); }
MuTerm mapp(MuTerm f, MuTerm a) { return MuTerm::app(std::move(f), std::move(a)); }
TargetTerm tv(const std::string& x) { return TargetTerm::var(x); }

std::string verdict_word(const EqVerdict& v) { return v.equal ? "Equal" : "Distinct"; }

Obligation final_coalgebra() {
  TargetType x = TargetType::var("X");
  TargetType tau = TargetType::neg(x);
  TargetType t = TargetType::exists("X", TargetType::conj(TargetType::neg(TargetType::conj(tau, x)), x));
  return {"parametric target: final coalgebra",
          "∃X.¬(τ∧X)∧X is a final coalgebra νX.¬τ of ΛX.¬τ when X occurs only negatively in τ; "
          "stated at τ = ¬X by the free theorem it follows from",
          target_free_theorem(t), "not executable: quantifies over coalgebras"};
}

Obligation existential_iso() {
  TargetType s = TargetType::var("s"), x = TargetType::var("X");
  TargetType t = TargetType::exists("X", TargetType::conj(TargetType::neg(TargetType::conj(s, x)), x));
  TargetType ns = TargetType::neg(s);
  // i u = λt. let ⟨X,p⟩ = u in let ⟨f,z⟩ = p in f ⟨t,z⟩
  auto i = [&](const TargetTerm& u) {
    return TargetTerm::lam(
        "t", s,
        TargetTerm::let_pack("X", "p", u,
                             TargetTerm::let_pair("f", "z", tv("p"),
                                                  TargetTerm::app(tv("f"), TargetTerm::pair(tv("t"), tv("z"))))));
  };
  // j g = ⟨¬s | ⟨λq. let ⟨t,h⟩ = q in h t, g⟩⟩
  auto j = [&](const TargetTerm& g) {
    TargetTerm eval = TargetTerm::lam("q", TargetType::conj(s, ns),
                                      TargetTerm::let_pair("t", "h", tv("q"), TargetTerm::app(tv("h"), tv("t"))));
    return TargetTerm::pack(ns, TargetTerm::pair(eval, g), t);
  };
  RelFormula stmt = RelFormula::forall_term("u", t, RelFormula::atom(RelRef::identity(t), tv("u"), j(i(tv("u")))));
  std::string note;
  try {
    EqVerdict back = eq_target({{"g", ns}}, i(j(tv("g"))), tv("g"), Mode::Plain);
    EqVerdict forth = eq_target({{"u", t}}, j(i(tv("u"))), tv("u"), Mode::Parametric);
    note = "i (j g) = g: " + verdict_word(back) + " (plain); j (i u) = u: " + verdict_word(forth) + " (parametric)";
  } catch (const KernelError& e) {
    note = std::string("oracle failed: ") + e.what();
  }
  return {"parametric target: existential isomorphism",
          "∃X.¬(τ∧X)∧X ≅ ¬τ when X is not free in τ; the composite j ∘ i is the identity", stmt, note};
}

MuType s_ty() { return MuType::var("s"); }
MuType t_ty() { return MuType::var("t"); }

Obligation fold_uniqueness() {
  TypeScheme F{"X", MuType::arrow(s_ty(), MuType::var("X"))};
  MuType muF = mu_type(F), sigma = t_ty();
  TypeScheme nnF{"X", MuType::neg(MuType::neg(F.body))};
  MuType at = MuType::arrow(nnF.at(sigma), sigma);
  MuTerm nnFh = functorial_action(nnF, mv("h"), muF, sigma);
  RelRef gh = RelRef::graph(mv("h"), true);
  RelFormula square = RelFormula::forall_term(
      "y", nnF.at(muF), RelFormula::atom(gh, mapp(mk_combinator("in-sharp", {F.body}), mv("y")),
                                         mapp(mv("a"), mapp(nnFh, mv("y")))));
  MuTerm fold_flat = mapp(mk_combinator("fold", {F.body, sigma}), mk_combinator("flat", {F.at(sigma)}, {mv("a")}));
  RelFormula unique = RelFormula::forall_term("z", muF, RelFormula::atom(gh, mv("z"), mapp(fold_flat, mv("z"))));
  RelFormula stmt = RelFormula::forall_term(
      "a", at, RelFormula::forall_term("h", MuType::arrow(muF, sigma), RelFormula::implies(square, unique)));
  // Existence half at a focal algebra a = g♯.
  std::string note;
  try {
    Context gamma{{"g", MuType::arrow(F.at(sigma), sigma)}, {"y", nnF.at(muF)}};
    MuTerm a = mk_combinator("sharp", {F.at(sigma), sigma}, {mv("g")});
    MuTerm fold_a = mapp(mk_combinator("fold", {F.body, sigma}), mk_combinator("flat", {F.at(sigma)}, {a}));
    MuTerm lhs = mapp(fold_a, mapp(mk_combinator("in-sharp", {F.body}), mv("y")));
    MuTerm rhs = mapp(a, mapp(functorial_action(nnF, fold_a, muF, sigma), mv("y")));
    note = "existence square at a = g♯: " + verdict_word(eq_mu(gamma, {}, lhs, rhs, Theory::LambdaMu2P)) +
           " (λμ2^P); uniqueness quantifies over focal h";
  } catch (const KernelError& e) {
    note = std::string("oracle failed: ") + e.what();
  }
  return {"focal initial algebra: uniqueness of fold",
          "for focal a : ¬¬F[σ]→σ, fold a♭ is the unique focal h with h ∘ in♯ = a ∘ ¬¬F[h] (F[X] = s→X)", stmt,
          note};
}

Obligation l_iso() {
  MuType s = s_ty();
  MuType ls = l_type(s), nns = MuType::neg(MuType::neg(s));
  MuTerm to = MuTerm::lam("n", ls, MuTerm::tyapp(mv("n"), MuType::bottom()));
  MuTerm from = mk_combinator("in-sharp", {s});
  MuTerm lhs1 = mapp(to, mapp(from, mv("m"))), lhs2 = mapp(from, mapp(to, mv("n")));
  RelFormula stmt =
      RelFormula::conj(RelFormula::forall_term("m", nns, RelFormula::atom(RelRef::identity(nns), lhs1, mv("m"))),
                       RelFormula::forall_term("n", ls, RelFormula::atom(RelRef::identity(ls), lhs2, mv("n"))));
  std::string note;
  try {
    EqVerdict a = eq_mu({{"m", nns}}, {}, lhs1, mv("m"), Theory::LambdaMu2P);
    EqVerdict b = eq_mu({{"n", ls}}, {}, lhs2, mv("n"), Theory::LambdaMu2P);
    note = "(λx.x ⊥) ∘ in♯ = id: " + verdict_word(a) + "; in♯ ∘ (λx.x ⊥) = id: " + verdict_word(b) + " (λμ2^P)";
  } catch (const KernelError& e) {
    note = std::string("oracle failed: ") + e.what();
  }
  return {"L monad: double-negation isomorphism", "λx^{Lσ}.x ⊥ : Lσ → ¬¬σ is an isomorphism with inverse in♯",
          stmt, note};
}

Obligation bottom_initial() {
  MuType s = s_ty();
  RelFormula stmt = RelFormula::forall_term(
      "g", MuType::arrow(MuType::bottom(), s),
      RelFormula::forall_term("x", MuType::bottom(),
                              RelFormula::atom(RelRef::graph(mv("g"), true), mv("x"),
                                               mapp(mk_combinator("Abort", {s}), mv("x")))));
  return {"falsity: focal initiality", "A_σ is the unique focal map from ⊥ to σ", stmt,
          "not executable: quantifies over focal maps"};
}

Obligation instantiation_linear() {
  MuType s = s_ty(), t = t_ty();
  MuType st = MuType::arrow(s, t);
  MuTerm inst_app = MuTerm::lam("x", st, mapp(mv("x"), mv("n")));
  MuType poly = MuType::forall("X", MuType::arrow(MuType::var("X"), s));
  MuTerm inst_ty = MuTerm::lam("x", poly, MuTerm::tyapp(mv("x"), t));
  auto linear = [](const MuTerm& f, const MuType& dom, const MuType& cod) {
    MuTerm lhs = mapp(f, mapp(MuTerm::tyapp(mv("M"), dom), MuTerm::lam("y", dom, mv("y"))));
    MuTerm rhs = mapp(MuTerm::tyapp(mv("M"), cod), f);
    return RelFormula::forall_term("M", l_type(dom), RelFormula::atom(RelRef::identity(cod), lhs, rhs));
  };
  MuType poly_cod = MuType::arrow(t, s);
  RelFormula stmt = RelFormula::conj(linear(inst_app, st, t), linear(inst_ty, poly, poly_cod));
  std::string note;
  try {
    EqVerdict a = check_linear({{"n", s}}, {}, inst_app, Theory::LambdaMu2P);
    EqVerdict b = check_linear({}, {}, inst_ty, Theory::LambdaMu2P);
    note = "x N: " + verdict_word(a) + "; x σ₁: " + verdict_word(b) + " (λμ2^P, linearity needs parametricity)";
  } catch (const KernelError& e) {
    note = std::string("oracle failed: ") + e.what();
  }
  return {"linear maps: instantiation maps", "λx^{σ₁→σ₂}.x N and λx^{∀X.σ}.x σ₁ are linear", stmt, note};
}

Obligation fold_naturality() {
  TypeScheme F{"X", MuType::arrow(s_ty(), MuType::var("X"))};
  MuType muF = mu_type(F), t1 = MuType::var("t1"), t2 = MuType::var("t2");
  RelRef gh = RelRef::graph(mv("h"), true);
  MuTerm fh = functorial_action(F, mv("h"), t1, t2);
  RelFormula premise = RelFormula::forall_term(
      "y", F.at(t1), RelFormula::atom(gh, mapp(mv("a"), mv("y")), mapp(mv("b"), mapp(fh, mv("y")))));
  auto fold = [&](const MuType& s, const std::string& alg) {
    return mapp(mk_combinator("fold", {F.body, s}), mv(alg));
  };
  RelFormula concl =
      RelFormula::forall_term("z", muF, RelFormula::atom(gh, mapp(fold(t1, "a"), mv("z")), mapp(fold(t2, "b"), mv("z"))));
  RelFormula stmt = RelFormula::forall_term(
      "h", MuType::arrow(t1, t2),
      RelFormula::forall_term("a", MuType::arrow(F.at(t1), t1),
                              RelFormula::forall_term("b", MuType::arrow(F.at(t2), t2),
                                                      RelFormula::implies(premise, concl))));
  return {"focal initial algebra: fold naturality",
          "whenever h is focal and h ∘ a = b ∘ F[h], h ∘ fold a = fold b (F[X] = s→X)", stmt,
          "follows from the free theorem of μX.F[X] at ⟨h⟩; the oracle cannot use the premise"};
}

}  // namespace

std::vector<Obligation> obligations() {
  return {final_coalgebra(), existential_iso(), fold_uniqueness(), l_iso(), bottom_initial(),
          instantiation_linear(), fold_naturality()};
}

}  // namespace mu2forge
