#include "mu2forge/normalizer.hpp"

#include <map>
#include <sstream>

namespace mu2forge {

// ---------------------------------------------------------------------------
// Trace text

std::string format_step(const RewriteStep& step) {
  std::string out = step.axiom + ' ';
  if (step.path.empty()) {
    out += '-';
  } else {
    for (std::size_t i = 0; i < step.path.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(step.path[i]);
    }
  }
  for (const auto& a : step.args) out += ' ' + a;
  return out;
}

RewriteStep parse_step(std::string_view line) {
  std::istringstream is{std::string(line)};
  RewriteStep step;
  std::string path;
  if (!(is >> step.axiom >> path)) throw KernelError(Errc::TraceInvalid, "malformed step: " + std::string(line));
  if (path != "-") {
    std::size_t start = 0;
    while (start <= path.size()) {
      std::size_t dot = path.find('.', start);
      std::string part = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw KernelError(Errc::TraceInvalid, "bad path: " + path);
      step.path.push_back(std::stoi(part));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
  }
  for (std::string a; is >> a;) step.args.push_back(a);
  return step;
}

std::string format_trace(const Trace& trace) {
  std::string out;
  for (const auto& s : trace) out += format_step(s) + '\n';
  return out;
}

Trace parse_trace(std::string_view text) {
  Trace out;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(parse_step(line));
  return out;
}

// ---------------------------------------------------------------------------
// Positions

TargetTerm subterm_at(const TargetTerm& t, const Path& path) {
  TargetTerm cur = t;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur.arity())
      throw KernelError(Errc::TraceInvalid, "path leaves the term");
    cur = cur.child(static_cast<std::size_t>(i));
  }
  return cur;
}

namespace {

TargetTerm replace_from(const TargetTerm& t, const Path& path, std::size_t depth, const TargetTerm& r) {
  if (depth == path.size()) return r;
  int i = path[depth];
  if (i < 0 || static_cast<std::size_t>(i) >= t.arity()) throw KernelError(Errc::TraceInvalid, "path leaves the term");
  TargetTerm c = replace_from(t.child(static_cast<std::size_t>(i)), path, depth + 1, r);
  if (t.arity() == 1) return t.with_children(c);
  return i == 0 ? t.with_children(c, t.child(1)) : t.with_children(t.child(0), c);
}

// Context for child `i` of `t`, given the context of `t`.
void push_child_context(TargetContext& ctx, const TargetTerm& t, std::size_t i, Mode mode) {
  switch (t.kind()) {
    case TargetTerm::Kind::Lam: ctx.emplace_back(t.name(), t.type()); return;
    case TargetTerm::Kind::LetPair:
      if (i == 1) {
        TargetType s = typecheck_target(ctx, t.scrutinee(), mode);
        if (!s.is(TargetType::Kind::Conj)) throw KernelError(Errc::TypeMismatch, "let-pair scrutinee");
        ctx.emplace_back(t.name(), s.left());
        ctx.emplace_back(t.name2(), s.right());
      }
      return;
    case TargetTerm::Kind::LetPack:
      if (i == 1) {
        TargetType s = typecheck_target(ctx, t.scrutinee(), mode);
        if (!s.is(TargetType::Kind::Exists)) throw KernelError(Errc::TypeMismatch, "let-pack scrutinee");
        ctx.emplace_back(t.name2(), subst_type(s.body(), s.name(), TargetType::var(t.name())));
      }
      return;
    default: return;
  }
}

Path extend(const Path& p, int i) {
  Path q = p;
  q.push_back(i);
  return q;
}

const TargetType* lookup(const TargetContext& ctx, const std::string& n) {
  for (std::size_t i = ctx.size(); i-- > 0;)
    if (ctx[i].first == n) return &ctx[i].second;
  return nullptr;
}

NameSet context_type_vars(const TargetContext& ctx) {
  NameSet out;
  for (const auto& [n, t] : ctx) {
    NameSet f = free_type_vars(t);
    out.insert(f.begin(), f.end());
  }
  return out;
}

}  // namespace

TargetTerm replace_at(const TargetTerm& t, const Path& path, const TargetTerm& replacement) {
  return replace_from(t, path, 0, replacement);
}

TargetContext context_at(const TargetContext& ctx, const TargetTerm& t, const Path& path, Mode mode) {
  TargetContext out = ctx;
  TargetTerm cur = t;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur.arity())
      throw KernelError(Errc::TraceInvalid, "path leaves the term");
    push_child_context(out, cur, static_cast<std::size_t>(i), mode);
    cur = cur.child(static_cast<std::size_t>(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom schemas. Both the normalizer and the replayer go through apply_step,
// so a logged step means exactly what the replayer will check.

namespace {

[[noreturn]] void bad_step(const RewriteStep& s, const std::string& why) {
  throw KernelError(Errc::TraceInvalid, format_step(s) + ": " + why);
}

// Replaces units ⟨x,y⟩ (with x and y still referring to the let's binders)
// by the variable z.
TargetTerm replace_pair_units(const TargetTerm& n, const std::string& x, const std::string& y, bool live_x,
                              bool live_y, const TargetTerm& z) {
  if (!live_x && !live_y) return n;
  switch (n.kind()) {
    case TargetTerm::Kind::Var:
    case TargetTerm::Kind::Star: return n;
    case TargetTerm::Kind::Pair:
      if (live_x && live_y && n.fst().is(TargetTerm::Kind::Var) && n.fst().name() == x &&
          n.snd().is(TargetTerm::Kind::Var) && n.snd().name() == y)
        return z;
      return n.with_children(replace_pair_units(n.fst(), x, y, live_x, live_y, z),
                             replace_pair_units(n.snd(), x, y, live_x, live_y, z));
    case TargetTerm::Kind::Lam:
      return n.with_children(
          replace_pair_units(n.body(), x, y, live_x && n.name() != x, live_y && n.name() != y, z));
    case TargetTerm::Kind::App:
      return n.with_children(replace_pair_units(n.child(0), x, y, live_x, live_y, z),
                             replace_pair_units(n.child(1), x, y, live_x, live_y, z));
    case TargetTerm::Kind::Pack: return n.with_children(replace_pair_units(n.payload(), x, y, live_x, live_y, z));
    case TargetTerm::Kind::LetPair: {
      bool lx = live_x && n.name() != x && n.name2() != x;
      bool ly = live_y && n.name() != y && n.name2() != y;
      return n.with_children(replace_pair_units(n.scrutinee(), x, y, live_x, live_y, z),
                             replace_pair_units(n.body(), x, y, lx, ly, z));
    }
    case TargetTerm::Kind::LetPack:
      return n.with_children(replace_pair_units(n.scrutinee(), x, y, live_x, live_y, z),
                             replace_pair_units(n.body(), x, y, live_x && n.name2() != x, live_y && n.name2() != y, z));
  }
  return n;
}

TargetTerm replace_pack_units(const TargetTerm& n, const std::string& tv, const std::string& x, const TargetType& as,
                              bool live_t, bool live_x, const TargetTerm& z) {
  if (!live_t || !live_x) return n;
  switch (n.kind()) {
    case TargetTerm::Kind::Var:
    case TargetTerm::Kind::Star: return n;
    case TargetTerm::Kind::Pack:
      if (n.type().is(TargetType::Kind::Var) && n.type().name() == tv && n.payload().is(TargetTerm::Kind::Var) &&
          n.payload().name() == x && n.pack_type() == as)
        return z;
      return n.with_children(replace_pack_units(n.payload(), tv, x, as, live_t, live_x, z));
    case TargetTerm::Kind::Lam:
      return n.with_children(replace_pack_units(n.body(), tv, x, as, live_t, live_x && n.name() != x, z));
    case TargetTerm::Kind::App:
    case TargetTerm::Kind::Pair:
      return n.with_children(replace_pack_units(n.child(0), tv, x, as, live_t, live_x, z),
                             replace_pack_units(n.child(1), tv, x, as, live_t, live_x, z));
    case TargetTerm::Kind::LetPair:
      return n.with_children(
          replace_pack_units(n.scrutinee(), tv, x, as, live_t, live_x, z),
          replace_pack_units(n.body(), tv, x, as, live_t, live_x && n.name() != x && n.name2() != x, z));
    case TargetTerm::Kind::LetPack:
      return n.with_children(replace_pack_units(n.scrutinee(), tv, x, as, live_t, live_x, z),
                             replace_pack_units(n.body(), tv, x, as, live_t && n.name() != tv,
                                                live_x && n.name2() != x, z));
  }
  return n;
}

std::string unused_name(const TargetTerm& a, const TargetTerm& b, const TargetContext& ctx) {
  NameSet avoid = all_identifiers(a);
  NameSet more = all_identifiers(b);
  avoid.insert(more.begin(), more.end());
  for (const auto& [n, t] : ctx) avoid.insert(n);
  return fresh_name("z", avoid);
}

// Result of contracting a let-pair; empty when the side condition fails.
std::optional<TargetTerm> pair_contractum(const TargetTerm& sub, const TargetContext& ctx) {
  const std::string &x = sub.name(), &y = sub.name2();
  if (x == y) return std::nullopt;
  std::string z = unused_name(sub, sub, ctx);
  TargetTerm n = replace_pair_units(sub.body(), x, y, true, true, TargetTerm::var(z));
  NameSet fv = free_vars(n);
  if (fv.count(x) || fv.count(y)) return std::nullopt;
  return target_subst(n, z, sub.scrutinee());
}

std::optional<TargetTerm> pack_contractum(const TargetTerm& sub, const TargetContext& ctx, Mode mode) {
  TargetType as = typecheck_target(ctx, sub.scrutinee(), mode);
  std::string z = unused_name(sub, sub, ctx);
  TargetTerm n = replace_pack_units(sub.body(), sub.name(), sub.name2(), as, true, true, TargetTerm::var(z));
  if (free_vars(n).count(sub.name2()) || free_type_vars(n).count(sub.name())) return std::nullopt;
  return target_subst(n, z, sub.scrutinee());
}

TargetTerm apply_step(const TargetContext& ctx, const TargetTerm& sub, const RewriteStep& s, Mode mode) {
  using K = TargetTerm::Kind;
  const std::string& ax = s.axiom;
  auto need_args = [&](std::size_t n) {
    if (s.args.size() != n) bad_step(s, "expected " + std::to_string(n) + " arguments");
  };
  auto need_parametric = [&]() {
    if (mode != Mode::Parametric) bad_step(s, "only valid in parametric mode");
  };
  if (ax == "beta-lam") {
    if (!sub.is(K::App) || !sub.fn().is(K::Lam)) bad_step(s, "not a lambda redex");
    return target_subst(sub.fn().body(), sub.fn().name(), sub.arg());
  }
  if (ax == "beta-pair") {
    if (!sub.is(K::LetPair) || !sub.scrutinee().is(K::Pair)) bad_step(s, "not a pair redex");
    if (sub.name() == sub.name2()) bad_step(s, "binders coincide");
    return target_subst(sub.body(), {{sub.name(), sub.scrutinee().fst()}, {sub.name2(), sub.scrutinee().snd()}});
  }
  if (ax == "beta-pack") {
    if (!sub.is(K::LetPack) || !sub.scrutinee().is(K::Pack)) bad_step(s, "not a pack redex");
    const TargetTerm p = sub.scrutinee();
    return target_subst(sub.body(), {{sub.name2(), p.payload()}}, {{sub.name(), p.type()}});
  }
  if (ax == "star-unpack") {
    need_parametric();
    if (!sub.is(K::LetPack) || !sub.scrutinee().is(K::Star)) bad_step(s, "not an unpacking of *");
    return target_subst(sub.body(), {{sub.name2(), TargetTerm::star()}}, {{sub.name(), TargetType::top()}});
  }
  if (ax == "star") {
    need_parametric();
    if (sub.is(K::Star)) bad_step(s, "already *");
    if (!typecheck_target(ctx, sub, mode).is_top()) bad_step(s, "subterm is not of type exists X. X");
    return TargetTerm::star();
  }
  if (ax == "star-expand") {
    need_parametric();
    need_args(1);
    if (!sub.is(K::Star)) bad_step(s, "not *");
    const TargetType* t = lookup(ctx, s.args[0]);
    if (!t || !t->is_top()) bad_step(s, s.args[0] + " is not a variable of type exists X. X");
    return TargetTerm::var(s.args[0]);
  }
  if (ax == "eta-lam-expand") {
    need_args(1);
    TargetType t = typecheck_target(ctx, sub, mode);
    if (!t.is(TargetType::Kind::Neg)) bad_step(s, "subterm is not of negated type");
    if (free_vars(sub).count(s.args[0])) bad_step(s, "binder occurs free");
    return TargetTerm::lam(s.args[0], t.body(), TargetTerm::app(sub, TargetTerm::var(s.args[0])));
  }
  if (ax == "eta-lam-contract") {
    if (!sub.is(K::Lam) || !sub.body().is(K::App)) bad_step(s, "not an eta redex");
    const TargetTerm app = sub.body();
    if (!app.arg().is(K::Var) || app.arg().name() != sub.name() || free_vars(app.fn()).count(sub.name()))
      bad_step(s, "not an eta redex");
    return app.fn();
  }
  if (ax == "eta-pair-expand") {
    need_args(3);
    const std::string &z = s.args[0], &a = s.args[1], &b = s.args[2];
    const TargetType* t = lookup(ctx, z);
    if (!t || !t->is(TargetType::Kind::Conj)) bad_step(s, z + " is not a variable of conjunctive type");
    NameSet fv = free_vars(sub);
    if (a == b || a == z || b == z || fv.count(a) || fv.count(b)) bad_step(s, "binders not fresh");
    return TargetTerm::let_pair(a, b, TargetTerm::var(z),
                                target_subst(sub, z, TargetTerm::pair(TargetTerm::var(a), TargetTerm::var(b))));
  }
  if (ax == "eta-pack-expand") {
    need_args(3);
    const std::string &z = s.args[0], &tv = s.args[1], &x = s.args[2];
    const TargetType* t = lookup(ctx, z);
    if (!t || !t->is(TargetType::Kind::Exists)) bad_step(s, z + " is not a variable of existential type");
    if (x == z || free_vars(sub).count(x)) bad_step(s, "term binder not fresh");
    if (context_type_vars(ctx).count(tv) || free_type_vars(sub).count(tv) ||
        free_type_vars(typecheck_target(ctx, sub, mode)).count(tv))
      bad_step(s, "type binder not fresh");
    TargetTerm unit = TargetTerm::pack(TargetType::var(tv), TargetTerm::var(x), *t);
    return TargetTerm::let_pack(tv, x, TargetTerm::var(z), target_subst(sub, z, unit));
  }
  if (ax == "eta-pair-contract") {
    if (!sub.is(K::LetPair)) bad_step(s, "not a let-pair");
    auto r = pair_contractum(sub, ctx);
    if (!r) bad_step(s, "binders used outside the unit pair");
    return *r;
  }
  if (ax == "eta-pack-contract") {
    if (!sub.is(K::LetPack)) bad_step(s, "not a let-pack");
    auto r = pack_contractum(sub, ctx, mode);
    if (!r) bad_step(s, "binders used outside the unit pack");
    return *r;
  }
  bad_step(s, "unknown axiom");
}

bool is_beta_redex(const TargetTerm& t, Mode mode) {
  using K = TargetTerm::Kind;
  switch (t.kind()) {
    case K::App: return t.fn().is(K::Lam);
    case K::LetPair: return t.scrutinee().is(K::Pair);
    case K::LetPack: return t.scrutinee().is(K::Pack) || (mode == Mode::Parametric && t.scrutinee().is(K::Star));
    default: return false;
  }
}

const char* beta_axiom(const TargetTerm& t) {
  switch (t.kind()) {
    case TargetTerm::Kind::App: return "beta-lam";
    case TargetTerm::Kind::LetPair: return "beta-pair";
    default: return t.scrutinee().is(TargetTerm::Kind::Star) ? "star-unpack" : "beta-pack";
  }
}

bool find_redex(const TargetTerm& t, Mode mode, Path& path) {
  if (is_beta_redex(t, mode)) return true;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(static_cast<int>(i));
    if (find_redex(t.child(i), mode, path)) return true;
    path.pop_back();
  }
  return false;
}

bool should_open(const TargetType& t, Mode mode) {
  if (t.is(TargetType::Kind::Conj)) return true;
  return t.is(TargetType::Kind::Exists) && !(mode == Mode::Parametric && t.is_top());
}

// The normalizer proper. Every change goes through `step`, which logs the
// rewrite and applies it via apply_step.
class Engine {
 public:
  Engine(Mode mode, Trace* trace) : mode_(mode), trace_(trace) {}

  TargetTerm step(const TargetContext& ctx, const TargetTerm& sub, RewriteStep s) {
    TargetTerm r = apply_step(ctx, sub, s, mode_);
    if (trace_) trace_->push_back(std::move(s));
    return r;
  }

  TargetTerm beta(TargetTerm t, const Path& at) {
    for (;;) {
      Path p;
      if (!find_redex(t, mode_, p)) return t;
      TargetTerm sub = subterm_at(t, p);
      Path full = at;
      full.insert(full.end(), p.begin(), p.end());
      t = replace_at(t, p, step({}, sub, {beta_axiom(sub), full, {}}));
    }
  }

  // Replaces every maximal non-⋆ subterm of type ∃X.X by ⋆.
  TargetTerm collapse(TargetContext& ctx, const TargetTerm& t, const Path& path, bool& changed) {
    if (!t.is(TargetTerm::Kind::Star) && typecheck_target(ctx, t, mode_).is_top()) {
      changed = true;
      return step(ctx, t, {"star", path, {}});
    }
    return map_children(ctx, t, path, [&](TargetContext& c, const TargetTerm& child, const Path& p) {
      return collapse(c, child, p, changed);
    });
  }

  TargetTerm beta_star(TargetTerm t, const TargetContext& ctx) {
    for (;;) {
      t = beta(t, {});
      if (mode_ != Mode::Parametric) return t;
      bool changed = false;
      TargetContext c = ctx;
      t = collapse(c, t, {}, changed);
      if (!changed) return t;
    }
  }

  // Opens the binders in `pending`, innermost last, at the start of scope `s`.
  TargetTerm open_scope(TargetContext& ctx, std::vector<std::pair<std::string, TargetType>> pending, TargetTerm s,
                        const Path& path) {
    while (!pending.empty()) {
      auto [v, type] = pending.front();
      pending.erase(pending.begin());
      if (!should_open(type, mode_) || !free_vars(s).count(v)) continue;
      NameSet avoid = free_vars(s);
      for (const auto& [n, t] : ctx) avoid.insert(n);
      std::size_t mark = ctx.size();
      TargetTerm opened = s;
      std::vector<std::pair<std::string, TargetType>> inner;
      if (type.is(TargetType::Kind::Conj)) {
        std::string a = fresh(type.left().is(TargetType::Kind::Neg) ? "x" : "k", avoid);
        avoid.insert(a);
        std::string b = fresh(type.right().is(TargetType::Kind::Neg) ? "x" : "k", avoid);
        opened = step(ctx, s, {"eta-pair-expand", path, {v, a, b}});
        ctx.emplace_back(a, type.left());
        ctx.emplace_back(b, type.right());
        inner = {{a, type.left()}, {b, type.right()}};
      } else {
        NameSet tavoid = context_type_vars(ctx);
        NameSet ftv = free_type_vars(s);
        tavoid.insert(ftv.begin(), ftv.end());
        NameSet ft = free_type_vars(typecheck_target(ctx, s, mode_));
        tavoid.insert(ft.begin(), ft.end());
        tavoid.insert(used_.begin(), used_.end());
        std::string tv = fresh_name(type.name(), tavoid);
        used_.insert(tv);
        std::string x = fresh("k", avoid);
        opened = step(ctx, s, {"eta-pack-expand", path, {v, tv, x}});
        TargetType xt = subst_type(type.body(), type.name(), TargetType::var(tv));
        ctx.emplace_back(x, xt);
        inner = {{x, xt}};
      }
      inner.insert(inner.end(), pending.begin(), pending.end());
      TargetTerm body = open_scope(ctx, inner, opened.body(), extend(path, 1));
      ctx.erase(ctx.begin() + static_cast<long>(mark), ctx.end());
      return opened.with_children(opened.scrutinee(), body);
    }
    return descend(ctx, s, path);
  }

  TargetTerm descend(TargetContext& ctx, const TargetTerm& t, const Path& path) {
    switch (t.kind()) {
      case TargetTerm::Kind::Lam: {
        ctx.emplace_back(t.name(), t.type());
        TargetTerm body = open_scope(ctx, {{t.name(), t.type()}}, t.body(), extend(path, 0));
        ctx.pop_back();
        return t.with_children(body);
      }
      case TargetTerm::Kind::LetPair:
      case TargetTerm::Kind::LetPack: {
        TargetTerm scrut = descend(ctx, t.scrutinee(), extend(path, 0));
        std::size_t mark = ctx.size();
        TargetTerm cur = t.with_children(scrut, t.body());
        push_child_context(ctx, cur, 1, mode_);
        std::vector<std::pair<std::string, TargetType>> pending(ctx.begin() + static_cast<long>(mark), ctx.end());
        TargetTerm body = open_scope(ctx, pending, t.body(), extend(path, 1));
        ctx.erase(ctx.begin() + static_cast<long>(mark), ctx.end());
        return cur.with_children(scrut, body);
      }
      default:
        return map_children(ctx, t, path, [&](TargetContext& c, const TargetTerm& child, const Path& p) {
          return descend(c, child, p);
        });
    }
  }

  TargetTerm contract(TargetContext& ctx, const TargetTerm& t, const Path& path) {
    TargetTerm cur = map_children(ctx, t, path, [&](TargetContext& c, const TargetTerm& child, const Path& p) {
      return contract(c, child, p);
    });
    for (;;) {
      std::optional<TargetTerm> next = contract_root(ctx, cur, path);
      if (!next) return cur;
      cur = *next;
    }
  }

  TargetTerm run(const TargetContext& ctx, const TargetTerm& term, const TargetType& type) {
    seed(ctx, term);
    TargetTerm t = beta_star(term, ctx);
    if (type.is(TargetType::Kind::Neg) && !t.is(TargetTerm::Kind::Lam)) {
      NameSet avoid = free_vars(t);
      for (const auto& [n, ty] : ctx) avoid.insert(n);
      t = step(ctx, t, {"eta-lam-expand", {}, {fresh("k", avoid)}});
    }
    seed(ctx, t);
    // Free variables of the context are opened at the start of the root
    // lambda's body, or at the root itself.
    std::vector<std::pair<std::string, TargetType>> free_pending;
    NameSet fv = free_vars(t);
    NameSet seen;
    for (std::size_t i = ctx.size(); i-- > 0;) {
      const auto& [n, ty] = ctx[i];
      if (seen.insert(n).second && fv.count(n)) free_pending.insert(free_pending.begin(), {n, ty});
    }
    TargetContext c = ctx;
    if (t.is(TargetTerm::Kind::Lam)) {
      std::vector<std::pair<std::string, TargetType>> pending{{t.name(), t.type()}};
      for (const auto& e : free_pending)
        if (e.first != t.name()) pending.push_back(e);
      c.emplace_back(t.name(), t.type());
      t = t.with_children(open_scope(c, pending, t.body(), {0}));
    } else {
      t = open_scope(c, free_pending, t, {});
    }
    t = beta_star(t, ctx);
    TargetContext c2 = ctx;
    return contract(c2, t, {});
  }

 private:
  template <typename F>
  TargetTerm map_children(TargetContext& ctx, const TargetTerm& t, const Path& path, F&& f) {
    if (t.arity() == 0) return t;
    std::size_t mark = ctx.size();
    push_child_context(ctx, t, 0, mode_);
    TargetTerm c0 = f(ctx, t.child(0), extend(path, 0));
    ctx.erase(ctx.begin() + static_cast<long>(mark), ctx.end());
    if (t.arity() == 1) return c0.id() == t.child(0).id() ? t : t.with_children(c0);
    TargetTerm partial = t.with_children(c0, t.child(1));
    push_child_context(ctx, partial, 1, mode_);
    TargetTerm c1 = f(ctx, t.child(1), extend(path, 1));
    ctx.erase(ctx.begin() + static_cast<long>(mark), ctx.end());
    if (c0.id() == t.child(0).id() && c1.id() == t.child(1).id()) return t;
    return t.with_children(c0, c1);
  }

  std::optional<TargetTerm> contract_root(TargetContext& ctx, const TargetTerm& t, const Path& path) {
    using K = TargetTerm::Kind;
    bool par = mode_ == Mode::Parametric;
    if (t.is(K::Lam) && t.body().is(K::App)) {
      TargetTerm app = t.body();
      if (free_vars(app.fn()).count(t.name())) return std::nullopt;
      if (app.arg().is(K::Var) && app.arg().name() == t.name())
        return step(ctx, t, {"eta-lam-contract", path, {}});
      if (par && app.arg().is(K::Star) && t.type().is_top()) {
        ctx.emplace_back(t.name(), t.type());
        TargetTerm arg = step(ctx, app.arg(), {"star-expand", extend(extend(path, 0), 1), {t.name()}});
        ctx.pop_back();
        TargetTerm expanded = t.with_children(app.with_children(app.fn(), arg));
        return step(ctx, expanded, {"eta-lam-contract", path, {}});
      }
      return std::nullopt;
    }
    if (t.is(K::LetPair)) {
      TargetType st = typecheck_target(ctx, t.scrutinee(), mode_);
      bool xt = par && st.left().is_top(), yt = par && st.right().is_top();
      TargetTerm body = t.body();
      if (xt || yt) {
        std::size_t mark = ctx.size();
        push_child_context(ctx, t, 1, mode_);
        body = expand_pair_stars(ctx, body, extend(path, 1), t.name(), t.name2(), xt, yt, true, true);
        ctx.erase(ctx.begin() + static_cast<long>(mark), ctx.end());
      }
      TargetTerm cand = t.with_children(t.scrutinee(), body);
      if (!pair_contractum(cand, ctx)) {
        pending_.clear();
        return std::nullopt;
      }
      flush_pending();
      return step(ctx, cand, {"eta-pair-contract", path, {}});
    }
    if (t.is(K::LetPack)) {
      TargetType st = typecheck_target(ctx, t.scrutinee(), mode_);
      bool xt = par && st.body().is_top();
      TargetTerm body = t.body();
      if (xt) {
        std::size_t mark = ctx.size();
        push_child_context(ctx, t, 1, mode_);
        body = expand_pack_stars(ctx, body, extend(path, 1), t.name(), t.name2(), st, true, true);
        ctx.erase(ctx.begin() + static_cast<long>(mark), ctx.end());
      }
      TargetTerm cand = t.with_children(t.scrutinee(), body);
      if (!pack_contractum(cand, ctx, mode_)) {
        pending_.clear();
        return std::nullopt;
      }
      flush_pending();
      return step(ctx, cand, {"eta-pack-contract", path, {}});
    }
    return std::nullopt;
  }

  // Star expansions are tentative until the contraction they enable is
  // known to go through, so they are buffered here.
  void flush_pending() {
    if (trace_) trace_->insert(trace_->end(), pending_.begin(), pending_.end());
    pending_.clear();
  }

  TargetTerm tentative(const TargetContext& ctx, const TargetTerm& sub, RewriteStep s) {
    TargetTerm r = apply_step(ctx, sub, s, mode_);
    pending_.push_back(std::move(s));
    return r;
  }

  // Rewrites ⟨⋆,y⟩, ⟨x,⋆⟩ to ⟨x,y⟩ where the starred binder has type ∃X.X.
  TargetTerm expand_pair_stars(TargetContext& ctx, const TargetTerm& n, const Path& path, const std::string& x,
                               const std::string& y, bool xt, bool yt, bool live_x, bool live_y) {
    using K = TargetTerm::Kind;
    if (!live_x || !live_y) return n;
    if (n.is(K::Pair)) {
      TargetTerm a = n.fst(), b = n.snd();
      bool a_ok = (a.is(K::Var) && a.name() == x) || (xt && a.is(K::Star));
      bool b_ok = (b.is(K::Var) && b.name() == y) || (yt && b.is(K::Star));
      bool real = (a.is(K::Var) && a.name() == x) || (b.is(K::Var) && b.name() == y);
      if (a_ok && b_ok && real) {
        if (a.is(K::Star)) a = tentative(ctx, a, {"star-expand", extend(path, 0), {x}});
        if (b.is(K::Star)) b = tentative(ctx, b, {"star-expand", extend(path, 1), {y}});
        return n.with_children(a, b);
      }
    }
    if (n.arity() == 0) return n;
    bool lx = live_x, ly = live_y;
    if (n.is(K::Lam)) {
      lx = lx && n.name() != x;
      ly = ly && n.name() != y;
    }
    auto binds = [&](const TargetTerm& m, const std::string& v) {
      return (m.is(K::LetPair) && (m.name() == v || m.name2() == v)) || (m.is(K::LetPack) && m.name2() == v);
    };
    return map_children(ctx, n, path, [&](TargetContext& c, const TargetTerm& child, const Path& p) {
      bool in_body = p.back() == 1 && (n.is(K::LetPair) || n.is(K::LetPack));
      bool cx = in_body ? lx && !binds(n, x) : lx;
      bool cy = in_body ? ly && !binds(n, y) : ly;
      return expand_pair_stars(c, child, p, x, y, xt, yt, cx, cy);
    });
  }

  TargetTerm expand_pack_stars(TargetContext& ctx, const TargetTerm& n, const Path& path, const std::string& tv,
                               const std::string& x, const TargetType& as, bool live_t, bool live_x) {
    using K = TargetTerm::Kind;
    if (!live_t || !live_x) return n;
    if (n.is(K::Pack) && n.payload().is(K::Star) && n.type().is(TargetType::Kind::Var) && n.type().name() == tv &&
        n.pack_type() == as)
      return n.with_children(tentative(ctx, n.payload(), {"star-expand", extend(path, 0), {x}}));
    if (n.arity() == 0) return n;
    bool lx = live_x && !(n.is(K::Lam) && n.name() == x);
    return map_children(ctx, n, path, [&](TargetContext& c, const TargetTerm& child, const Path& p) {
      bool in_body = p.back() == 1 && (n.is(K::LetPair) || n.is(K::LetPack));
      bool cx = lx, ct = live_t;
      if (in_body && n.is(K::LetPair)) cx = cx && n.name() != x && n.name2() != x;
      if (in_body && n.is(K::LetPack)) {
        cx = cx && n.name2() != x;
        ct = ct && n.name() != tv;
      }
      return expand_pack_stars(c, child, p, tv, x, as, ct, cx);
    });
  }

  void seed(const TargetContext& ctx, const TargetTerm& t) {
    NameSet ids = all_identifiers(t);
    used_.insert(ids.begin(), ids.end());
    for (const auto& [n, ty] : ctx) {
      used_.insert(n);
      NameSet f = free_type_vars(ty);
      used_.insert(f.begin(), f.end());
    }
  }

  std::string fresh(const std::string& base, const NameSet& avoid) {
    std::string n = fresh_name(base, [&](const std::string& s) { return used_.count(s) || avoid.count(s); });
    used_.insert(n);
    return n;
  }

  Mode mode_;
  Trace* trace_;
  NameSet used_;
  Trace pending_;
};

}  // namespace

// ---------------------------------------------------------------------------

TargetTerm beta_normalize(const TargetTerm& term, Mode mode, Trace* trace) {
  Engine e(mode, trace);
  return e.beta(term, {});
}

bool is_image_type(const TargetType& t) {
  switch (t.kind()) {
    case TargetType::Kind::Var: return true;
    case TargetType::Kind::Conj:
      return t.left().is(TargetType::Kind::Neg) && is_image_type(t.left().body()) && is_image_type(t.right());
    case TargetType::Kind::Exists: return is_image_type(t.body());
    default: return false;
  }
}

std::string_view kind_name(CanonicalForm::Kind k) {
  switch (k) {
    case CanonicalForm::Kind::Program: return "Program";
    case CanonicalForm::Kind::Continuation: return "Continuation";
    case CanonicalForm::Kind::Answer: return "Answer";
  }
  return "?";
}

namespace {

bool is_program(const TargetTerm& t, Mode mode);
bool is_continuation(const TargetTerm& t, Mode mode);

bool is_answer(const TargetTerm& t, Mode mode) {
  switch (t.kind()) {
    case TargetTerm::Kind::App: return is_program(t.fn(), mode) && is_continuation(t.arg(), mode);
    case TargetTerm::Kind::LetPair:
    case TargetTerm::Kind::LetPack: return is_continuation(t.scrutinee(), mode) && is_answer(t.body(), mode);
    default: return false;
  }
}

bool is_program(const TargetTerm& t, Mode mode) {
  return t.is(TargetTerm::Kind::Var) || (t.is(TargetTerm::Kind::Lam) && is_answer(t.body(), mode));
}

bool is_continuation(const TargetTerm& t, Mode mode) {
  switch (t.kind()) {
    case TargetTerm::Kind::Var: return true;
    case TargetTerm::Kind::Star: return mode == Mode::Parametric;
    case TargetTerm::Kind::Pair: return is_program(t.fst(), mode) && is_continuation(t.snd(), mode);
    case TargetTerm::Kind::Pack: return is_continuation(t.payload(), mode);
    case TargetTerm::Kind::LetPair:
    case TargetTerm::Kind::LetPack: return is_continuation(t.scrutinee(), mode) && is_continuation(t.body(), mode);
    default: return false;
  }
}

CanonicalForm::Kind kind_for(const TargetType& type) {
  if (type.is(TargetType::Kind::Answer)) return CanonicalForm::Kind::Answer;
  if (type.is(TargetType::Kind::Neg)) return CanonicalForm::Kind::Program;
  return CanonicalForm::Kind::Continuation;
}

CanonicalForm normal_form(const TargetContext& ctx, const TargetTerm& term, const TargetType& type, Mode mode) {
  TargetType actual = typecheck_target(ctx, term, mode);
  if (actual != type)
    throw KernelError(Errc::TypeMismatch, "term has type " + to_string(actual) + ", expected " + to_string(type));
  CanonicalForm out{kind_for(type), term, type, {}};
  Engine e(mode, &out.trace);
  out.term = e.run(ctx, term, type);
  return out;
}

// Canonical binder names: each binder is renamed after the shape of its type
// (x for negations, z for pairs and packs, k otherwise, X for type binders),
// numbered in pre-order. Two α-equivalent normal forms then print the same.
class Renamer {
 public:
  Renamer(const TargetContext& ctx, const TargetTerm& m, Mode mode) : mode_(mode) {
    avoid_ = free_vars(m);
    for (const auto& n : free_type_vars(m)) avoid_.insert(n);
    for (const auto& [x, ty] : ctx) {
      avoid_.insert(x);
      for (const auto& n : free_type_vars(ty)) avoid_.insert(n);
    }
  }

  TargetTerm run(TargetContext& ctx, const TargetTerm& m, const std::map<std::string, std::string>& vars,
                 const std::map<std::string, TargetType>& tys) {
    using K = TargetTerm::Kind;
    switch (m.kind()) {
      case K::Var: {
        auto it = vars.find(m.name());
        return it == vars.end() ? m : TargetTerm::var(it->second);
      }
      case K::Star:
        return m;
      case K::Lam: {
        std::string n = fresh(base(m.type()));
        auto v = vars;
        v[m.name()] = n;
        ctx.emplace_back(m.name(), m.type());
        TargetTerm body = run(ctx, m.body(), v, tys);
        ctx.pop_back();
        return TargetTerm::lam(n, subst_types(m.type(), tys), body);
      }
      case K::App:
      case K::Pair:
        return m.with_children(run(ctx, m.child(0), vars, tys), run(ctx, m.child(1), vars, tys));
      case K::Pack:
        return TargetTerm::pack(subst_types(m.type(), tys), run(ctx, m.payload(), vars, tys),
                                subst_types(m.pack_type(), tys));
      case K::LetPair: {
        TargetType st = typecheck_target(ctx, m.scrutinee(), mode_);
        TargetTerm scr = run(ctx, m.scrutinee(), vars, tys);
        std::string a = fresh(base(st.left())), b = fresh(base(st.right()));
        auto v = vars;
        v[m.name()] = a;
        v[m.name2()] = b;
        ctx.emplace_back(m.name(), st.left());
        ctx.emplace_back(m.name2(), st.right());
        TargetTerm body = run(ctx, m.body(), v, tys);
        ctx.pop_back();
        ctx.pop_back();
        return TargetTerm::let_pair(a, b, scr, body);
      }
      case K::LetPack: {
        TargetType st = typecheck_target(ctx, m.scrutinee(), mode_);
        TargetTerm scr = run(ctx, m.scrutinee(), vars, tys);
        TargetType inner = subst_type(st.body(), st.name(), TargetType::var(m.name()));
        std::string X = fresh("X"), x = fresh(base(inner));
        auto v = vars;
        v[m.name2()] = x;
        auto t = tys;
        t.insert_or_assign(m.name(), TargetType::var(X));
        ctx.emplace_back(m.name2(), inner);
        TargetTerm body = run(ctx, m.body(), v, t);
        ctx.pop_back();
        return TargetTerm::let_pack(X, x, scr, body);
      }
    }
    return m;
  }

 private:
  static std::string base(const TargetType& t) {
    if (t.is(TargetType::Kind::Neg)) return "x";
    return t.is_positive() ? "z" : "k";
  }

  std::string fresh(const std::string& b) {
    for (;;) {
      unsigned& i = counters_[b];
      std::string n = i == 0 ? b : b + std::to_string(i);
      ++i;
      if (!avoid_.count(n)) return n;
    }
  }

  Mode mode_;
  NameSet avoid_;
  std::map<std::string, unsigned> counters_;
};

TargetTerm canonical_names(const TargetContext& ctx, const TargetTerm& m, Mode mode) {
  Renamer r(ctx, m, mode);
  TargetContext c = ctx;
  return r.run(c, m, {}, {});
}

}  // namespace

CanonicalForm::Kind classify(const TargetTerm& term, const TargetType& type, Mode mode) {
  CanonicalForm::Kind k = kind_for(type);
  bool ok = k == CanonicalForm::Kind::Answer    ? is_answer(term, mode)
            : k == CanonicalForm::Kind::Program ? is_program(term, mode)
                                                : is_continuation(term, mode);
  if (!ok)
    throw KernelError(Errc::NotCanonical, to_string(term) + " is not a " + std::string(kind_name(k)));
  return k;
}

CanonicalForm canonicalize(const TargetContext& ctx, const TargetTerm& term, const TargetType& type, Mode mode) {
  bool image = type.is(TargetType::Kind::Answer) || is_image_type(type) ||
               (type.is(TargetType::Kind::Neg) && is_image_type(type.body()));
  if (!image) throw KernelError(Errc::NotInImageType, to_string(type));
  CanonicalForm out = normal_form(ctx, term, type, mode);
  out.term = canonical_names(ctx, out.term, mode);
  classify(out.term, type, mode);
  return out;
}

EqVerdict eq_target(const TargetContext& ctx, const TargetTerm& lhs, const TargetTerm& rhs, Mode mode) {
  TargetType tl = typecheck_target(ctx, lhs, mode);
  TargetType tr = typecheck_target(ctx, rhs, mode);
  if (tl != tr)
    throw KernelError(Errc::TypeMismatch, "sides have types " + to_string(tl) + " and " + to_string(tr));
  EqVerdict v;
  v.left = normal_form(ctx, lhs, tl, mode);
  v.right = normal_form(ctx, rhs, tl, mode);
  v.equal = v.left->term == v.right->term;
  return v;
}

TargetTerm replay(const TargetContext& ctx, const TargetTerm& start, const Trace& trace, Mode mode) {
  TargetTerm t = start;
  for (const auto& s : trace) {
    TargetTerm sub = subterm_at(t, s.path);
    TargetContext c = context_at(ctx, t, s.path, mode);
    try {
      t = replace_at(t, s.path, apply_step(c, sub, s, mode));
    } catch (const KernelError& e) {
      if (e.code() == Errc::TraceInvalid) throw;
      throw KernelError(Errc::TraceInvalid, format_step(s) + ": " + e.what());
    }
  }
  try {
    typecheck_target(ctx, t, mode);
  } catch (const KernelError& e) {
    throw KernelError(Errc::TraceInvalid, std::string("replayed term is ill-typed: ") + e.what());
  }
  return t;
}

std::string validate_verdict(const TargetContext& ctx, const TargetTerm& lhs, const TargetTerm& rhs,
                             const EqVerdict& verdict, Mode mode) {
  if (!verdict.left || !verdict.right) return "verdict carries no forms";
  try {
    TargetTerm l = replay(ctx, lhs, verdict.left->trace, mode);
    TargetTerm r = replay(ctx, rhs, verdict.right->trace, mode);
    if (l != verdict.left->term) return "left trace does not reach the left form";
    if (r != verdict.right->term) return "right trace does not reach the right form";
    if (verdict.equal && l != r) return "traces do not meet";
  } catch (const KernelError& e) {
    return e.what();
  }
  return {};
}

}  // namespace mu2forge
