// Test-side reference implementations, written independently of src/.
// They are deliberately naive: direct recursion, de Bruijn comparison,
// no sharing with the library beyond the data types.

#ifndef MU2FORGE_TESTS_ORACLE_HPP
#define MU2FORGE_TESTS_ORACLE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mu2forge/mu_kernel.hpp"
#include "mu2forge/target_kernel.hpp"

namespace oracle {

using namespace mu2forge;

// ---- de Bruijn rendering -------------------------------------------------
// Bound identifiers become their binder depth, free ones keep their name.

inline std::string index_of(const std::vector<std::string>& scope, const std::string& x) {
  for (std::size_t i = scope.size(); i-- > 0;)
    if (scope[i] == x) return "#" + std::to_string(scope.size() - 1 - i);
  return x;
}

inline std::string db(const MuType& t, std::vector<std::string>& tv) {
  switch (t.kind()) {
    case MuType::Kind::Var: return index_of(tv, t.name());
    case MuType::Kind::Arrow: return "(" + db(t.dom(), tv) + " > " + db(t.cod(), tv) + ")";
    case MuType::Kind::Forall: {
      tv.push_back(t.name());
      std::string b = db(t.body(), tv);
      tv.pop_back();
      return "(A " + b + ")";
    }
  }
  return "?";
}

struct MuScopes {
  std::vector<std::string> vars, names, tvars;
};

inline std::string db(const MuTerm& m, MuScopes& s) {
  switch (m.kind()) {
    case MuTerm::Kind::Var: return index_of(s.vars, m.name());
    case MuTerm::Kind::Lam: {
      std::string a = db(m.type(), s.tvars);
      s.vars.push_back(m.name());
      std::string b = db(m.body(), s);
      s.vars.pop_back();
      return "(L " + a + " " + b + ")";
    }
    case MuTerm::Kind::App: return "(" + db(m.fn(), s) + " " + db(m.arg(), s) + ")";
    case MuTerm::Kind::TyLam: {
      s.tvars.push_back(m.name());
      std::string b = db(m.body(), s);
      s.tvars.pop_back();
      return "(T " + b + ")";
    }
    case MuTerm::Kind::TyApp: return "(" + db(m.fn(), s) + " [" + db(m.type(), s.tvars) + "])";
    case MuTerm::Kind::Mu: {
      std::string a = db(m.type(), s.tvars);
      s.names.push_back(m.name());
      std::string b = index_of(s.names, m.target()) + " " + db(m.body(), s);
      s.names.pop_back();
      return "(M " + a + " " + b + ")";
    }
  }
  return "?";
}

inline std::string db(const MuType& t) {
  std::vector<std::string> tv;
  return db(t, tv);
}
inline std::string db(const MuTerm& m) {
  MuScopes s;
  return db(m, s);
}

inline std::string db(const TargetType& t, std::vector<std::string>& tv) {
  switch (t.kind()) {
    case TargetType::Kind::Var: return index_of(tv, t.name());
    case TargetType::Kind::Answer: return "R";
    case TargetType::Kind::Neg: return "(~ " + db(t.body(), tv) + ")";
    case TargetType::Kind::Conj: return "(" + db(t.left(), tv) + " & " + db(t.right(), tv) + ")";
    case TargetType::Kind::Exists: {
      tv.push_back(t.name());
      std::string b = db(t.body(), tv);
      tv.pop_back();
      return "(E " + b + ")";
    }
  }
  return "?";
}

struct TargetScopes {
  std::vector<std::string> vars, tvars;
};

inline std::string db(const TargetTerm& m, TargetScopes& s) {
  using K = TargetTerm::Kind;
  switch (m.kind()) {
    case K::Var: return index_of(s.vars, m.name());
    case K::Star: return "*";
    case K::Lam: {
      std::string a = db(m.type(), s.tvars);
      s.vars.push_back(m.name());
      std::string b = db(m.body(), s);
      s.vars.pop_back();
      return "(L " + a + " " + b + ")";
    }
    case K::App: return "(" + db(m.fn(), s) + " " + db(m.arg(), s) + ")";
    case K::Pair: return "<" + db(m.fst(), s) + ", " + db(m.snd(), s) + ">";
    case K::Pack:
      return "<" + db(m.type(), s.tvars) + " | " + db(m.payload(), s) + " : " + db(m.pack_type(), s.tvars) + ">";
    case K::LetPair: {
      std::string sc = db(m.scrutinee(), s);
      s.vars.push_back(m.name());
      s.vars.push_back(m.name2());
      std::string b = db(m.body(), s);
      s.vars.resize(s.vars.size() - 2);
      return "(LP " + sc + " " + b + ")";
    }
    case K::LetPack: {
      std::string sc = db(m.scrutinee(), s);
      s.tvars.push_back(m.name());
      s.vars.push_back(m.name2());
      std::string b = db(m.body(), s);
      s.vars.pop_back();
      s.tvars.pop_back();
      return "(LE " + sc + " " + b + ")";
    }
  }
  return "?";
}

inline std::string db(const TargetType& t) {
  std::vector<std::string> tv;
  return db(t, tv);
}
inline std::string db(const TargetTerm& m) {
  TargetScopes s;
  return db(m, s);
}

inline bool alpha_eq(const MuTerm& a, const MuTerm& b) { return db(a) == db(b); }
inline bool alpha_eq(const TargetTerm& a, const TargetTerm& b) { return db(a) == db(b); }

// ---- λμ2 typing ------------------------------------------------------------

inline MuType subst(const MuType& t, const std::string& x, const MuType& r) {
  switch (t.kind()) {
    case MuType::Kind::Var: return t.name() == x ? r : t;
    case MuType::Kind::Arrow: return MuType::arrow(subst(t.dom(), x, r), subst(t.cod(), x, r));
    case MuType::Kind::Forall: {
      if (t.name() == x) return t;
      NameSet fv = free_type_vars(r);
      if (!fv.count(t.name())) return MuType::forall(t.name(), subst(t.body(), x, r));
      std::string y = t.name() + "'";
      while (fv.count(y) || free_type_vars(t.body()).count(y)) y += "'";
      return MuType::forall(y, subst(subst(t.body(), t.name(), MuType::var(y)), x, r));
    }
  }
  return t;
}

inline std::optional<MuType> find(const Context& c, const std::string& x) {
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    if (it->first == x) return it->second;
  return std::nullopt;
}

/// Plain syntax-directed typing; nullopt when ill-typed.
inline std::optional<MuType> type_of(Context g, Context d, const MuTerm& m) {
  switch (m.kind()) {
    case MuTerm::Kind::Var: return find(g, m.name());
    case MuTerm::Kind::Lam: {
      g.emplace_back(m.name(), m.type());
      auto b = type_of(g, d, m.body());
      if (!b) return std::nullopt;
      return MuType::arrow(m.type(), *b);
    }
    case MuTerm::Kind::App: {
      auto f = type_of(g, d, m.fn());
      auto a = type_of(g, d, m.arg());
      if (!f || !a || !f->is_arrow() || db(f->dom()) != db(*a)) return std::nullopt;
      return f->cod();
    }
    case MuTerm::Kind::TyLam: {
      for (const auto& [x, t] : g)
        if (free_type_vars(t).count(m.name())) return std::nullopt;
      for (const auto& [x, t] : d)
        if (free_type_vars(t).count(m.name())) return std::nullopt;
      auto b = type_of(g, d, m.body());
      if (!b) return std::nullopt;
      return MuType::forall(m.name(), *b);
    }
    case MuTerm::Kind::TyApp: {
      auto f = type_of(g, d, m.fn());
      if (!f || !f->is_forall()) return std::nullopt;
      return subst(f->body(), f->name(), m.type());
    }
    case MuTerm::Kind::Mu: {
      d.emplace_back(m.name(), m.type());
      auto target = find(d, m.target());
      auto b = type_of(g, d, m.body());
      if (!target || !b || db(*target) != db(*b)) return std::nullopt;
      return m.type();
    }
  }
  return std::nullopt;
}

// ---- the CPS translation, written out directly -----------------------------

inline TargetType cps(const MuType& t) {
  switch (t.kind()) {
    case MuType::Kind::Var: return TargetType::var(t.name());
    case MuType::Kind::Arrow: return TargetType::conj(TargetType::neg(cps(t.dom())), cps(t.cod()));
    case MuType::Kind::Forall: return TargetType::exists(t.name(), cps(t.body()));
  }
  return TargetType::answer();
}

/// Raw image of a typed term; binder names come from a counter so they are
/// fresh for any subject that avoids the '_' prefix.
inline TargetTerm cps(Context g, Context d, const MuTerm& m, int& n) {
  auto fresh = [&](const char* b) { return std::string("_") + b + std::to_string(n++); };
  switch (m.kind()) {
    case MuTerm::Kind::Var: return TargetTerm::var(m.name());
    case MuTerm::Kind::Lam: {
      MuType ft = *type_of(g, d, m);
      std::string z = fresh("z"), k = fresh("k");
      g.emplace_back(m.name(), m.type());
      TargetTerm body = TargetTerm::app(cps(g, d, m.body(), n), TargetTerm::var(k));
      return TargetTerm::lam(z, cps(ft), TargetTerm::let_pair(m.name(), k, TargetTerm::var(z), body));
    }
    case MuTerm::Kind::App: {
      MuType t = *type_of(g, d, m);
      std::string k = fresh("k");
      return TargetTerm::lam(k, cps(t), TargetTerm::app(cps(g, d, m.fn(), n),
                                                        TargetTerm::pair(cps(g, d, m.arg(), n), TargetTerm::var(k))));
    }
    case MuTerm::Kind::TyLam: {
      MuType ft = *type_of(g, d, m);
      std::string z = fresh("z"), k = fresh("k");
      TargetTerm body = TargetTerm::app(cps(g, d, m.body(), n), TargetTerm::var(k));
      return TargetTerm::lam(z, cps(ft), TargetTerm::let_pack(m.name(), k, TargetTerm::var(z), body));
    }
    case MuTerm::Kind::TyApp: {
      MuType t = *type_of(g, d, m);
      MuType ft = *type_of(g, d, m.fn());
      std::string k = fresh("k");
      TargetTerm packed = TargetTerm::pack(cps(m.type()), TargetTerm::var(k), cps(ft));
      return TargetTerm::lam(k, cps(t), TargetTerm::app(cps(g, d, m.fn(), n), packed));
    }
    case MuTerm::Kind::Mu: {
      d.emplace_back(m.name(), m.type());
      return TargetTerm::lam(m.name(), cps(m.type()),
                             TargetTerm::app(cps(g, d, m.body(), n), TargetTerm::var(m.target())));
    }
  }
  throw std::logic_error("unreachable");
}

inline TargetTerm cps(const Context& g, const Context& d, const MuTerm& m) {
  int n = 0;
  return cps(g, d, m, n);
}

}  // namespace oracle

#endif  // MU2FORGE_TESTS_ORACLE_HPP
