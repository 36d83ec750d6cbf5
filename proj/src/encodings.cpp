#include "mu2forge/encodings.hpp"

#include <algorithm>
#include <functional>

namespace mu2forge {

std::string_view polarity_name(Polarity p) {
  switch (p) {
    case Polarity::Absent: return "absent";
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Mixed: return "mixed";
  }
  return "?";
}

namespace {

void occurrences_of(const MuType& t, const std::string& x, bool positive, std::vector<Polarity>& out) {
  switch (t.kind()) {
    case MuType::Kind::Var:
      if (t.name() == x) out.push_back(positive ? Polarity::Positive : Polarity::Negative);
      break;
    case MuType::Kind::Arrow:
      occurrences_of(t.dom(), x, !positive, out);
      occurrences_of(t.cod(), x, positive, out);
      break;
    case MuType::Kind::Forall:
      if (t.name() != x) occurrences_of(t.body(), x, positive, out);
      break;
  }
}

class Fresh {
 public:
  Fresh& avoid(const MuType& t) {
    for (const auto& x : free_type_vars(t)) used_.insert(x);
    return *this;
  }
  Fresh& avoid(const MuTerm& m) {
    for (const auto& x : all_identifiers(m)) used_.insert(x);
    for (const auto& x : free_type_vars(m)) used_.insert(x);
    return *this;
  }
  std::string operator()(std::string_view base) {
    std::string n = fresh_name(base, used_);
    used_.insert(n);
    return n;
  }

 private:
  NameSet used_;
};

MuTerm var(const std::string& n) { return MuTerm::var(n); }
MuTerm app(MuTerm f, MuTerm a) { return MuTerm::app(std::move(f), std::move(a)); }
MuTerm tapp(MuTerm f, MuType t) { return MuTerm::tyapp(std::move(f), std::move(t)); }
MuType arrow(MuType a, MuType b) { return MuType::arrow(std::move(a), std::move(b)); }

}  // namespace

std::vector<Polarity> TypeScheme::occurrences() const {
  std::vector<Polarity> out;
  occurrences_of(body, var, true, out);
  return out;
}

Polarity TypeScheme::polarity() const {
  bool pos = false, neg = false;
  for (Polarity p : occurrences()) (p == Polarity::Positive ? pos : neg) = true;
  if (pos && neg) return Polarity::Mixed;
  if (neg) return Polarity::Negative;
  return pos ? Polarity::Positive : Polarity::Absent;
}

MuType TypeScheme::at(const MuType& t) const { return subst_type(body, var, t); }

MuType mu_type(const TypeScheme& f) {
  MuType x = MuType::var(f.var);
  return MuType::forall(f.var, arrow(arrow(f.body, x), x));
}

MuType l_type(const MuType& sigma) {
  std::string x = Fresh().avoid(sigma)("X");
  MuType xv = MuType::var(x);
  return MuType::forall(x, arrow(arrow(sigma, xv), xv));
}

MuType nat_type() {
  MuType x = MuType::var("X");
  return MuType::forall("X", arrow(x, arrow(arrow(x, x), x)));
}

MuType nat_signature(const MuType& sigma) {
  MuType bot = MuType::bottom();
  return arrow(bot, arrow(MuType::neg(sigma), bot));
}

namespace {

class Action {
 public:
  Action(const TypeScheme& s, MuTerm f, std::optional<MuTerm> back, MuType a, MuType b)
      : s_(s), f_(std::move(f)), back_(std::move(back)), a_(std::move(a)), b_(std::move(b)) {
    fresh_.avoid(s.body).avoid(a_).avoid(b_).avoid(f_);
    if (back_) fresh_.avoid(*back_);
  }

  // A map t[a/X] → t[b/X] when positive, t[b/X] → t[a/X] otherwise.
  MuTerm run(const MuType& t, bool positive) {
    if (!free_type_vars(t).count(s_.var)) {
      std::string y = fresh_("y");
      return MuTerm::lam(y, t, var(y));
    }
    switch (t.kind()) {
      case MuType::Kind::Var:
        if (positive) return f_;
        if (!back_) throw KernelError(Errc::NegativeOccurrence, s_.var + " in " + to_string(s_.body));
        return *back_;
      case MuType::Kind::Arrow: {
        std::string h = fresh_("h"), z = fresh_("z");
        MuType src = positive ? inst(t, a_) : inst(t, b_);
        MuType zt = positive ? inst(t.dom(), b_) : inst(t.dom(), a_);
        MuTerm dom_map = run(t.dom(), !positive);
        MuTerm cod_map = run(t.cod(), positive);
        return MuTerm::lam(h, src, MuTerm::lam(z, zt, app(cod_map, app(var(h), app(dom_map, var(z))))));
      }
      case MuType::Kind::Forall: {
        std::string y = fresh_(t.name());
        MuType body = subst_type(t.body(), t.name(), MuType::var(y));
        std::string h = fresh_("h");
        MuType src = positive ? inst(t, a_) : inst(t, b_);
        return MuTerm::lam(h, src, MuTerm::tylam(y, app(run(body, positive), tapp(var(h), MuType::var(y)))));
      }
    }
    return f_;
  }

 private:
  MuType inst(const MuType& t, const MuType& x) const { return subst_type(t, s_.var, x); }

  const TypeScheme& s_;
  MuTerm f_;
  std::optional<MuTerm> back_;
  MuType a_, b_;
  Fresh fresh_;
};

}  // namespace

MuTerm functorial_action(const TypeScheme& s, const MuTerm& f, const MuType& a, const MuType& b) {
  return Action(s, f, std::nullopt, a, b).run(s.body, true);
}

MuTerm functorial_action(const TypeScheme& s, const MuTerm& f, const MuTerm& back, const MuType& a,
                         const MuType& b) {
  return Action(s, f, back, a, b).run(s.body, true);
}

MuTerm church(unsigned n) {
  MuType x = MuType::var("X");
  MuTerm body = var("x");
  for (unsigned i = 0; i < n; ++i) body = app(var("f"), body);
  return MuTerm::tylam("X", MuTerm::lam("x", x, MuTerm::lam("f", arrow(x, x), body)));
}

namespace {

MuTerm combinator_c(const MuType& s) {
  Fresh fr;
  fr.avoid(s);
  std::string m = fr("m"), a = fr("a"), x = fr("x");
  return MuTerm::lam(m, MuType::neg(MuType::neg(s)),
                     bold_mu(a, s, app(var(m), MuTerm::lam(x, s, named(a, var(x))))));
}

MuTerm combinator_peirce(const MuType& s1, const MuType& s2) {
  Fresh fr;
  fr.avoid(s1).avoid(s2);
  std::string m = fr("m"), a = fr("a"), x = fr("x"), b = fr("b");
  MuTerm inner = MuTerm::lam(x, s1, MuTerm::mu(b, s2, a, var(x)));
  return MuTerm::lam(m, arrow(arrow(s1, s2), s1), MuTerm::mu(a, s1, a, app(var(m), inner)));
}

MuTerm combinator_abort(const MuType& s) {
  std::string x = Fresh().avoid(s)("x");
  return MuTerm::lam(x, MuType::bottom(), tapp(var(x), s));
}

MuTerm l_eta(const MuType& s) {
  Fresh fr;
  fr.avoid(s);
  std::string x = fr("x"), X = fr("X"), k = fr("k");
  MuType xv = MuType::var(X);
  return MuTerm::lam(x, s, MuTerm::tylam(X, MuTerm::lam(k, arrow(s, xv), app(var(k), var(x)))));
}

MuTerm l_mu(const MuType& s) {
  Fresh fr;
  fr.avoid(s);
  std::string z = fr("z"), X = fr("X"), k = fr("k"), y = fr("y");
  MuType xv = MuType::var(X), ls = l_type(s);
  MuTerm inner = MuTerm::lam(y, ls, app(tapp(var(y), xv), var(k)));
  return MuTerm::lam(z, l_type(ls), MuTerm::tylam(X, MuTerm::lam(k, arrow(s, xv), app(tapp(var(z), xv), inner))));
}

MuTerm l_map(const MuType& s1, const MuType& s2, const MuTerm& f) {
  Fresh fr;
  fr.avoid(s1).avoid(s2).avoid(f);
  std::string y = fr("y"), X = fr("X"), h = fr("h"), x = fr("x");
  MuType xv = MuType::var(X);
  MuTerm hf = MuTerm::lam(x, s1, app(var(h), app(f, var(x))));
  return MuTerm::lam(y, l_type(s1), MuTerm::tylam(X, MuTerm::lam(h, arrow(s2, xv), app(tapp(var(y), xv), hf))));
}

MuTerm l_alpha(const MuType& s) {
  Fresh fr;
  fr.avoid(s);
  std::string y = fr("y"), x = fr("x");
  return MuTerm::lam(y, l_type(s), app(tapp(var(y), s), MuTerm::lam(x, s, var(x))));
}

MuTerm sharp(const MuType& s1, const MuType& s2, const MuTerm& g) {
  Fresh fr;
  fr.avoid(s1).avoid(s2).avoid(g);
  std::string m = fr("m"), b = fr("b"), x = fr("x");
  return MuTerm::lam(m, MuType::neg(MuType::neg(s1)),
                     bold_mu(b, s2, app(var(m), MuTerm::lam(x, s1, named(b, app(g, var(x)))))));
}

MuTerm flat(const MuType& s1, const MuTerm& f) {
  Fresh fr;
  fr.avoid(s1).avoid(f);
  std::string x = fr("x"), k = fr("k");
  return MuTerm::lam(x, s1, app(f, MuTerm::lam(k, MuType::neg(s1), app(var(k), var(x)))));
}

MuTerm fold(const TypeScheme& F, const MuType& s) {
  Fresh fr;
  fr.avoid(F.body).avoid(s);
  std::string a = fr("a"), x = fr("x");
  return MuTerm::lam(a, arrow(F.at(s), s), MuTerm::lam(x, mu_type(F), app(tapp(var(x), s), var(a))));
}

MuTerm in(const TypeScheme& F) {
  Fresh fr;
  fr.avoid(F.body);
  std::string y = fr("y"), k = fr("k");
  MuType mu = mu_type(F), X = MuType::var(F.var);
  MuTerm fold_k = app(fold(F, X), var(k));
  MuTerm body = app(var(k), app(functorial_action(F, fold_k, mu, X), var(y)));
  return MuTerm::lam(y, F.at(mu), MuTerm::tylam(F.var, MuTerm::lam(k, arrow(F.body, X), body)));
}

MuTerm nat_o() { return church(0); }

MuTerm nat_s() {
  MuType x = MuType::var("X");
  MuTerm body = app(var("f"), app(app(tapp(var("n"), x), var("x")), var("f")));
  return MuTerm::lam("n", nat_type(), MuTerm::tylam("X", MuTerm::lam("x", x, MuTerm::lam("f", arrow(x, x), body))));
}

MuTerm phi(const MuType& s, const MuTerm& a, const MuTerm& f) {
  Fresh fr;
  fr.avoid(s).avoid(a).avoid(f);
  std::string m = fr("m"), al = fr("a"), y = fr("y");
  MuTerm body = app(app(var(m), named(al, a)), MuTerm::lam(y, s, named(al, app(f, var(y)))));
  return MuTerm::lam(m, nat_signature(s), bold_mu(al, s, body));
}

MuTerm g_o(const MuType& s, const MuTerm& g) {
  Fresh fr;
  fr.avoid(s).avoid(g);
  std::string x = fr("x"), k = fr("k");
  return app(g, MuTerm::lam(x, MuType::bottom(), MuTerm::lam(k, MuType::neg(s), var(x))));
}

MuTerm g_s(const MuType& s, const MuTerm& g) {
  Fresh fr;
  fr.avoid(s).avoid(g);
  std::string y = fr("y"), x = fr("x"), k = fr("k");
  return MuTerm::lam(y, s, app(g, MuTerm::lam(x, MuType::bottom(), MuTerm::lam(k, MuType::neg(s), app(var(k), var(y))))));
}

MuTerm fold_n(const MuType& a, const MuTerm& g) {
  Fresh fr;
  fr.avoid(a).avoid(g);
  std::string n = fr("n");
  return MuTerm::lam(n, nat_type(), app(app(tapp(var(n), a), g_o(a, g)), g_s(a, g)));
}

MuTerm exotic_numeral() {
  MuType n = nat_type();
  MuTerm inner = MuTerm::mu("b", n, "a", nat_o());
  return MuTerm::mu("a", n, "a", app(nat_s(), inner));
}

TypeScheme scheme(const MuType& body) { return {"X", body}; }

}  // namespace

const std::vector<CombinatorArity>& combinator_table() {
  static const std::vector<CombinatorArity> table = {
      {"C", 1, 0, "C[s] : ((s -> bot) -> bot) -> s"},
      {"Peirce", 2, 0, "Peirce[s, t] : ((s -> t) -> s) -> s"},
      {"Abort", 1, 0, "Abort[s] : bot -> s"},
      {"L-eta", 1, 0, "L-eta[s] : s -> L s"},
      {"L-mu", 1, 0, "L-mu[s] : L (L s) -> L s"},
      {"L-map", 2, 1, "L-map[s, t](f) : L s -> L t for f : s -> t"},
      {"L-alpha", 1, 0, "L-alpha[s] : L s -> s"},
      {"sharp", 2, 1, "sharp[s, t](g) : not not s -> t for g : s -> t"},
      {"flat", 1, 1, "flat[s](f) : s -> t for f : not not s -> t"},
      {"in", 1, 0, "in[F] : F[mu F] -> mu F, F given with distinguished variable X"},
      {"fold", 2, 0, "fold[F, s] : (F[s] -> s) -> mu F -> s"},
      {"in-sharp", 1, 0, "in-sharp[F] : not not F[mu F] -> mu F"},
      {"O", 0, 0, "O : N"},
      {"S", 0, 0, "S : N -> N"},
      {"phi", 1, 2, "phi[s](a, f) : (bot -> (s -> bot) -> bot) -> s"},
      {"g_o", 1, 1, "g_o[s](g) : s"},
      {"g_s", 1, 1, "g_s[s](g) : s -> s"},
      {"fold_N", 1, 1, "fold_N[s](g) : N -> s"},
      {"exotic-numeral", 0, 0, "exotic-numeral : N"},
  };
  return table;
}

MuTerm mk_combinator(std::string_view name, const std::vector<MuType>& ts, const std::vector<MuTerm>& ms) {
  const auto& table = combinator_table();
  auto it = std::find_if(table.begin(), table.end(), [&](const CombinatorArity& c) { return c.name == name; });
  if (it == table.end()) throw KernelError(Errc::UnknownCombinator, std::string(name));
  if (ts.size() != it->types || ms.size() != it->terms)
    throw KernelError(Errc::ArityMismatch, std::string(name) + " takes " + std::to_string(it->types) +
                                               " type and " + std::to_string(it->terms) + " term parameters");
  if (name == "C") return combinator_c(ts[0]);
  if (name == "Peirce") return combinator_peirce(ts[0], ts[1]);
  if (name == "Abort") return combinator_abort(ts[0]);
  if (name == "L-eta") return l_eta(ts[0]);
  if (name == "L-mu") return l_mu(ts[0]);
  if (name == "L-map") return l_map(ts[0], ts[1], ms[0]);
  if (name == "L-alpha") return l_alpha(ts[0]);
  if (name == "sharp") return sharp(ts[0], ts[1], ms[0]);
  if (name == "flat") return flat(ts[0], ms[0]);
  if (name == "in") return in(scheme(ts[0]));
  if (name == "fold") return fold(scheme(ts[0]), ts[1]);
  if (name == "in-sharp") {
    TypeScheme F = scheme(ts[0]);
    return sharp(F.at(mu_type(F)), mu_type(F), in(F));
  }
  if (name == "O") return nat_o();
  if (name == "S") return nat_s();
  if (name == "phi") return phi(ts[0], ms[0], ms[1]);
  if (name == "g_o") return g_o(ts[0], ms[0]);
  if (name == "g_s") return g_s(ts[0], ms[0]);
  if (name == "fold_N") return fold_n(ts[0], ms[0]);
  return exotic_numeral();
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    MuType s = MuType::var("s"), t = MuType::var("t"), x = MuType::var("X");
    MuType bot = MuType::bottom(), n = nat_type();
    std::vector<CatalogEntry> out;
    auto add = [&](std::string name, MuTerm m, Context gamma, std::string topic, std::string desc,
                   Context delta = {}) {
      MuType ty = typecheck_mu(gamma, delta, m);
      out.push_back({std::move(name), std::move(m), ty, std::move(gamma), std::move(delta), std::move(topic),
                     std::move(desc)});
    };
    add("id", MuTerm::lam("x", s, var("x")), {}, "focality", "the identity map, focal");
    add("C", mk_combinator("C", {s}), {}, "double negation", "double-negation elimination");
    add("Peirce", mk_combinator("Peirce", {s, t}), {}, "focality", "Peirce's law, repeatability witness");
    add("Abort", mk_combinator("Abort", {s}), {}, "falsity", "ex falso map from the polymorphic falsity");
    add("inst-app", MuTerm::lam("x", arrow(s, t), app(var("x"), var("n"))), {{"n", s}}, "additional axioms",
        "instantiation map at a term argument");
    add("inst-type", MuTerm::lam("x", MuType::forall("X", arrow(x, s)), tapp(var("x"), t)), {},
        "additional axioms", "instantiation map at a type argument");
    add("throw", MuTerm::lam("x", s, named("a", var("x"))), {}, "additional axioms",
        "map into falsity throwing to a name", {{"a", s}});
    add("sharp", mk_combinator("sharp", {s, t}, {var("g")}), {{"g", arrow(s, t)}}, "focal decomposition",
        "focal extension of g along the double-negation unit");
    add("flat", mk_combinator("flat", {s}, {var("f")}), {{"f", arrow(MuType::neg(MuType::neg(s)), t)}},
        "focal decomposition", "restriction of f along the double-negation unit");
    TypeScheme F{"X", arrow(s, x)};
    add("fold", mk_combinator("fold", {F.body, t}), {}, "initial algebra", "iterator of mu X. s -> X");
    add("in", mk_combinator("in", {F.body}), {}, "initial algebra", "weakly initial algebra of mu X. s -> X");
    add("in-sharp", mk_combinator("in-sharp", {F.body}), {}, "initial algebra",
        "focally initial algebra of not not (s -> -)");
    add("in-sharp-const", [&] {
      MuTerm body = app(var("m"), MuTerm::lam("x", s, named("a", app(var("k"), var("x")))));
      return MuTerm::lam("m", MuType::neg(MuType::neg(s)),
                         MuTerm::tylam("X", MuTerm::lam("k", arrow(s, x), bold_mu("a", x, body))));
    }(), {}, "initial algebra", "in-sharp for a constant functor");
    add("apply-bot", MuTerm::lam("n", l_type(s), tapp(var("n"), bot)), {}, "initial algebra",
        "instance at falsity, inverse of the constant in-sharp");
    add("O", mk_combinator("O", {}), {}, "Church numerals", "zero");
    add("S", mk_combinator("S", {}), {}, "Church numerals", "successor");
    add("two", church(2), {}, "Church numerals", "the numeral 2");
    add("exotic", mk_combinator("exotic-numeral", {}), {}, "Church numerals",
        "closed numeral that is no Church numeral");
    add("phi", mk_combinator("phi", {s}, {var("a0"), var("f")}), {{"a0", s}, {"f", arrow(s, s)}},
        "Church numerals", "algebra built from a point and an endomap");
    add("in-N", mk_combinator("phi", {n}, {nat_o(), nat_s()}), {}, "Church numerals",
        "focally initial algebra structure on N");
    add("fold-N", mk_combinator("fold_N", {s}, {var("g")}), {{"g", arrow(nat_signature(s), s)}},
        "Church numerals", "iterator into a focal algebra");
    add("L-eta", mk_combinator("L-eta", {s}), {}, "L monad", "unit");
    add("L-mu", mk_combinator("L-mu", {s}), {}, "L monad", "multiplication");
    add("L-map", mk_combinator("L-map", {s, t}, {var("f")}), {{"f", arrow(s, t)}}, "L monad",
        "functorial action");
    add("L-alpha", mk_combinator("L-alpha", {s}), {}, "L monad", "canonical algebra");
    return out;
  }();
  return entries;
}

}  // namespace mu2forge
