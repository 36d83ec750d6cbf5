#include "mu2forge/syntax.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <sstream>

#include "mu2forge/encodings.hpp"

namespace mu2forge {

namespace {

// ---------------------------------------------------------------------------
// Lexing

struct Token {
  enum class Kind { Ident, Sym, End } kind;
  std::string text;
  std::size_t col = 0;
  bool spaced = false;  // whitespace before the token
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '%'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '\''; }

[[noreturn]] void syntax_error(std::size_t col, const std::string& msg) {
  throw KernelError(Errc::SyntaxError, "column " + std::to_string(col + 1) + ": " + msg);
}

std::vector<Token> lex(std::string_view s) {
  static const char* const kSyms[] = {"->", "/\\", "\\", ".", ":", "(", ")", "[", "]", "<", ">", ",", "|", "=", "*"};
  std::vector<Token> out;
  std::size_t i = 0;
  bool spaced = true;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      spaced = true;
      ++i;
      continue;
    }
    if (static_cast<unsigned char>(c) >= 0x80) syntax_error(i, "non-ASCII input");
    if (ident_start(c) || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Token::Kind::Ident, std::string(s.substr(i, j - i)), i, spaced});
      i = j;
      spaced = false;
      continue;
    }
    bool matched = false;
    for (const char* sym : kSyms) {
      std::string_view v(sym);
      if (s.substr(i, v.size()) == v) {
        out.push_back({Token::Kind::Sym, std::string(v), i, spaced});
        i += v.size();
        matched = true;
        break;
      }
    }
    if (!matched) syntax_error(i, std::string("unexpected character '") + c + "'");
    spaced = false;
  }
  out.push_back({Token::Kind::End, "", s.size(), true});
  return out;
}

const NameSet kKeywords{"forall", "exists", "not", "bot", "mu", "bmu", "let", "in", "as", "R"};

class Cursor {
 public:
  explicit Cursor(std::string_view text) : toks_(lex(text)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(std::string_view sym) const { return peek().kind != Token::Kind::End && peek().text == sym; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  std::size_t save() const { return pos_; }
  void restore(std::size_t p) { pos_ = p; }

  bool accept(std::string_view sym) {
    if (!at(sym)) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view sym) {
    if (!accept(sym)) fail("expected '" + std::string(sym) + "'");
  }
  std::string ident(const char* what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident || kKeywords.count(t.text)) fail(std::string("expected ") + what);
    return next().text;
  }
  bool at_ident() const { return peek().kind == Token::Kind::Ident && !kKeywords.count(peek().text); }
  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    syntax_error(t.col, msg + (t.kind == Token::Kind::End ? " at end of input" : ", found '" + t.text + "'"));
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// λμ2

MuType mu_type(Cursor& c);

MuType mu_type_unary(Cursor& c) {
  if (c.accept("not")) return MuType::neg(mu_type_unary(c));
  if (c.accept("bot")) return MuType::bottom();
  if (c.accept("(")) {
    MuType t = mu_type(c);
    c.expect(")");
    return t;
  }
  return MuType::var(c.ident("a type"));
}

MuType mu_type(Cursor& c) {
  if (c.accept("forall")) {
    std::string x = c.ident("a type variable");
    c.expect(".");
    return MuType::forall(x, mu_type(c));
  }
  MuType lhs = mu_type_unary(c);
  if (c.accept("->")) return MuType::arrow(lhs, mu_type(c));
  return lhs;
}

struct MSyn;
using MPtr = std::shared_ptr<const MSyn>;

struct MSyn {
  enum class Kind { Var, Lam, TyLam, App, TyApp, Mu, Bold, Named, Comb } kind;
  std::string x, y;
  std::optional<MuType> type;
  std::vector<MuType> types;
  std::vector<MPtr> kids;
  std::size_t col = 0;
};

MPtr mk(MSyn s) { return std::make_shared<const MSyn>(std::move(s)); }

class MuParser {
 public:
  explicit MuParser(Cursor& c) : c_(c) {}

  MPtr term() {
    std::size_t col = c_.peek().col;
    if (c_.accept("\\")) {
      std::string x = c_.ident("a variable");
      std::optional<MuType> t = annotation();
      c_.expect(".");
      return mk({MSyn::Kind::Lam, x, "", t, {}, {term()}, col});
    }
    if (c_.accept("/\\")) {
      std::string x = c_.ident("a type variable");
      c_.expect(".");
      return mk({MSyn::Kind::TyLam, x, "", std::nullopt, {}, {term()}, col});
    }
    if (c_.accept("mu")) {
      std::string a = c_.ident("a name");
      std::optional<MuType> t = annotation();
      c_.expect(".");
      c_.expect("[");
      std::string b = c_.ident("a name");
      c_.expect("]");
      return mk({MSyn::Kind::Mu, a, b, t, {}, {term()}, col});
    }
    if (c_.accept("bmu")) {
      std::string a = c_.ident("a name");
      std::optional<MuType> t = annotation();
      c_.expect(".");
      return mk({MSyn::Kind::Bold, a, "", t, {}, {term()}, col});
    }
    if (c_.accept("[")) {
      std::string b = c_.ident("a name");
      c_.expect("]");
      return mk({MSyn::Kind::Named, b, "", std::nullopt, {}, {term()}, col});
    }
    return application();
  }

 private:
  std::optional<MuType> annotation() {
    if (!c_.accept(":")) return std::nullopt;
    return mu_type(c_);
  }

  bool at_atom() const { return c_.at_ident() || c_.at("("); }

  MPtr application() {
    MPtr head = atom();
    for (;;) {
      std::size_t col = c_.peek().col;
      if (c_.accept("[")) {
        MuType t = mu_type(c_);
        c_.expect("]");
        head = mk({MSyn::Kind::TyApp, "", "", t, {}, {head}, col});
      } else if (at_atom()) {
        head = mk({MSyn::Kind::App, "", "", std::nullopt, {}, {head, atom()}, col});
      } else {
        return head;
      }
    }
  }

  static std::optional<std::string> combinator(const std::string& name) {
    for (const auto& e : combinator_table()) {
      if (e.name == name) return e.name;
      std::string alias = e.name;
      for (char& ch : alias)
        if (ch == '-') ch = '_';
      if (alias == name) return e.name;
    }
    return std::nullopt;
  }

  MPtr atom() {
    std::size_t col = c_.peek().col;
    if (c_.accept("(")) {
      MPtr t = term();
      c_.expect(")");
      return t;
    }
    std::string x = c_.ident("a term");
    auto comb = combinator(x);
    if (comb && c_.at("[") && !c_.peek().spaced) {
      MSyn s{MSyn::Kind::Comb, *comb, "", std::nullopt, {}, {}, col};
      c_.expect("[");
      if (!c_.at("]")) {
        do s.types.push_back(mu_type(c_));
        while (c_.accept(","));
      }
      c_.expect("]");
      if (c_.at("(") && !c_.peek().spaced) {
        c_.expect("(");
        do s.kids.push_back(term());
        while (c_.accept(","));
        c_.expect(")");
      }
      return mk(std::move(s));
    }
    return mk({MSyn::Kind::Var, x, "", std::nullopt, {}, {}, col});
  }

  Cursor& c_;
};

std::optional<MuType> lookup(const Context& ctx, const std::string& x) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
    if (it->first == x) return it->second;
  return std::nullopt;
}

// Fills in omitted annotations from expected types.
class MuElab {
 public:
  MuElab(Context gamma, Context delta, bool open = false)
      : gamma_(std::move(gamma)), delta_(std::move(delta)), open_(open) {}

  /// Variables added by open elaboration, in order of first use.
  const Context& inferred() const { return inferred_; }

  MuTerm elab(const MSyn& s, const std::optional<MuType>& expected) {
    switch (s.kind) {
      case MSyn::Kind::Var:
        if (open_ && expected && !lookup(gamma_, s.x)) {
          // Outermost, so later binders still shadow it.
          gamma_.insert(gamma_.begin(), {s.x, *expected});
          inferred_.emplace_back(s.x, *expected);
        }
        return MuTerm::var(s.x);
      case MSyn::Kind::Lam: {
        std::optional<MuType> t = s.type;
        if (!t && expected && expected->is_arrow()) t = expected->dom();
        if (!t) syntax_error(s.col, "cannot infer the type of " + s.x + "; add an annotation");
        std::optional<MuType> cod;
        if (expected && expected->is_arrow() && expected->dom() == *t) cod = expected->cod();
        gamma_.emplace_back(s.x, *t);
        MuTerm body = elab(*s.kids[0], cod);
        gamma_.pop_back();
        return MuTerm::lam(s.x, *t, body);
      }
      case MSyn::Kind::TyLam: {
        std::optional<MuType> body_t;
        if (expected && expected->is_forall())
          body_t = subst_type(expected->body(), expected->name(), MuType::var(s.x));
        return MuTerm::tylam(s.x, elab(*s.kids[0], body_t));
      }
      case MSyn::Kind::App: {
        MuTerm f = elab(*s.kids[0], std::nullopt);
        std::optional<MuType> dom;
        if (needs_type(*s.kids[1])) {
          std::optional<MuType> ft = type_of(f);
          if (ft && ft->is_arrow()) dom = ft->dom();
        }
        return MuTerm::app(f, elab(*s.kids[1], dom));
      }
      case MSyn::Kind::TyApp: return MuTerm::tyapp(elab(*s.kids[0], std::nullopt), *s.type);
      case MSyn::Kind::Mu:
      case MSyn::Kind::Bold: {
        std::optional<MuType> t = s.type ? s.type : expected;
        if (!t) syntax_error(s.col, "cannot infer the type of name " + s.x + "; add an annotation");
        delta_.emplace_back(s.x, *t);
        std::optional<MuType> body_t =
            s.kind == MSyn::Kind::Bold ? std::optional<MuType>(MuType::bottom()) : lookup(delta_, s.y);
        MuTerm body = elab(*s.kids[0], body_t);
        delta_.pop_back();
        if (s.kind == MSyn::Kind::Bold) return bold_mu(s.x, *t, body);
        return MuTerm::mu(s.x, *t, s.y, body);
      }
      case MSyn::Kind::Named: return named(s.x, elab(*s.kids[0], lookup(delta_, s.x)));
      case MSyn::Kind::Comb: {
        std::vector<MuTerm> ms;
        for (const auto& k : s.kids) ms.push_back(elab(*k, std::nullopt));
        try {
          return mk_combinator(s.x, s.types, ms);
        } catch (const KernelError& e) {
          syntax_error(s.col, e.what());
        }
      }
    }
    syntax_error(s.col, "unknown construct");
  }

 private:
  bool needs_type(const MSyn& s) const {
    switch (s.kind) {
      case MSyn::Kind::Var: return open_ && !lookup(gamma_, s.x);
      case MSyn::Kind::Lam:
      case MSyn::Kind::Mu:
      case MSyn::Kind::Bold: return !s.type || needs_type(*s.kids[0]);
      case MSyn::Kind::TyLam:
      case MSyn::Kind::Named: return needs_type(*s.kids[0]);
      default: return false;
    }
  }

  std::optional<MuType> type_of(const MuTerm& m) const {
    try {
      return typecheck_mu(gamma_, delta_, m);
    } catch (const KernelError&) {
      return std::nullopt;
    }
  }

  Context gamma_, delta_;
  bool open_;
  Context inferred_;
};

// ---------------------------------------------------------------------------
// Target

TargetType target_type(Cursor& c);

TargetType target_unary(Cursor& c) {
  if (c.accept("not")) return TargetType::neg(target_unary(c));
  if (c.accept("R")) return TargetType::answer();
  if (c.accept("(")) {
    TargetType t = target_type(c);
    c.expect(")");
    return t;
  }
  return TargetType::var(c.ident("a type"));
}

TargetType target_type(Cursor& c) {
  if (c.accept("exists")) {
    std::string x = c.ident("a type variable");
    c.expect(".");
    return TargetType::exists(x, target_type(c));
  }
  TargetType lhs = target_unary(c);
  if (c.accept("/\\")) return TargetType::conj(lhs, target_type(c));
  return lhs;
}

struct TSyn;
using TPtr = std::shared_ptr<const TSyn>;

struct TSyn {
  enum class Kind { Var, Lam, App, Pair, Pack, Let, Star } kind;
  std::string x, y;
  std::optional<TargetType> type, as;
  std::vector<TPtr> kids;
  std::size_t col = 0;
};

TPtr mk(TSyn s) { return std::make_shared<const TSyn>(std::move(s)); }

class TargetParser {
 public:
  explicit TargetParser(Cursor& c) : c_(c) {}

  TPtr term() {
    std::size_t col = c_.peek().col;
    if (c_.accept("\\")) {
      std::string x = c_.ident("a variable");
      std::optional<TargetType> t;
      if (c_.accept(":")) t = target_type(c_);
      c_.expect(".");
      return mk({TSyn::Kind::Lam, x, "", t, std::nullopt, {term()}, col});
    }
    if (c_.accept("let")) {
      c_.expect("<");
      std::string a = c_.ident("a binder");
      c_.expect(",");
      std::string b = c_.ident("a binder");
      c_.expect(">");
      c_.expect("=");
      TPtr scrutinee = term();
      c_.expect("in");
      return mk({TSyn::Kind::Let, a, b, std::nullopt, std::nullopt, {scrutinee, term()}, col});
    }
    TPtr head = atom();
    for (;;) {
      std::size_t acol = c_.peek().col;
      if (!(c_.at_ident() || c_.at("(") || c_.at("<") || c_.at("*"))) return head;
      head = mk({TSyn::Kind::App, "", "", std::nullopt, std::nullopt, {head, atom()}, acol});
    }
  }

 private:
  TPtr atom() {
    std::size_t col = c_.peek().col;
    if (c_.accept("*")) return mk({TSyn::Kind::Star, "", "", std::nullopt, std::nullopt, {}, col});
    if (c_.accept("(")) {
      TPtr t = term();
      c_.expect(")");
      return t;
    }
    if (c_.accept("<")) {
      // <t | M> or <M, N>: try the type reading first.
      std::size_t mark = c_.save();
      try {
        TargetType w = target_type(c_);
        if (c_.accept("|")) {
          TPtr payload = term();
          std::optional<TargetType> as;
          if (c_.accept("as")) as = target_type(c_);
          c_.expect(">");
          return mk({TSyn::Kind::Pack, "", "", w, as, {payload}, col});
        }
      } catch (const KernelError&) {
      }
      c_.restore(mark);
      TPtr fst = term();
      c_.expect(",");
      TPtr snd = term();
      c_.expect(">");
      return mk({TSyn::Kind::Pair, "", "", std::nullopt, std::nullopt, {fst, snd}, col});
    }
    return mk({TSyn::Kind::Var, c_.ident("a term"), "", std::nullopt, std::nullopt, {}, col});
  }

  Cursor& c_;
};

class TargetElab {
 public:
  explicit TargetElab(TargetContext ctx) : ctx_(std::move(ctx)) {}

  TargetTerm elab(const TSyn& s, const std::optional<TargetType>& expected) {
    switch (s.kind) {
      case TSyn::Kind::Var: return TargetTerm::var(s.x);
      case TSyn::Kind::Star: return TargetTerm::star();
      case TSyn::Kind::Lam: {
        std::optional<TargetType> t = s.type;
        if (!t && expected && expected->is(TargetType::Kind::Neg)) t = expected->body();
        if (!t) syntax_error(s.col, "cannot infer the type of " + s.x + "; add an annotation");
        ctx_.emplace_back(s.x, *t);
        TargetTerm body = elab(*s.kids[0], TargetType::answer());
        ctx_.pop_back();
        return TargetTerm::lam(s.x, *t, body);
      }
      case TSyn::Kind::App: {
        TargetTerm f = elab(*s.kids[0], std::nullopt);
        std::optional<TargetType> dom;
        if (needs_type(*s.kids[1])) {
          std::optional<TargetType> ft = type_of(f);
          if (ft && ft->is(TargetType::Kind::Neg)) dom = ft->body();
        }
        return TargetTerm::app(f, elab(*s.kids[1], dom));
      }
      case TSyn::Kind::Pair: {
        std::optional<TargetType> l, r;
        if (expected && expected->is(TargetType::Kind::Conj)) {
          l = expected->left();
          r = expected->right();
        }
        TargetTerm a = elab(*s.kids[0], l);
        return TargetTerm::pair(a, elab(*s.kids[1], r));
      }
      case TSyn::Kind::Pack: {
        std::optional<TargetType> as = s.as ? s.as : expected;
        if (!as || !as->is(TargetType::Kind::Exists))
          syntax_error(s.col, "cannot infer the existential type of a pack; add 'as'");
        TargetType payload_t = subst_type(as->body(), as->name(), *s.type);
        return TargetTerm::pack(*s.type, elab(*s.kids[0], payload_t), *as);
      }
      case TSyn::Kind::Let: {
        TargetTerm scrutinee = elab(*s.kids[0], std::nullopt);
        std::optional<TargetType> st = type_of(scrutinee);
        bool pack;
        std::size_t pushed = 0;
        if (st && st->is(TargetType::Kind::Conj)) {
          pack = false;
          ctx_.emplace_back(s.x, st->left());
          ctx_.emplace_back(s.y, st->right());
          pushed = 2;
        } else if (st && st->is(TargetType::Kind::Exists)) {
          pack = true;
          ctx_.emplace_back(s.y, subst_type(st->body(), st->name(), TargetType::var(s.x)));
          pushed = 1;
        } else {
          pack = std::isupper(static_cast<unsigned char>(s.x[0])) != 0;
        }
        TargetTerm body = elab(*s.kids[1], expected);
        for (; pushed > 0; --pushed) ctx_.pop_back();
        return pack ? TargetTerm::let_pack(s.x, s.y, scrutinee, body)
                    : TargetTerm::let_pair(s.x, s.y, scrutinee, body);
      }
    }
    syntax_error(s.col, "unknown construct");
  }

 private:
  static bool needs_type(const TSyn& s) {
    switch (s.kind) {
      case TSyn::Kind::Lam: return !s.type;
      case TSyn::Kind::Pack: return !s.as;
      case TSyn::Kind::Pair: return needs_type(*s.kids[0]) || needs_type(*s.kids[1]);
      case TSyn::Kind::Let: return needs_type(*s.kids[1]);
      default: return false;
    }
  }

  std::optional<TargetType> type_of(const TargetTerm& m) const {
    try {
      return typecheck_target(ctx_, m, Mode::Parametric);
    } catch (const KernelError&) {
      return std::nullopt;
    }
  }

  TargetContext ctx_;
};

// ---------------------------------------------------------------------------
// S-expressions

struct Sexp {
  std::string atom;
  std::vector<Sexp> list;
  bool is_list = false;
  std::size_t col = 0;
};

class SexpReader {
 public:
  explicit SexpReader(std::string_view s) : s_(s) {}

  Sexp read_all() {
    Sexp e = read();
    skip();
    if (i_ < s_.size()) syntax_error(i_, "trailing input after s-expression");
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  Sexp read() {
    skip();
    if (i_ >= s_.size()) syntax_error(i_, "unexpected end of s-expression");
    Sexp e;
    e.col = i_;
    if (s_[i_] == '(') {
      ++i_;
      e.is_list = true;
      for (;;) {
        skip();
        if (i_ >= s_.size()) syntax_error(i_, "unclosed '('");
        if (s_[i_] == ')') {
          ++i_;
          return e;
        }
        e.list.push_back(read());
      }
    }
    if (s_[i_] == ')') syntax_error(i_, "unexpected ')'");
    std::size_t j = i_;
    while (j < s_.size() && !std::isspace(static_cast<unsigned char>(s_[j])) && s_[j] != '(' && s_[j] != ')') ++j;
    e.atom = std::string(s_.substr(i_, j - i_));
    i_ = j;
    return e;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

const std::string& tag(const Sexp& e, std::size_t arity) {
  if (!e.is_list || e.list.empty() || e.list[0].is_list) syntax_error(e.col, "expected a tagged list");
  if (e.list.size() != arity + 1)
    syntax_error(e.col, "'" + e.list[0].atom + "' takes " + std::to_string(arity) + " arguments");
  return e.list[0].atom;
}

const std::string& atom_of(const Sexp& e) {
  if (e.is_list) syntax_error(e.col, "expected an identifier");
  return e.atom;
}

std::size_t arity_of(const Sexp& e) { return e.is_list && !e.list.empty() ? e.list.size() - 1 : 0; }

MuType mu_type_of(const Sexp& e) {
  const std::string& t = tag(e, arity_of(e));
  const auto& a = e.list;
  if (t == "var" && a.size() == 2) return MuType::var(atom_of(a[1]));
  if (t == "arrow" && a.size() == 3) return MuType::arrow(mu_type_of(a[1]), mu_type_of(a[2]));
  if (t == "forall" && a.size() == 3) return MuType::forall(atom_of(a[1]), mu_type_of(a[2]));
  syntax_error(e.col, "bad λμ2 type node '" + t + "'");
}

MuTerm mu_term_of(const Sexp& e) {
  const std::string& t = tag(e, arity_of(e));
  const auto& a = e.list;
  if (t == "var" && a.size() == 2) return MuTerm::var(atom_of(a[1]));
  if (t == "lam" && a.size() == 4) return MuTerm::lam(atom_of(a[1]), mu_type_of(a[2]), mu_term_of(a[3]));
  if (t == "app" && a.size() == 3) return MuTerm::app(mu_term_of(a[1]), mu_term_of(a[2]));
  if (t == "tylam" && a.size() == 3) return MuTerm::tylam(atom_of(a[1]), mu_term_of(a[2]));
  if (t == "tyapp" && a.size() == 3) return MuTerm::tyapp(mu_term_of(a[1]), mu_type_of(a[2]));
  if (t == "mu" && a.size() == 5)
    return MuTerm::mu(atom_of(a[1]), mu_type_of(a[2]), atom_of(a[3]), mu_term_of(a[4]));
  syntax_error(e.col, "bad λμ2 term node '" + t + "'");
}

TargetType target_type_of(const Sexp& e) {
  const std::string& t = tag(e, arity_of(e));
  const auto& a = e.list;
  if (t == "var" && a.size() == 2) return TargetType::var(atom_of(a[1]));
  if (t == "answer" && a.size() == 1) return TargetType::answer();
  if (t == "neg" && a.size() == 2) return TargetType::neg(target_type_of(a[1]));
  if (t == "conj" && a.size() == 3) return TargetType::conj(target_type_of(a[1]), target_type_of(a[2]));
  if (t == "exists" && a.size() == 3) return TargetType::exists(atom_of(a[1]), target_type_of(a[2]));
  syntax_error(e.col, "bad target type node '" + t + "'");
}

TargetTerm target_term_of(const Sexp& e) {
  const std::string& t = tag(e, arity_of(e));
  const auto& a = e.list;
  if (t == "var" && a.size() == 2) return TargetTerm::var(atom_of(a[1]));
  if (t == "star" && a.size() == 1) return TargetTerm::star();
  if (t == "lam" && a.size() == 4)
    return TargetTerm::lam(atom_of(a[1]), target_type_of(a[2]), target_term_of(a[3]));
  if (t == "app" && a.size() == 3) return TargetTerm::app(target_term_of(a[1]), target_term_of(a[2]));
  if (t == "pair" && a.size() == 3) return TargetTerm::pair(target_term_of(a[1]), target_term_of(a[2]));
  if (t == "let-pair" && a.size() == 5)
    return TargetTerm::let_pair(atom_of(a[1]), atom_of(a[2]), target_term_of(a[3]), target_term_of(a[4]));
  if (t == "pack" && a.size() == 4)
    return TargetTerm::pack(target_type_of(a[1]), target_term_of(a[2]), target_type_of(a[3]));
  if (t == "let-pack" && a.size() == 5)
    return TargetTerm::let_pack(atom_of(a[1]), atom_of(a[2]), target_term_of(a[3]), target_term_of(a[4]));
  syntax_error(e.col, "bad target term node '" + t + "'");
}

void sexpr(std::ostringstream& os, const MuType& t) {
  switch (t.kind()) {
    case MuType::Kind::Var: os << "(var " << t.name() << ')'; return;
    case MuType::Kind::Arrow:
      os << "(arrow ";
      sexpr(os, t.dom());
      os << ' ';
      sexpr(os, t.cod());
      os << ')';
      return;
    case MuType::Kind::Forall:
      os << "(forall " << t.name() << ' ';
      sexpr(os, t.body());
      os << ')';
      return;
  }
}

void sexpr(std::ostringstream& os, const MuTerm& m) {
  switch (m.kind()) {
    case MuTerm::Kind::Var: os << "(var " << m.name() << ')'; return;
    case MuTerm::Kind::Lam:
      os << "(lam " << m.name() << ' ';
      sexpr(os, m.type());
      os << ' ';
      sexpr(os, m.body());
      os << ')';
      return;
    case MuTerm::Kind::App:
      os << "(app ";
      sexpr(os, m.fn());
      os << ' ';
      sexpr(os, m.arg());
      os << ')';
      return;
    case MuTerm::Kind::TyLam:
      os << "(tylam " << m.name() << ' ';
      sexpr(os, m.body());
      os << ')';
      return;
    case MuTerm::Kind::TyApp:
      os << "(tyapp ";
      sexpr(os, m.fn());
      os << ' ';
      sexpr(os, m.type());
      os << ')';
      return;
    case MuTerm::Kind::Mu:
      os << "(mu " << m.name() << ' ';
      sexpr(os, m.type());
      os << ' ' << m.target() << ' ';
      sexpr(os, m.body());
      os << ')';
      return;
  }
}

void sexpr(std::ostringstream& os, const TargetType& t) {
  switch (t.kind()) {
    case TargetType::Kind::Var: os << "(var " << t.name() << ')'; return;
    case TargetType::Kind::Answer: os << "(answer)"; return;
    case TargetType::Kind::Neg:
      os << "(neg ";
      sexpr(os, t.body());
      os << ')';
      return;
    case TargetType::Kind::Conj:
      os << "(conj ";
      sexpr(os, t.left());
      os << ' ';
      sexpr(os, t.right());
      os << ')';
      return;
    case TargetType::Kind::Exists:
      os << "(exists " << t.name() << ' ';
      sexpr(os, t.body());
      os << ')';
      return;
  }
}

void sexpr(std::ostringstream& os, const TargetTerm& m) {
  switch (m.kind()) {
    case TargetTerm::Kind::Var: os << "(var " << m.name() << ')'; return;
    case TargetTerm::Kind::Star: os << "(star)"; return;
    case TargetTerm::Kind::Lam:
      os << "(lam " << m.name() << ' ';
      sexpr(os, m.type());
      os << ' ';
      sexpr(os, m.body());
      os << ')';
      return;
    case TargetTerm::Kind::App:
      os << "(app ";
      sexpr(os, m.fn());
      os << ' ';
      sexpr(os, m.arg());
      os << ')';
      return;
    case TargetTerm::Kind::Pair:
      os << "(pair ";
      sexpr(os, m.fst());
      os << ' ';
      sexpr(os, m.snd());
      os << ')';
      return;
    case TargetTerm::Kind::LetPair:
    case TargetTerm::Kind::LetPack:
      os << (m.is(TargetTerm::Kind::LetPair) ? "(let-pair " : "(let-pack ") << m.name() << ' ' << m.name2() << ' ';
      sexpr(os, m.scrutinee());
      os << ' ';
      sexpr(os, m.body());
      os << ')';
      return;
    case TargetTerm::Kind::Pack:
      os << "(pack ";
      sexpr(os, m.type());
      os << ' ';
      sexpr(os, m.payload());
      os << ' ';
      sexpr(os, m.pack_type());
      os << ')';
      return;
  }
}

template <class T>
std::string render(const T& x) {
  std::ostringstream os;
  sexpr(os, x);
  return os.str();
}

}  // namespace

MuType parse_mu_type(std::string_view text) {
  Cursor c(text);
  MuType t = mu_type(c);
  c.finish();
  return t;
}

MuTerm parse_mu_term(std::string_view text, const Context& gamma, const Context& delta) {
  Cursor c(text);
  MuParser p(c);
  MPtr s = p.term();
  c.finish();
  return MuElab(gamma, delta).elab(*s, std::nullopt);
}

MuTerm parse_open_mu_term(std::string_view text, Context& gamma, const Context& delta,
                          const std::optional<MuType>& expected) {
  Cursor c(text);
  MuParser p(c);
  MPtr s = p.term();
  c.finish();
  MuElab e(gamma, delta, true);
  MuTerm m = e.elab(*s, expected);
  gamma.insert(gamma.begin(), e.inferred().begin(), e.inferred().end());
  return m;
}

TargetType parse_target_type(std::string_view text) {
  Cursor c(text);
  TargetType t = target_type(c);
  c.finish();
  return t;
}

TargetTerm parse_target_term(std::string_view text, const TargetContext& ctx) {
  Cursor c(text);
  TargetParser p(c);
  TPtr s = p.term();
  c.finish();
  return TargetElab(ctx).elab(*s, std::nullopt);
}

std::string to_sexpr(const MuType& t) { return render(t); }
std::string to_sexpr(const MuTerm& m) { return render(m); }
std::string to_sexpr(const TargetType& t) { return render(t); }
std::string to_sexpr(const TargetTerm& m) { return render(m); }

MuType mu_type_from_sexpr(std::string_view text) { return mu_type_of(SexpReader(text).read_all()); }
MuTerm mu_term_from_sexpr(std::string_view text) { return mu_term_of(SexpReader(text).read_all()); }
TargetType target_type_from_sexpr(std::string_view text) { return target_type_of(SexpReader(text).read_all()); }
TargetTerm target_term_from_sexpr(std::string_view text) { return target_term_of(SexpReader(text).read_all()); }

}  // namespace mu2forge
