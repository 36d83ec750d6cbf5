#include <gtest/gtest.h>

#include "mu2forge/acceptance.hpp"
#include "mu2forge/cps.hpp"
#include "mu2forge/encodings.hpp"
#include "mu2forge/normalizer.hpp"
#include "mu2forge/syntax.hpp"
#include "oracle.hpp"

using namespace mu2forge;

namespace {

MuType s = MuType::var("s"), t = MuType::var("t");

std::string syntax_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const KernelError& e) {
    EXPECT_EQ(e.code(), Errc::SyntaxError);
    return e.what();
  }
  ADD_FAILURE() << "no error raised";
  return "";
}

}  // namespace

TEST(Syntax, Examples) {
  EXPECT_EQ(parse_mu_term("\\x:s. x"), MuTerm::lam("x", s, MuTerm::var("x")));
  EXPECT_EQ(parse_mu_term("mu a:s. [b] M", {{"M", t}}, {{"b", t}}), MuTerm::mu("a", s, "b", MuTerm::var("M")));
  EXPECT_EQ(parse_mu_type("forall X. (s -> X) -> X"), l_type(s));
  EXPECT_EQ(parse_mu_type("not not s -> s"), MuType::arrow(MuType::neg(MuType::neg(s)), s));
  EXPECT_TRUE(parse_mu_type("bot").is_bottom());
}

TEST(Syntax, Combinators) {
  Context g{{"M", s}};
  MuTerm m = parse_mu_term("C[s] (\\k. k M)", g);
  EXPECT_EQ(m, MuTerm::app(mk_combinator("C", {s}),
                           MuTerm::lam("k", MuType::neg(s), MuTerm::app(MuTerm::var("k"), MuTerm::var("M")))));
  EXPECT_EQ(parse_mu_term("L_alpha[s]"), mk_combinator("L-alpha", {s}));
}

TEST(Syntax, OpenTermsInferArgumentTypes) {
  Context g;
  MuTerm m = parse_open_mu_term("C[s] (\\k. k M)", g, {});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].first, "M");
  EXPECT_EQ(g[0].second, s);
  EXPECT_EQ(typecheck_mu(g, {}, m), s);
}

TEST(Syntax, TargetExamples) {
  TargetContext c{{"f", TargetType::neg(TargetType::var("s"))}};
  EXPECT_EQ(parse_target_term("\\k:s. f k", c),
            TargetTerm::lam("k", TargetType::var("s"), TargetTerm::app(TargetTerm::var("f"), TargetTerm::var("k"))));
  EXPECT_EQ(parse_target_type("exists X. not X /\\ X"),
            TargetType::exists("X", TargetType::conj(TargetType::neg(TargetType::var("X")), TargetType::var("X"))));
  EXPECT_EQ(parse_target_term("*"), TargetTerm::star());
}

TEST(Syntax, LetIsResolvedByType) {
  TargetTerm a = parse_target_term("\\z:exists X. not X /\\ X. let <Y, w> = z in let <m, n> = w in m n");
  EXPECT_EQ(a.body().kind(), TargetTerm::Kind::LetPack);
  TargetTerm b = parse_target_term("\\z:not s /\\ s. let <m, n> = z in m n");
  EXPECT_EQ(b.body().kind(), TargetTerm::Kind::LetPair);
}

TEST(Syntax, PositionedErrors) {
  EXPECT_NE(syntax_error_of([] { parse_mu_term("\\x:s x"); }).find("column 6"), std::string::npos);
  EXPECT_NE(syntax_error_of([] { parse_mu_type("s -> "); }).find("column"), std::string::npos);
  EXPECT_NE(syntax_error_of([] { parse_target_term("<s | k"); }).find("column"), std::string::npos);
}

TEST(Syntax, MuRoundTripOnThousandTerms) {
  auto js = sample_judgements(1234, 1000);
  ASSERT_EQ(js.size(), 1000u);
  for (const auto& j : js) {
    std::string text = to_string(j.subject);
    MuTerm back = parse_mu_term(text, j.gamma, j.delta);
    ASSERT_TRUE(oracle::alpha_eq(back, j.subject)) << text;
    EXPECT_EQ(to_string(back), text);
    EXPECT_EQ(mu_term_from_sexpr(to_sexpr(j.subject)), j.subject);
    EXPECT_EQ(parse_mu_type(to_string(j.type)), j.type);
  }
}

TEST(Syntax, TargetRoundTripOnThousandTerms) {
  // CPS images and their canonical forms: pairs, packs, both lets, ⋆.
  std::size_t n = 0;
  for (const auto& j : sample_judgements(4321, 500)) {
    TargetContext c = cps_context(j.gamma, j.delta);
    TargetTerm img = cps_term(j);
    CanonicalForm f = canonicalize(c, img, TargetType::neg(cps_type(j.type)), Mode::Parametric);
    for (const TargetTerm& m : {img, f.term}) {
      ++n;
      std::string text = to_string(m);
      TargetTerm back = parse_target_term(text, c);
      ASSERT_TRUE(oracle::alpha_eq(back, m)) << text;
      EXPECT_EQ(to_string(back), text);
      EXPECT_EQ(target_term_from_sexpr(to_sexpr(m)), m);
    }
    EXPECT_EQ(parse_target_type(to_string(f.type)), f.type);
    EXPECT_EQ(target_type_from_sexpr(to_sexpr(f.type)), f.type);
  }
  EXPECT_EQ(n, 1000u);
}

TEST(Syntax, CatalogRoundTrips) {
  for (const auto& e : catalog()) {
    EXPECT_EQ(parse_mu_term(to_string(e.term), e.gamma, e.delta), e.term) << e.name;
    EXPECT_EQ(mu_type_from_sexpr(to_sexpr(e.type)), e.type) << e.name;
  }
}

TEST(Syntax, SexprShapes) {
  EXPECT_EQ(to_sexpr(MuType::arrow(s, t)), "(arrow (var s) (var t))");
  EXPECT_EQ(to_sexpr(TargetTerm::star()), "(star)");
  EXPECT_THROW(mu_term_from_sexpr("(lam x)"), KernelError);
}
