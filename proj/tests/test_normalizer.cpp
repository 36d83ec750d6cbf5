#include <gtest/gtest.h>

#include "mu2forge/acceptance.hpp"
#include "mu2forge/cps.hpp"
#include "mu2forge/encodings.hpp"
#include "mu2forge/normalizer.hpp"
#include "mu2forge/syntax.hpp"
#include "oracle.hpp"

using namespace mu2forge;

namespace {

TargetType S = TargetType::var("s"), T = TargetType::var("t");
TargetType neg(TargetType a) { return TargetType::neg(std::move(a)); }
TargetTerm V(const char* n) { return TargetTerm::var(n); }

CanonicalForm canon(const TargetContext& c, const std::string& text, Mode m = Mode::Plain) {
  TargetTerm p = parse_target_term(text, c);
  return canonicalize(c, p, typecheck_target(c, p, m), m);
}

}  // namespace

TEST(Normalizer, EtaContractsToVariable) {
  TargetContext c{{"f", neg(S)}};
  EXPECT_EQ(canon(c, "\\k:s. f k").term, V("f"));
  EXPECT_EQ(canon(c, "\\k:s. (\\x:s. f x) k").term, V("f"));
}

TEST(Normalizer, BetaThroughPairs) {
  // (λz. let ⟨x,k⟩ = z in x k) ⟨g, k⟩  →  g k
  TargetContext c{{"g", neg(S)}, {"k", S}};
  TargetTerm redex = TargetTerm::app(
      TargetTerm::lam("z", TargetType::conj(neg(S), S),
                      TargetTerm::let_pair("x", "j", V("z"), TargetTerm::app(V("x"), V("j")))),
      TargetTerm::pair(V("g"), V("k")));
  EXPECT_EQ(beta_normalize(redex), TargetTerm::app(V("g"), V("k")));
}

TEST(Normalizer, BetaThroughPacks) {
  TargetType ex = TargetType::exists("X", TargetType::conj(neg(TargetType::var("X")), TargetType::var("X")));
  TargetTerm redex = TargetTerm::let_pack(
      "X", "w", TargetTerm::pack(S, TargetTerm::pair(V("g"), V("k")), ex),
      TargetTerm::let_pair("m", "n", V("w"), TargetTerm::app(V("m"), V("n"))));
  EXPECT_EQ(beta_normalize(redex), TargetTerm::app(V("g"), V("k")));
}

TEST(Normalizer, ImageOfApplicationIsProgram) {
  // [[f n]] = λk. f ⟨n, k⟩ is already canonical.
  Context g{{"f", MuType::arrow(MuType::var("s"), MuType::var("t"))}, {"n", MuType::var("s")}};
  MuTerm m = MuTerm::app(MuTerm::var("f"), MuTerm::var("n"));
  TargetContext c = cps_context(g, {});
  CanonicalForm f = canonicalize(c, cps_term(g, {}, m), neg(T), Mode::Plain);
  EXPECT_EQ(f.kind, CanonicalForm::Kind::Program);
  EXPECT_EQ(to_string(f.term), "\\k:t. f <n, k>");
}

TEST(Normalizer, IdentityImageContractsToLambdaOverPair) {
  // [[λx.x]] = λz. let ⟨x,k⟩ = z in x k : nothing to contract.
  CanonicalForm f = canonicalize({}, cps_term({}, {}, parse_mu_term("\\x:s. x")),
                                 neg(TargetType::conj(neg(S), S)), Mode::Plain);
  EXPECT_TRUE(oracle::alpha_eq(f.term, parse_target_term("\\z:not s /\\ s. let <x, k> = z in x k")));
}

TEST(Normalizer, ParametricCollapsesTop) {
  // In parametric mode every subterm of type ∃X.X is ⋆.
  TargetContext c{{"f", neg(TargetType::top())}, {"x", TargetType::top()}, {"y", TargetType::top()}};
  TargetTerm a = TargetTerm::app(V("f"), V("x"));
  TargetTerm b = TargetTerm::app(V("f"), V("y"));
  EXPECT_TRUE(eq_target(c, a, TargetTerm::app(V("f"), TargetTerm::star()), Mode::Parametric).equal);
  EXPECT_TRUE(eq_target(c, a, b, Mode::Parametric).equal);
  EXPECT_FALSE(eq_target(c, a, b, Mode::Plain).equal);
  EXPECT_THROW(typecheck_target(c, TargetTerm::star(), Mode::Plain), KernelError);
}

TEST(Normalizer, TracesReplay) {
  for (const auto& j : sample_judgements(23, 150)) {
    TargetContext c = cps_context(j.gamma, j.delta);
    TargetTerm img = cps_term(j);
    for (Mode m : {Mode::Plain, Mode::Parametric}) {
      CanonicalForm f = canonicalize(c, img, TargetType::neg(cps_type(j.type)), m);
      EXPECT_EQ(replay(c, img, f.trace, m), f.term) << to_string(j.subject);
      EXPECT_EQ(parse_trace(format_trace(f.trace)).size(), f.trace.size());
      // Canonical forms are fixed points.
      EXPECT_EQ(canonicalize(c, f.term, f.type, m).term, f.term);
    }
  }
}

TEST(Normalizer, StepFormatRoundTrips) {
  RewriteStep s{"beta-pair", {0, 1, 1}, {"x", "k"}};
  std::string line = format_step(s);
  RewriteStep back = parse_step(line);
  EXPECT_EQ(back.axiom, s.axiom);
  EXPECT_EQ(back.path, s.path);
  EXPECT_EQ(back.args, s.args);
  EXPECT_EQ(parse_step(format_step({"eta", {}, {}})).path, Path{});
}

TEST(Normalizer, EqualityIsReflexiveAndValidated) {
  for (const auto& j : sample_judgements(29, 80)) {
    TargetContext c = cps_context(j.gamma, j.delta);
    TargetTerm img = cps_term(j);
    EqVerdict v = eq_target(c, img, img, Mode::Plain);
    EXPECT_TRUE(v.equal);
    EXPECT_EQ(validate_verdict(c, img, img, v, Mode::Plain), "");
  }
}

TEST(Normalizer, DistinctVariables) {
  TargetContext c{{"f", neg(S)}, {"g", neg(S)}};
  EqVerdict v = eq_target(c, V("f"), V("g"), Mode::Parametric);
  EXPECT_FALSE(v.equal);
  EXPECT_EQ(validate_verdict(c, V("f"), V("g"), v, Mode::Parametric), "");
}

TEST(Normalizer, ClassifiesAnswers) {
  TargetContext c{{"f", neg(S)}, {"x", S}};
  EXPECT_EQ(classify(TargetTerm::app(V("f"), V("x")), TargetType::answer(), Mode::Plain),
            CanonicalForm::Kind::Answer);
}
