#include <gtest/gtest.h>

#include "mu2forge/encodings.hpp"
#include "mu2forge/focality.hpp"
#include "oracle.hpp"

using namespace mu2forge;

namespace {

MuType s = MuType::var("s"), t = MuType::var("t"), X = MuType::var("X");
MuTerm V(const char* n) { return MuTerm::var(n); }

struct Case {
  const char* name;
  Context gamma, delta;
  MuTerm f;
};

std::vector<Case> focal_cases() {
  return {
      {"id", {}, {}, MuTerm::lam("x", s, V("x"))},
      {"Abort", {}, {}, mk_combinator("Abort", {s})},
      {"x N", {{"n", s}}, {}, MuTerm::lam("x", MuType::arrow(s, t), MuTerm::app(V("x"), V("n")))},
      {"x [s]", {}, {}, MuTerm::lam("x", MuType::forall("X", MuType::arrow(X, t)), MuTerm::tyapp(V("x"), s))},
      {"throw", {}, {{"a", s}}, MuTerm::lam("x", s, named("a", V("x")))},
      {"C", {}, {}, mk_combinator("C", {s})},
      {"L-alpha", {}, {}, mk_combinator("L-alpha", {s})},
  };
}

}  // namespace

TEST(Focality, CertificatesUnderP) {
  for (const auto& c : focal_cases()) {
    FocalCheck r = check_focal(c.gamma, c.delta, c.f);
    ASSERT_TRUE(r) << c.name << ": " << r.reason;
    EXPECT_EQ(validate_certificate(*r.certificate), "") << c.name;
    // The certificate's claim re-derived here: the image is λk. x g with x
    // used once, at the head.
    EXPECT_EQ(r.certificate->dom, typecheck_mu(c.gamma, c.delta, c.f).dom()) << c.name;
  }
}

TEST(Focality, CertifiedMapsAreRepeatableAndDiscardable) {
  for (const auto& c : focal_cases()) {
    EXPECT_TRUE(check_repeatable(c.gamma, c.delta, c.f).equal) << c.name;
    EXPECT_TRUE(check_discardable(c.gamma, c.delta, c.f).equal) << c.name;
    EXPECT_TRUE(check_algebra_square(c.gamma, c.delta, c.f).equal) << c.name;
  }
}

TEST(Focality, ConstantMapHasNoCertificate) {
  Context g{{"c", t}};
  MuTerm k = MuTerm::lam("x", s, V("c"));
  FocalCheck r = check_focal(g, {}, k);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.reason.empty());
  // and indeed it is not discardable: k ∘ A ≠ A.
  EXPECT_FALSE(check_discardable(g, {}, k).equal);
}

TEST(Focality, LinearityIsStrongerThanFocality) {
  // The identity is linear; C is focal but not linear.
  EXPECT_TRUE(check_linear({}, {}, MuTerm::lam("x", s, V("x"))).equal);
  EXPECT_FALSE(check_linear({}, {}, mk_combinator("C", {s})).equal);
}

TEST(Focality, NotAMap) {
  try {
    check_focal({{"x", s}}, {}, V("x"));
    FAIL();
  } catch (const KernelError& e) {
    EXPECT_EQ(e.code(), Errc::IllTyped);
  }
}

TEST(Focality, CompositesValidate) {
  auto id = check_focal({}, {}, MuTerm::lam("x", MuType::arrow(s, t), V("x"))).certificate;
  auto app = check_focal({{"n", s}}, {}, MuTerm::lam("x", MuType::arrow(s, t), MuTerm::app(V("x"), V("n")))).certificate;
  ASSERT_TRUE(id && app);
  FocalityCertificate c = compose(*id, *app);
  EXPECT_EQ(validate_certificate(c), "");
  EXPECT_EQ(c.dom, MuType::arrow(s, t));
  EXPECT_EQ(c.cod, t);
  EXPECT_TRUE(check_discardable(c.gamma, c.delta, c.subject).equal);
}

TEST(Focality, NaturalitySquares) {
  auto h = check_focal({{"n", s}}, {}, MuTerm::lam("x", MuType::arrow(s, t), MuTerm::app(V("x"), V("n")))).certificate;
  ASSERT_TRUE(h);
  EXPECT_TRUE(check_naturality_square(*h, Square::C).equal);
  EXPECT_TRUE(check_naturality_square(*h, Square::Peirce).equal);
  EXPECT_TRUE(check_naturality_square(*h, Square::Fold).equal);
}

// Peirce's combinator as a map ((s→t)→s)→s. Its image is λk. x g with x at
// the head, used once, so extraction succeeds; see the README.
TEST(Focality, PeirceImageFactorsThroughItsArgument) {
  FocalCheck r = check_focal({}, {}, mk_combinator("Peirce", {s, t}));
  ASSERT_TRUE(r);
  EXPECT_EQ(validate_certificate(*r.certificate), "");
  EXPECT_TRUE(check_discardable({}, {}, mk_combinator("Peirce", {s, t})).equal);
}

TEST(Focality, BetaEtaLacksDiscardability) {
  // Without the additional axioms instantiation is not discardable.
  MuTerm f = MuTerm::lam("x", MuType::forall("X", MuType::arrow(X, t)), MuTerm::tyapp(V("x"), s));
  EXPECT_FALSE(check_discardable({}, {}, f, Theory::BetaEta).equal);
  EXPECT_TRUE(check_discardable({}, {}, f, Theory::LambdaMu2P).equal);
}
