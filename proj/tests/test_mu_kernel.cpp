#include <gtest/gtest.h>

#include "mu2forge/acceptance.hpp"
#include "mu2forge/encodings.hpp"
#include "mu2forge/mu_kernel.hpp"
#include "oracle.hpp"

using namespace mu2forge;

namespace {

MuType s = MuType::var("s"), t = MuType::var("t"), X = MuType::var("X");
MuTerm V(const char* n) { return MuTerm::var(n); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const KernelError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::GaveUp;
}

}  // namespace

TEST(MuKernel, IdentityTypes) {
  EXPECT_EQ(typecheck_mu({}, {}, MuTerm::lam("x", s, V("x"))), MuType::arrow(s, s));
}

TEST(MuKernel, PolymorphicIdentity) {
  MuTerm id = MuTerm::tylam("X", MuTerm::lam("x", X, V("x")));
  EXPECT_EQ(typecheck_mu({}, {}, id), MuType::forall("X", MuType::arrow(X, X)));
  EXPECT_EQ(typecheck_mu({}, {}, MuTerm::tyapp(id, t)), MuType::arrow(t, t));
}

TEST(MuKernel, MuAbstractionTypesAtItsAnnotation) {
  // μa^s.[b]x with x:t, b:t
  MuTerm m = MuTerm::mu("a", s, "b", V("x"));
  EXPECT_EQ(typecheck_mu({{"x", t}}, {{"b", t}}, m), s);
}

TEST(MuKernel, BottomAndNegation) {
  EXPECT_TRUE(MuType::bottom().is_bottom());
  EXPECT_EQ(MuType::bottom(), MuType::forall("Y", MuType::var("Y")));
  EXPECT_EQ(MuType::neg(s), MuType::arrow(s, MuType::bottom()));
}

TEST(MuKernel, NamedTermHasTypeBottom) {
  EXPECT_TRUE(typecheck_mu({{"x", s}}, {{"a", s}}, named("a", V("x"))).is_bottom());
}

TEST(MuKernel, BoldMuTypesAtAnnotation) {
  // 𝛍a^s. M for M : ⊥
  MuTerm m = bold_mu("a", s, named("a", V("x")));
  EXPECT_EQ(typecheck_mu({{"x", s}}, {}, m), s);
}

TEST(MuKernel, Errors) {
  EXPECT_EQ(code_of([] { typecheck_mu({}, {}, V("x")); }), Errc::UnboundVariable);
  EXPECT_EQ(code_of([] { typecheck_mu({{"x", s}}, {}, MuTerm::mu("a", s, "b", V("x"))); }), Errc::UnboundName);
  EXPECT_EQ(code_of([] { typecheck_mu({{"x", s}}, {}, MuTerm::app(V("x"), V("x"))); }), Errc::TypeMismatch);
  // ΛX.x with x:X free in Γ
  EXPECT_EQ(code_of([] { typecheck_mu({{"x", X}}, {}, MuTerm::tylam("X", V("x"))); }),
            Errc::EscapingTypeVariable);
}

TEST(MuKernel, AlphaEquivalenceAgreesWithDeBruijn) {
  MuTerm a = MuTerm::tylam("X", MuTerm::lam("x", X, MuTerm::mu("a", X, "a", V("x"))));
  MuTerm b = MuTerm::tylam("Y", MuTerm::lam("y", MuType::var("Y"), MuTerm::mu("c", MuType::var("Y"), "c", V("y"))));
  EXPECT_TRUE(oracle::alpha_eq(a, b));
  EXPECT_EQ(a, b);
  MuTerm c = MuTerm::lam("x", s, V("y"));
  EXPECT_NE(c, MuTerm::lam("y", s, V("y")));
}

TEST(MuKernel, TypeCaptureAvoidingSubstitution) {
  // (∀Y. X → Y)[Y/X] must rename the binder.
  MuType body = MuType::forall("Y", MuType::arrow(X, MuType::var("Y")));
  MuType got = subst_type(body, "X", MuType::var("Y"));
  EXPECT_EQ(oracle::db(got), oracle::db(oracle::subst(body, "X", MuType::var("Y"))));
  EXPECT_EQ(oracle::db(got), "(A (Y > #0))");
}

TEST(MuKernel, TermCaptureAvoidingSubstitution) {
  MuTerm m = MuTerm::lam("y", s, V("x"));
  MuTerm got = subst_term(m, "x", V("y"));
  EXPECT_EQ(oracle::db(got), "(L s y)");
}

TEST(MuKernel, MixedSubstitutionAppArg) {
  // ([a] x)[a ⇐ · N / b]  =  [b] (x N)
  MuTerm m = named("a", V("x"));
  MuTerm got = mixed_subst(m, "a", MixedMode::app_arg(V("n")), "b");
  EXPECT_EQ(got, named("b", MuTerm::app(V("x"), V("n"))));
}

TEST(MuKernel, MixedSubstitutionTyArgAndRename) {
  MuTerm m = named("a", V("x"));
  EXPECT_EQ(mixed_subst(m, "a", MixedMode::ty_arg(s), "b"), named("b", MuTerm::tyapp(V("x"), s)));
  EXPECT_EQ(mixed_subst(m, "a", MixedMode::rename(), "b"), named("b", V("x")));
}

// Random judgements: the kernel's typing agrees with the naive oracle.
TEST(MuKernel, TypingAgreesWithOracleOnGeneratedTerms) {
  auto js = sample_judgements(17, 300);
  ASSERT_EQ(js.size(), 300u);
  for (const auto& j : js) {
    auto want = oracle::type_of(j.gamma, j.delta, j.subject);
    ASSERT_TRUE(want.has_value()) << to_string(j.subject);
    EXPECT_EQ(oracle::db(j.type), oracle::db(*want)) << to_string(j.subject);
  }
}

TEST(MuKernel, EqualityAgreesWithDeBruijnOnGeneratedTerms) {
  auto js = sample_judgements(99, 200);
  for (std::size_t i = 0; i + 1 < js.size(); ++i) {
    const MuTerm& a = js[i].subject;
    const MuTerm& b = js[i + 1].subject;
    EXPECT_EQ(a == b, oracle::alpha_eq(a, b));
    EXPECT_TRUE(a == a);
  }
}

TEST(MuKernel, CatalogTypes) {
  // Types read off the displays by hand.
  std::map<std::string, std::string> want = {
      {"id", "s -> s"},
      {"C", "not not s -> s"},
      {"Peirce", "((s -> t) -> s) -> s"},
      {"Abort", "bot -> s"},
      {"O", "forall X. X -> (X -> X) -> X"},
      {"L-eta", "s -> forall X. (s -> X) -> X"},
  };
  for (const auto& e : catalog()) {
    auto it = want.find(e.name);
    if (it == want.end()) continue;
    EXPECT_EQ(to_string(e.type), it->second) << e.name;
  }
}
