#include <gtest/gtest.h>

#include <random>

#include "mu2forge/acceptance.hpp"
#include "mu2forge/cps.hpp"
#include "mu2forge/encodings.hpp"
#include "oracle.hpp"

using namespace mu2forge;

namespace {
MuType s = MuType::var("s"), t = MuType::var("t"), X = MuType::var("X");
MuTerm V(const char* n) { return MuTerm::var(n); }
}  // namespace

TEST(Cps, TypeTranslationExamples) {
  EXPECT_EQ(to_string(cps_type(MuType::arrow(s, t))), "not s /\\ t");
  EXPECT_EQ(to_string(cps_type(MuType::forall("X", MuType::arrow(X, s)))), "exists X. not X /\\ s");
  // ⊥° = ∃X.X, the terminal type in parametric mode.
  EXPECT_TRUE(cps_type(MuType::bottom()).is_top());
}

TEST(Cps, TypeTranslationAgreesWithOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    MuType ty = sample_type(rng, 4, {"X"});
    EXPECT_EQ(oracle::db(cps_type(ty)), oracle::db(oracle::cps(ty))) << to_string(ty);
  }
}

TEST(Cps, ContextTranslation) {
  TargetContext c = cps_context({{"x", s}}, {{"a", t}});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].first, "x");
  EXPECT_EQ(c[0].second, TargetType::neg(TargetType::var("s")));
  EXPECT_EQ(c[1].second, TargetType::var("t"));
}

TEST(Cps, TermTranslationAgreesWithOracleOnCatalog) {
  for (const auto& e : catalog()) {
    TargetTerm got = cps_term(e.gamma, e.delta, e.term);
    EXPECT_TRUE(oracle::alpha_eq(got, oracle::cps(e.gamma, e.delta, e.term))) << e.name << ": " << to_string(got);
  }
}

TEST(Cps, TermTranslationAgreesWithOracleOnGeneratedTerms) {
  for (const auto& j : sample_judgements(3, 400)) {
    TargetTerm got = cps_term(j);
    EXPECT_TRUE(oracle::alpha_eq(got, oracle::cps(j.gamma, j.delta, j.subject)))
        << to_string(j.subject) << "\n  got " << to_string(got);
  }
}

TEST(Cps, ImagesTypecheckAtNegatedType) {
  for (const auto& j : sample_judgements(11, 300)) {
    SoundnessReport r = check_type_soundness(j);
    EXPECT_EQ(r.type, TargetType::neg(oracle::cps(j.type)));
    EXPECT_EQ(typecheck_target(r.context, r.image, Mode::Plain), r.type);
  }
}

TEST(Cps, TypeSubstitutionLemma) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    MuType sigma = sample_type(rng, 3, {"X"});
    MuType tau = sample_type(rng, 2);
    LemmaReport r = check_type_subst_lemma(sigma, "X", tau);
    EXPECT_TRUE(r.identical) << r.lhs << " vs " << r.rhs;
    // Independent: compare the oracle's translation of σ[τ/X] with the
    // oracle substitution on σ°.
    EXPECT_EQ(oracle::db(oracle::cps(oracle::subst(sigma, "X", tau))),
              oracle::db(subst_type(oracle::cps(sigma), "X", oracle::cps(tau))));
  }
}

TEST(Cps, TermSubstitutionLemmaOnFixedInstance) {
  // M = λy:s. x y with x : s → t, N = f : s → t
  Context g{{"f", MuType::arrow(s, t)}, {"x", MuType::arrow(s, t)}};
  MuTerm m = MuTerm::lam("y", s, MuTerm::app(V("x"), V("y")));
  LemmaReport r = check_term_subst_lemma(g, {}, m, "x", V("f"));
  EXPECT_TRUE(r.identical) << r.lhs << " vs " << r.rhs;
}

TEST(Cps, TypeInTermLemmaOnFixedInstance) {
  MuTerm m = MuTerm::lam("y", X, V("y"));
  LemmaReport r = check_type_in_term_lemma({}, {}, m, "X", MuType::arrow(s, t));
  EXPECT_TRUE(r.identical) << r.lhs << " vs " << r.rhs;
}

TEST(Cps, SoundnessRejectsNothingOnCatalog) {
  for (const auto& e : catalog()) EXPECT_NO_THROW(check_type_soundness(judge(e.gamma, e.delta, e.term))) << e.name;
}
