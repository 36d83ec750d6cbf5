#include <gtest/gtest.h>

#include "mu2forge/acceptance.hpp"
#include "mu2forge/encodings.hpp"
#include "mu2forge/inverse_cps.hpp"
#include "mu2forge/mu_theory.hpp"
#include "mu2forge/syntax.hpp"
#include "oracle.hpp"

using namespace mu2forge;

namespace {
MuType s = MuType::var("s"), t = MuType::var("t");
}

TEST(InverseCps, InverseTypeUndoesTranslation) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    MuType ty = sample_type(rng, 4, {"X"});
    EXPECT_EQ(oracle::db(inverse_type(oracle::cps(ty))), oracle::db(ty)) << to_string(ty);
  }
}

TEST(InverseCps, RejectsTypesOutsideTheImage) {
  TargetType bad = TargetType::conj(TargetType::var("s"), TargetType::var("t"));
  EXPECT_THROW(inverse_type(bad), KernelError);
  EXPECT_THROW(inverse_type(TargetType::answer()), KernelError);
}

TEST(InverseCps, ContextSplit) {
  TargetContext c = cps_context({{"x", s}}, {{"a", t}});
  auto [g, d] = inverse_context(c);
  ASSERT_EQ(g.size(), 1u);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(g[0].second, s);
  EXPECT_EQ(d[0].second, t);
}

TEST(InverseCps, ApplicationInvertsToNamedMu) {
  // λk. f ⟨n, k⟩ comes back as 𝛍k.[k] f n, which is βη-equal to f n.
  Context g{{"f", MuType::arrow(s, t)}, {"n", s}};
  TargetContext c = cps_context(g, {});
  TargetTerm p = parse_target_term("\\k:t. f <n, k>", c);
  CanonicalForm f = canonicalize(c, p, TargetType::neg(TargetType::var("t")), Mode::Plain);
  Inverted inv = invert(c, f);
  EXPECT_EQ(inv.kind, CanonicalForm::Kind::Program);
  EXPECT_TRUE(eq_mu(g, {}, inv.term, MuTerm::app(MuTerm::var("f"), MuTerm::var("n")), Theory::BetaEta).equal);
}

TEST(InverseCps, RoundTripOnGeneratedTerms) {
  for (const auto& j : sample_judgements(61, 150)) {
    TargetContext c = cps_context(j.gamma, j.delta);
    for (Mode m : {Mode::Plain, Mode::Parametric}) {
      CanonicalForm f = canonicalize(c, cps_term(j), TargetType::neg(cps_type(j.type)), m);
      Inverted inv = invert(c, f, m);
      ASSERT_EQ(inv.kind, CanonicalForm::Kind::Program);
      // The inverse has the original type and translates back to the form.
      EXPECT_EQ(oracle::db(*oracle::type_of(j.gamma, j.delta, inv.term)), oracle::db(j.type));
      EXPECT_TRUE(roundtrip(c, f, m).equal) << to_string(j.subject);
      // Full circle: the inverse is equal to the source in the matching theory.
      Theory th = m == Mode::Plain ? Theory::BetaEta : Theory::LambdaMu2P;
      EXPECT_TRUE(eq_mu(j.gamma, j.delta, inv.term, j.subject, th).equal) << to_string(j.subject);
    }
  }
}

TEST(InverseCps, ContinuationsBecomeHoleContexts) {
  // k ↦ f ⟨n, k⟩ read as a continuation of type t°: [a] (f n) with the hole
  // standing for the μ-bound continuation.
  Context g{{"f", MuType::arrow(s, t)}, {"n", s}};
  TargetContext c = cps_context(g, {});
  c.emplace_back("k", TargetType::var("t"));
  TargetTerm answer = parse_target_term("f <n, k>", c);
  CanonicalForm f = canonicalize(c, answer, TargetType::answer(), Mode::Plain);
  EXPECT_EQ(f.kind, CanonicalForm::Kind::Answer);
  Inverted inv = invert(c, f);
  EXPECT_TRUE(inv.term.is(MuTerm::Kind::Mu) || typecheck_mu(inverse_context(c).first, inverse_context(c).second,
                                                             inv.term)
                                                    .is_bottom());
}

TEST(InverseCps, FillPlugsWithoutRenaming) {
  MuHoleContext h{named("a", MuTerm::app(MuTerm::var(kHole), MuTerm::var("n"))), MuType::arrow(s, t)};
  MuTerm filled = fill(h, MuTerm::var("f"));
  EXPECT_EQ(filled, named("a", MuTerm::app(MuTerm::var("f"), MuTerm::var("n"))));
}
