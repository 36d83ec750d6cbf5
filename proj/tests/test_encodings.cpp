#include <gtest/gtest.h>

#include "mu2forge/encodings.hpp"
#include "mu2forge/mu_theory.hpp"
#include "oracle.hpp"

using namespace mu2forge;

namespace {

MuType s = MuType::var("s"), t = MuType::var("t"), X = MuType::var("X");
MuTerm V(const char* n) { return MuTerm::var(n); }
MuTerm app(MuTerm f, MuTerm a) { return MuTerm::app(std::move(f), std::move(a)); }

MuTerm church_by_hand(unsigned n) {
  MuTerm body = V("x");
  for (unsigned i = 0; i < n; ++i) body = app(V("f"), body);
  return MuTerm::tylam("X", MuTerm::lam("x", X, MuTerm::lam("f", MuType::arrow(X, X), body)));
}

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

TEST(Encodings, Types) {
  EXPECT_EQ(to_string(l_type(s)), "forall X. (s -> X) -> X");
  EXPECT_EQ(to_string(nat_type()), "forall X. X -> (X -> X) -> X");
  EXPECT_EQ(mu_type({"X", MuType::arrow(s, X)}),
            MuType::forall("X", MuType::arrow(MuType::arrow(MuType::arrow(s, X), X), X)));
}

TEST(Encodings, Polarity) {
  EXPECT_EQ((TypeScheme{"X", MuType::arrow(s, X)}.polarity()), Polarity::Positive);
  EXPECT_EQ((TypeScheme{"X", MuType::arrow(X, s)}.polarity()), Polarity::Negative);
  EXPECT_EQ((TypeScheme{"X", MuType::arrow(X, X)}.polarity()), Polarity::Mixed);
  EXPECT_EQ((TypeScheme{"X", s}.polarity()), Polarity::Absent);
  EXPECT_EQ((TypeScheme{"X", MuType::neg(MuType::neg(X))}.polarity()), Polarity::Positive);
}

TEST(Encodings, ChurchNumeralsMatchDisplay) {
  for (unsigned n = 0; n < 5; ++n) EXPECT_EQ(church(n), church_by_hand(n)) << n;
}

TEST(Encodings, SuccessorIterates) {
  MuTerm three = app(mk_combinator("S", {}), app(mk_combinator("S", {}), app(mk_combinator("S", {}), mk_combinator("O", {}))));
  EXPECT_TRUE(eq_mu({}, {}, three, church(3), Theory::BetaEta).equal);
}

TEST(Encodings, FunctorialActionOfDoubleNegation) {
  TypeScheme F{"X", MuType::neg(MuType::neg(X))};
  Context g{{"f", MuType::arrow(s, t)}};
  MuTerm act = functorial_action(F, V("f"), s, t);
  MuTerm hand = MuTerm::lam("m", MuType::neg(MuType::neg(s)),
                            MuTerm::lam("k", MuType::neg(t), app(V("m"), MuTerm::lam("x", s, app(V("k"), app(V("f"), V("x")))))));
  EXPECT_TRUE(eq_mu(g, {}, act, hand, Theory::BetaEta).equal);
}

TEST(Encodings, FunctorialActionPreservesIdentity) {
  TypeScheme F{"X", MuType::arrow(s, X)};
  MuTerm act = functorial_action(F, MuTerm::lam("y", t, V("y")), t, t);
  EXPECT_TRUE(eq_mu({}, {}, act, MuTerm::lam("z", F.at(t), V("z")), Theory::BetaEta).equal);
}

TEST(Encodings, NegativeOccurrenceRejected) {
  TypeScheme F{"X", MuType::arrow(X, s)};
  EXPECT_EQ(code_of([&] { functorial_action(F, V("f"), s, t); }), Errc::NegativeOccurrence);
}

TEST(Encodings, CombinatorErrors) {
  EXPECT_EQ(code_of([] { mk_combinator("K", {}); }), Errc::UnknownCombinator);
  EXPECT_EQ(code_of([] { mk_combinator("C", {}); }), Errc::ArityMismatch);
  EXPECT_EQ(code_of([] { mk_combinator("sharp", {s, t}); }), Errc::ArityMismatch);
}

TEST(Encodings, CombinatorTableTypesAsAdvertised) {
  EXPECT_EQ(typecheck_mu({}, {}, mk_combinator("C", {s})), MuType::arrow(MuType::neg(MuType::neg(s)), s));
  EXPECT_EQ(typecheck_mu({}, {}, mk_combinator("Abort", {s})), MuType::arrow(MuType::bottom(), s));
  EXPECT_EQ(typecheck_mu({}, {}, mk_combinator("L-alpha", {s})), MuType::arrow(l_type(s), s));
  EXPECT_EQ(typecheck_mu({}, {}, mk_combinator("L-mu", {s})), MuType::arrow(l_type(l_type(s)), l_type(s)));
  EXPECT_EQ(typecheck_mu({}, {}, mk_combinator("exotic-numeral", {})), nat_type());
}

TEST(Encodings, WeakInitialityOfFold) {
  TypeScheme F{"X", MuType::arrow(s, X)};
  MuType muf = mu_type(F);
  Context g{{"a", MuType::arrow(F.at(t), t)}, {"y", F.at(muf)}};
  MuTerm fold = app(mk_combinator("fold", {F.body, t}), V("a"));
  MuTerm lhs = app(fold, app(mk_combinator("in", {F.body}), V("y")));
  MuTerm rhs = app(V("a"), app(functorial_action(F, fold, muf, t), V("y")));
  EXPECT_TRUE(eq_mu(g, {}, lhs, rhs, Theory::BetaEta).equal);
}

TEST(Encodings, PhiRecoversItsComponents) {
  Context g{{"a0", s}, {"f", MuType::arrow(s, s)}};
  MuTerm phi = mk_combinator("phi", {s}, {V("a0"), V("f")});
  EXPECT_TRUE(eq_mu(g, {}, mk_combinator("g_o", {s}, {phi}), V("a0"), Theory::LambdaMu2P).equal);
  EXPECT_TRUE(eq_mu(g, {}, mk_combinator("g_s", {s}, {phi}), V("f"), Theory::LambdaMu2P).equal);
}

TEST(Encodings, ExoticNumeral) {
  MuTerm e = mk_combinator("exotic-numeral", {});
  for (unsigned n = 0; n < 4; ++n) EXPECT_FALSE(eq_mu({}, {}, e, church(n), Theory::LambdaMu2P).equal) << n;
}

TEST(Encodings, SharpThenFlat) {
  Context g{{"g", MuType::arrow(s, t)}};
  MuTerm round = mk_combinator("flat", {s}, {mk_combinator("sharp", {s, t}, {V("g")})});
  EXPECT_TRUE(eq_mu(g, {}, round, V("g"), Theory::LambdaMu2P).equal);
}

TEST(Encodings, LMapIsAFunctor) {
  Context g{{"f", MuType::arrow(s, t)}, {"h", MuType::arrow(t, s)}};
  MuTerm lid = mk_combinator("L-map", {s, s}, {MuTerm::lam("y", s, V("y"))});
  EXPECT_TRUE(eq_mu({}, {}, lid, MuTerm::lam("z", l_type(s), V("z")), Theory::BetaEta).equal);
  MuTerm comp = mk_combinator("L-map", {s, s}, {MuTerm::lam("y", s, app(V("h"), app(V("f"), V("y"))))});
  MuTerm seq = MuTerm::lam("z", l_type(s), app(mk_combinator("L-map", {t, s}, {V("h")}),
                                               app(mk_combinator("L-map", {s, t}, {V("f")}), V("z"))));
  EXPECT_TRUE(eq_mu(g, {}, comp, seq, Theory::BetaEta).equal);
}

TEST(Encodings, CatalogIsWellTyped) {
  EXPECT_GE(catalog().size(), 20u);
  for (const auto& e : catalog()) {
    auto ty = oracle::type_of(e.gamma, e.delta, e.term);
    ASSERT_TRUE(ty.has_value()) << e.name;
    EXPECT_EQ(oracle::db(*ty), oracle::db(e.type)) << e.name;
    EXPECT_FALSE(e.topic.empty());
  }
}
