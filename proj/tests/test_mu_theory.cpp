#include <gtest/gtest.h>

#include "mu2forge/encodings.hpp"
#include "mu2forge/mu_theory.hpp"
#include "mu2forge/syntax.hpp"
#include "oracle.hpp"

using namespace mu2forge;

namespace {

MuType s = MuType::var("s"), t = MuType::var("t"), r = MuType::var("r");
MuTerm V(const char* n) { return MuTerm::var(n); }
MuTerm app(MuTerm f, MuTerm a) { return MuTerm::app(std::move(f), std::move(a)); }

bool eq(const Context& g, const Context& d, const MuTerm& a, const MuTerm& b, Theory th) {
  return eq_mu(g, d, a, b, th).equal;
}

}  // namespace

TEST(MuTheory, CoreAxiomsHoldUnderBetaEta) {
  auto eqs = core_axiom_instances();
  EXPECT_EQ(eqs.size(), 8u);
  for (const auto& e : eqs) EXPECT_TRUE(eq(e.gamma, e.delta, e.lhs, e.rhs, Theory::BetaEta)) << e.label;
}

TEST(MuTheory, HandBuiltBetaEta) {
  Context g{{"f", MuType::arrow(s, t)}, {"n", s}};
  // (λx.f x) n = f n
  EXPECT_TRUE(eq(g, {}, app(MuTerm::lam("x", s, app(V("f"), V("x"))), V("n")), app(V("f"), V("n")),
                 Theory::BetaEta));
  // λx.f x = f
  EXPECT_TRUE(eq(g, {}, MuTerm::lam("x", s, app(V("f"), V("x"))), V("f"), Theory::BetaEta));
  // (ΛX.λx:X.x) [s] n = n
  MuTerm id = MuTerm::tylam("X", MuTerm::lam("x", MuType::var("X"), V("x")));
  EXPECT_TRUE(eq(g, {}, app(MuTerm::tyapp(id, s), V("n")), V("n"), Theory::BetaEta));
}

TEST(MuTheory, HandBuiltMuAxioms) {
  Context g{{"f", MuType::arrow(s, t)}, {"n", s}, {"x", r}};
  Context d{{"c", r}};
  // μ-η: μa.[a] f = f
  EXPECT_TRUE(eq(g, d, MuTerm::mu("a", MuType::arrow(s, t), "a", V("f")), V("f"), Theory::BetaEta));
  // μ-β: (μa^{s→t}.[c] x) n = μb^t.[c] x
  EXPECT_TRUE(eq(g, d, app(MuTerm::mu("a", MuType::arrow(s, t), "c", V("x")), V("n")),
                 MuTerm::mu("b", t, "c", V("x")), Theory::BetaEta));
  // [c] μa.[c] x = [c] x, seen through a surrounding μ
  EXPECT_TRUE(eq(g, d, MuTerm::mu("e", t, "c", MuTerm::mu("a", r, "c", V("x"))), MuTerm::mu("e", t, "c", V("x")),
                 Theory::BetaEta));
}

TEST(MuTheory, DoubleNegationElimination) {
  // C (λk. k M) = M
  Context g{{"m", s}};
  MuTerm lhs = app(mk_combinator("C", {s}), MuTerm::lam("k", MuType::neg(s), app(V("k"), V("m"))));
  EXPECT_TRUE(eq(g, {}, lhs, V("m"), Theory::LambdaMu2P));
  EXPECT_TRUE(eq(g, {}, lhs, parse_mu_term("C[s] (\\k. k m)", g), Theory::BetaEta));
}

TEST(MuTheory, AdditionalAxiomsSeparateTheTheories) {
  AdditionalAxiomReport rep = check_additional_axioms();
  EXPECT_EQ(rep.checks.size(), 9u);
  for (const auto& c : rep.checks) {
    EXPECT_TRUE(c.equal_p) << c.equation.label;
    EXPECT_FALSE(c.equal_beta_eta) << c.equation.label;
  }
  for (const auto& l : rep.links) EXPECT_TRUE(l.holds) << l.axiom << ": " << l.from << " -> " << l.to;
  EXPECT_TRUE(rep.ok());
}

TEST(MuTheory, NamedTermEquationsNeedP) {
  auto eqs = named_term_equations();
  EXPECT_EQ(eqs.size(), 4u);
  for (const auto& e : eqs) EXPECT_TRUE(eq(e.gamma, e.delta, e.lhs, e.rhs, Theory::LambdaMu2P)) << e.label;
}

TEST(MuTheory, DiscardingAnInstantiation) {
  // x ⊥ = x for x : ⊥ holds in λμ2^P only.
  Context g{{"x", MuType::bottom()}};
  MuTerm lhs = MuTerm::tyapp(V("x"), MuType::bottom());
  EXPECT_TRUE(eq(g, {}, lhs, V("x"), Theory::LambdaMu2P));
  EXPECT_FALSE(eq(g, {}, lhs, V("x"), Theory::BetaEta));
}

TEST(MuTheory, DistinctTerms) {
  Context g{{"x", s}, {"y", s}};
  EXPECT_FALSE(eq(g, {}, V("x"), V("y"), Theory::LambdaMu2P));
  EXPECT_FALSE(eq({}, {}, church(1), church(2), Theory::LambdaMu2P));
}

TEST(MuTheory, IllTypedSidesAreErrors) {
  Context g{{"x", s}, {"y", t}};
  EXPECT_THROW(eq_mu(g, {}, V("x"), V("y"), Theory::BetaEta), KernelError);
}

TEST(MuTheory, GeneratorIsDeterministicAndTyped) {
  Context g{{"f", MuType::arrow(s, t)}, {"n", s}};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    MuTerm a = gen_typed_term(seed, 10, g, {}, t);
    EXPECT_EQ(a, gen_typed_term(seed, 10, g, {}, t));
    auto ty = oracle::type_of(g, {}, a);
    ASSERT_TRUE(ty.has_value());
    EXPECT_EQ(*ty, t);
    EXPECT_LE(term_size(a), 10u);
  }
}

TEST(MuTheory, GeneratorGivesUp) {
  try {
    gen_typed_term(0, 8, {}, {}, s, 5000);
    FAIL() << "s is uninhabited";
  } catch (const KernelError& e) {
    EXPECT_EQ(e.code(), Errc::GaveUp);
  }
  EXPECT_THROW(gen_typed_term(0, 0, {}, {}, MuType::arrow(s, s)), KernelError);
}

TEST(MuTheory, GeneratorFindsClassicalProofs) {
  // ¬¬s → s needs a μ.
  MuTerm m = gen_typed_term(1, 12, {}, {}, MuType::arrow(MuType::neg(MuType::neg(s)), s));
  EXPECT_TRUE(oracle::type_of({}, {}, m).has_value());
}
