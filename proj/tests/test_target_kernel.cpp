#include <gtest/gtest.h>

#include "mu2forge/acceptance.hpp"
#include "mu2forge/cps.hpp"
#include "mu2forge/target_kernel.hpp"
#include "oracle.hpp"

using namespace mu2forge;

namespace {

TargetType S = TargetType::var("s"), T = TargetType::var("t"), X = TargetType::var("X");
TargetType neg(TargetType a) { return TargetType::neg(std::move(a)); }
TargetTerm V(const char* n) { return TargetTerm::var(n); }

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

TEST(TargetKernel, LambdaHasNegatedType) {
  TargetContext c{{"f", neg(S)}};
  EXPECT_EQ(typecheck_target(c, TargetTerm::lam("x", S, TargetTerm::app(V("f"), V("x"))), Mode::Plain), neg(S));
}

TEST(TargetKernel, PairsAndLets) {
  TargetContext c{{"x", S}, {"y", T}, {"g", neg(TargetType::conj(T, S))}};
  TargetTerm swap = TargetTerm::let_pair("a", "b", TargetTerm::pair(V("x"), V("y")),
                                         TargetTerm::app(V("g"), TargetTerm::pair(V("b"), V("a"))));
  EXPECT_EQ(typecheck_target(c, swap, Mode::Plain), TargetType::answer());
}

TEST(TargetKernel, PackAndUnpack) {
  TargetType ex = TargetType::exists("X", TargetType::conj(neg(X), X));
  TargetContext c{{"k", neg(S)}, {"x", S}, {"h", neg(ex)}};
  TargetTerm p = TargetTerm::pack(S, TargetTerm::pair(V("k"), V("x")), ex);
  EXPECT_EQ(typecheck_target(c, p, Mode::Plain), ex);
  TargetTerm open = TargetTerm::lam(
      "z", ex, TargetTerm::let_pack("Y", "w", V("z"), TargetTerm::let_pair("m", "n", V("w"), TargetTerm::app(V("m"), V("n")))));
  EXPECT_EQ(typecheck_target(c, open, Mode::Plain), neg(ex));
}

TEST(TargetKernel, StarOnlyInParametricMode) {
  EXPECT_EQ(code_of([] { typecheck_target({}, TargetTerm::star(), Mode::Plain); }), Errc::StarInPlainMode);
  EXPECT_TRUE(typecheck_target({}, TargetTerm::star(), Mode::Parametric).is_top());
}

TEST(TargetKernel, Errors) {
  EXPECT_EQ(code_of([] { typecheck_target({}, V("x"), Mode::Plain); }), Errc::UnboundVariable);
  EXPECT_EQ(code_of([] { typecheck_target({{"f", neg(S)}}, TargetTerm::lam("x", S, V("f")), Mode::Plain); }),
            Errc::NonAnswerBody);
  EXPECT_EQ(code_of([] {
              typecheck_target({{"f", neg(S)}, {"x", T}}, TargetTerm::app(V("f"), V("x")), Mode::Plain);
            }),
            Errc::TypeMismatch);
  // let ⟨X, x⟩ = z in x : the witness escapes through the body's type.
  TargetType ex = TargetType::exists("X", X);
  TargetTerm esc = TargetTerm::let_pack("X", "x", V("z"), TargetTerm::app(V("k"), V("x")));
  EXPECT_EQ(code_of([&] { typecheck_target({{"z", ex}, {"k", neg(X)}}, esc, Mode::Plain); }),
            Errc::EscapeCheckFailed);
}

TEST(TargetKernel, TopIsExistsXX) {
  EXPECT_EQ(TargetType::top(), TargetType::exists("Y", TargetType::var("Y")));
}

TEST(TargetKernel, SubstitutionAvoidsCapture) {
  TargetTerm m = TargetTerm::lam("y", S, TargetTerm::app(V("x"), V("y")));
  TargetTerm got = target_subst(m, "x", V("y"));
  EXPECT_EQ(oracle::db(got), "(L s (y #0))");
  TargetTerm q = TargetTerm::pack(X, V("k"), TargetType::exists("Y", TargetType::conj(X, TargetType::var("Y"))));
  TargetTerm r = target_subst_type(q, "X", TargetType::var("Y"));
  EXPECT_EQ(oracle::db(r), "<Y | k : (E (Y & #0))>");
}

TEST(TargetKernel, AlphaEquivalenceAgreesWithDeBruijnOnImages) {
  auto js = sample_judgements(41, 150);
  std::vector<TargetTerm> images;
  for (const auto& j : js) images.push_back(cps_term(j));
  for (std::size_t i = 0; i + 1 < images.size(); ++i) {
    EXPECT_EQ(images[i] == images[i + 1], oracle::alpha_eq(images[i], images[i + 1]));
    EXPECT_TRUE(images[i] == oracle::cps(js[i].gamma, js[i].delta, js[i].subject));
  }
}

TEST(TargetKernel, Printing) {
  TargetTerm p = TargetTerm::pack(S, V("k"), TargetType::exists("X", X));
  EXPECT_EQ(to_string(p), "<s | k as exists X. X>");
  EXPECT_EQ(to_string(p, PrintStyle::Unicode), "⟨s | k⟩");
  EXPECT_EQ(to_string(TargetType::conj(neg(S), T)), "not s /\\ t");
}
