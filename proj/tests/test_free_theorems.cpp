#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mu2forge/acceptance.hpp"
#include "mu2forge/encodings.hpp"
#include "mu2forge/free_theorems.hpp"
#include "mu2forge/syntax.hpp"

using namespace mu2forge;

namespace {

MuType s = MuType::var("s"), t = MuType::var("t");

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(FreeTheorems, Goldens) {
  for (const auto& g : free_theorem_goldens()) {
    std::string want = slurp(std::filesystem::path(default_golden_dir()) / g.file);
    ASSERT_FALSE(want.empty()) << g.file;
    EXPECT_EQ(to_string(free_theorem(g.type, g.params)) + "\n", want) << g.file;
  }
}

TEST(FreeTheorems, BottomByHand) {
  EXPECT_EQ(to_string(free_theorem(MuType::bottom())),
            "∀x:⊥. ∀X1. ∀X2. ∀ focal r1 : X1 ↔ X2. r1(x [X1], x [X2])");
}

TEST(FreeTheorems, OpenTypesNeedParameters) {
  try {
    free_theorem(s);
    FAIL();
  } catch (const KernelError& e) {
    EXPECT_EQ(e.code(), Errc::OpenType);
  }
  EXPECT_EQ(to_string(free_theorem(s, {"s"})), "∀x:s. x = x");
}

TEST(FreeTheorems, TargetClauses) {
  EXPECT_EQ(to_string(target_free_theorem(parse_target_type("not s"), {"s"})),
            "∀x:¬s. ∀x1:s. ∀y1:s. x1 = y1 ⇒ x x1 = x y1");
  EXPECT_EQ(to_string(target_free_theorem(TargetType::top())),
            "∀x:(∃X. X). ∃X1. ∃X2. ∃ admissible r1 : X1 ↔ X2. ∃x1:X1. ∃y1:X2. "
            "x = ⟨X1 | x1⟩ ∧ x = ⟨X2 | y1⟩ ∧ r1(x1, y1)");
}

TEST(FreeTheorems, NegatedRelationUnfolds) {
  Relation r{RelRef::var("r"), FType{TargetType::var("A")}, FType{TargetType::var("B")}};
  RelFormula f = holds(neg_relation(r).ref, FTerm{TargetTerm::var("f")}, FTerm{TargetTerm::var("g")});
  EXPECT_EQ(to_string(f), "∀x1:A. ∀y1:B. r(x1, y1) ⇒ f x1 = g y1");
}

TEST(FreeTheorems, UnboundRelationVariable) {
  try {
    target_relation(TargetType::var("X"), {});
    FAIL();
  } catch (const KernelError& e) {
    EXPECT_EQ(e.code(), Errc::UnboundRelVar);
  }
}

TEST(FreeTheorems, JsonExportIsATree) {
  auto j = nlohmann::json::parse(to_json(free_theorem(MuType::bottom())));
  EXPECT_EQ(j["tag"], "forall_term");
  EXPECT_EQ(j["var"], "x");
  EXPECT_EQ(j["body"]["tag"], "forall_type");
  const auto& rel = j["body"]["body"]["body"];
  EXPECT_EQ(rel["tag"], "forall_rel");
  EXPECT_EQ(rel["kind"], "focal");
}

TEST(FreeTheorems, InstanceAtAbortIsConfirmed) {
  MuTerm abort = mk_combinator("Abort", {s});
  GraphInstance inst = instantiate_graph(free_theorem(MuType::bottom()), graph_map({}, {}, abort));
  ASSERT_EQ(inst.equations.size(), 1u);
  const GraphEquation& eq = inst.equations[0];
  EXPECT_EQ(eq.lhs, MuTerm::app(abort, MuTerm::tyapp(MuTerm::var("x"), MuType::bottom())));
  EXPECT_EQ(eq.rhs, MuTerm::tyapp(MuTerm::var("x"), s));
  EXPECT_EQ(discharge(eq).status, Discharge::Confirmed);
  // Under βη the same equation is not provable.
  EXPECT_EQ(discharge(eq, Theory::BetaEta).status, Discharge::Open);
}

TEST(FreeTheorems, UncertifiedMapIsRejected) {
  GraphMap h = graph_map({{"h", MuType::arrow(s, t)}}, {}, MuTerm::var("h"));
  EXPECT_FALSE(h.certificate.has_value());
  try {
    instantiate_graph(free_theorem(MuType::bottom()), h);
    FAIL();
  } catch (const KernelError& e) {
    EXPECT_EQ(e.code(), Errc::NotFocal);
  }
}

TEST(FreeTheorems, InstanceWithPremisesStaysOpen) {
  // ∀X.X→X at the graph of λx.x N: the conclusion depends on r(x1, y1).
  MuType top = MuType::forall("X", MuType::arrow(MuType::var("X"), MuType::var("X")));
  Context g{{"n", s}};
  MuTerm f = MuTerm::lam("x", MuType::arrow(s, t), MuTerm::app(MuTerm::var("x"), MuTerm::var("n")));
  GraphInstance inst = instantiate_graph(free_theorem(top), graph_map(g, {}, f));
  ASSERT_FALSE(inst.equations.empty());
  for (const auto& eq : inst.equations) {
    EXPECT_FALSE(eq.premises.empty());
    EXPECT_EQ(discharge(eq).status, Discharge::Open);
  }
}

TEST(FreeTheorems, ObligationsAreStatedNotDecided) {
  auto obs = obligations();
  EXPECT_EQ(obs.size(), 7u);
  for (const auto& o : obs) {
    EXPECT_FALSE(o.tag.empty());
    EXPECT_FALSE(o.claim.empty());
    EXPECT_FALSE(to_string(o.statement).empty());
  }
}
