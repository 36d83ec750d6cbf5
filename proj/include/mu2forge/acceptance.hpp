#ifndef MU2FORGE_ACCEPTANCE_HPP
#define MU2FORGE_ACCEPTANCE_HPP

// The acceptance corpus: thirteen criteria, each reported as one line.
// Shared by the acceptance test binary and `mu2forge suite`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mu2forge/free_theorems.hpp"

namespace mu2forge {

struct AcceptanceConfig {
  std::uint64_t seed = 20240601;
  std::size_t generated = 1000;        // judgements for type soundness
  std::size_t lemma_instances = 200;   // per substitution lemma
  std::string golden_dir;              // empty: default_golden_dir()
  double time_limit_seconds = 10.0;    // per criterion
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  std::vector<std::string> failures;
  double seconds = 0;
};

/// MU2FORGE_GOLDEN if set, else the source tree's tests/golden.
std::string default_golden_dir();

/// `only` restricts to the listed criterion ids.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config, const std::vector<int>& only = {});
CriterionResult run_criterion(int id, const AcceptanceConfig& config);

/// "criterion  1 PASS  type soundness: ... (0.41 s)"
std::string format_line(const CriterionResult& r);

struct GoldenCase {
  std::string file;
  MuType type;
  std::vector<std::string> params;
};

/// The frozen free theorems: ⊥, ∀X.X→X, N and ∀X.(s→X)→X.
std::vector<GoldenCase> free_theorem_goldens();

/// Random λμ2 types over the atoms s, t and the given type variables.
MuType sample_type(std::mt19937_64& rng, int depth, const std::vector<std::string>& tvars = {});

/// Seeded, typed judgements from gen_typed_term over random contexts and
/// goals; seeds for which the generator gives up are skipped.
std::vector<MuJudgement> sample_judgements(std::uint64_t seed, std::size_t count);

}  // namespace mu2forge

#endif  // MU2FORGE_ACCEPTANCE_HPP
