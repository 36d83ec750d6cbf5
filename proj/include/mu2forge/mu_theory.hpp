#ifndef MU2FORGE_MU_THEORY_HPP
#define MU2FORGE_MU_THEORY_HPP

// Equality of λμ2 terms, decided by translating both sides and comparing
// canonical forms in the target calculus. The plain target theory gives the
// βη theory of λμ2; the parametric one (with ∃X.X terminal) gives λμ2^P.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mu2forge/cps.hpp"
#include "mu2forge/normalizer.hpp"

namespace mu2forge {

enum class Theory { BetaEta, LambdaMu2P };

std::string_view theory_name(Theory t);
Mode mode_of(Theory t);

/// Throws TypeMismatch if the sides have different types, and the type
/// checker's error if either side is ill-typed in (gamma, delta).
EqVerdict eq_mu(const Context& gamma, const Context& delta, const MuTerm& lhs, const MuTerm& rhs, Theory theory);

/// A closed-over equation: both sides typed in (gamma, delta).
struct MuEquation {
  std::string label;
  Context gamma, delta;
  MuTerm lhs, rhs;
};

/// The eight axiom schemas of λμ2 instantiated with fresh constants.
std::vector<MuEquation> core_axiom_instances();

/// The four equations on named terms and 𝛍-abstractions that hold in λμ2^P.
std::vector<MuEquation> named_term_equations();

/// Presentation `p` (1..3) of additional axiom `a` (1..3), instantiated with
/// fresh constants. Presentation 1 is discardability of an instantiation map,
/// 2 the equation on an arbitrary M:⊥, 3 the 𝛍-structural equation.
MuEquation additional_axiom(int axiom, int presentation);

struct AdditionalAxiomCheck {
  int axiom = 0, presentation = 0;
  MuEquation equation;
  bool equal_p = false;         // verdict under λμ2^P
  bool equal_beta_eta = false;  // verdict under βη
};

/// One step of an equational chain. Without `axiom` the step is βη; with
/// it, the previous term and `term` are `around` with the two sides of the
/// axiom instance (in either order) plugged into its hole.
struct ChainStep {
  MuTerm term;
  std::optional<MuEquation> axiom;
  std::optional<MuTerm> around;
};

/// Derivation of presentation `to` from presentation `from` at an instance:
/// each chain connects one side of the transported `from` equation with the
/// matching side of the `to` equation.
struct DerivationLink {
  int axiom = 0, from = 0, to = 0;
  Context gamma, delta;
  std::vector<ChainStep> lhs_chain, rhs_chain;
  bool holds = false;
};

struct AdditionalAxiomReport {
  std::vector<AdditionalAxiomCheck> checks;
  std::vector<DerivationLink> links;
  /// Every presentation Equal under λμ2^P, Distinct under βη, and every link holds.
  bool ok() const;
};

AdditionalAxiomReport check_additional_axioms();

/// Deterministic, type-directed search for a term of type `goal` with at
/// most `budget` nodes, giving up after `search_limit` search steps.
/// Throws GaveUp if none is found.
MuTerm gen_typed_term(std::uint64_t seed, std::size_t budget, const Context& gamma, const Context& delta,
                      const MuType& goal, std::size_t search_limit = 200000);

}  // namespace mu2forge

#endif  // MU2FORGE_MU_THEORY_HPP
