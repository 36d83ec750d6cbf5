#ifndef MU2FORGE_CPS_HPP
#define MU2FORGE_CPS_HPP

// Call-by-name CPS translation of λμ2 into the target calculus:
//   X° = X, (σ₁→σ₂)° = ¬σ₁°∧σ₂°, (∀X.σ)° = ∃X.σ°,
// with variables x:σ becoming x:¬σ° and names α:σ becoming α:σ°.

#include <string>

#include "mu2forge/mu_kernel.hpp"
#include "mu2forge/target_kernel.hpp"

namespace mu2forge {

TargetType cps_type(const MuType& t);

/// ¬Γ°, Δ°. Throws NameClash if a variable and a name share an identifier.
TargetContext cps_context(const Context& gamma, const Context& delta);

/// [[M]]. Variables and names keep their identifiers; the binders the
/// translation introduces avoid every identifier of the input. Throws the
/// type checker's error if the judgement is not derivable.
TargetTerm cps_term(const Context& gamma, const Context& delta, const MuTerm& m);
TargetTerm cps_term(const MuJudgement& j);

struct SoundnessReport {
  MuJudgement source;
  TargetContext context;
  TargetTerm image;
  TargetType type;  // ¬σ°, confirmed by typecheck_target
};

/// Confirms ¬Γ°,Δ° ⊢ [[M]] : ¬σ°; throws SoundnessViolation otherwise.
SoundnessReport check_type_soundness(const MuJudgement& j);

struct LemmaReport {
  std::string lemma;
  std::string lhs, rhs;  // printed sides
  bool identical = false;
};

/// (σ[τ/X])° ≡ σ°[τ°/X]
LemmaReport check_type_subst_lemma(const MuType& sigma, const std::string& x, const MuType& tau);
/// [[M[N/x]]] ≡ [[M]][[[N]]/x]; x must be the last entry of `gamma` bound for M.
LemmaReport check_term_subst_lemma(const Context& gamma, const Context& delta, const MuTerm& m, const std::string& x,
                                   const MuTerm& n);
/// [[M[σ/X]]] ≡ [[M]][σ°/X]
LemmaReport check_type_in_term_lemma(const Context& gamma, const Context& delta, const MuTerm& m,
                                     const std::string& x, const MuType& sigma);

}  // namespace mu2forge

#endif  // MU2FORGE_CPS_HPP
