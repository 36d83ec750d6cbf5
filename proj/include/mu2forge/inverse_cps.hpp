#ifndef MU2FORGE_INVERSE_CPS_HPP
#define MU2FORGE_INVERSE_CPS_HPP

// Inverse of the CPS translation on Program/Continuation/Answer forms.
// Continuations come back as one-hole contexts whose hole is filled without
// renaming, so binders around the hole may capture the plugged term.

#include <optional>

#include "mu2forge/cps.hpp"
#include "mu2forge/normalizer.hpp"

namespace mu2forge {

/// The inverse of (−)°; throws NotInImageType outside the image.
MuType inverse_type(const TargetType& t);

/// Splits a target context into Γ (entries of type ¬σ°) and Δ (entries of
/// type σ°).
std::pair<Context, Context> inverse_context(const TargetContext& ctx);

/// A λμ2 term of type ⊥ with one hole of type `hole_type`.
struct MuHoleContext {
  MuTerm body;
  MuType hole_type;
};

/// Reserved identifier marking the hole.
inline constexpr const char* kHole = "%hole";

MuTerm fill(const MuHoleContext& c, const MuTerm& plug);

struct Inverted {
  CanonicalForm::Kind kind;
  /// Program: P⁻¹ : σ. Answer: A⁻¹ : ⊥. Continuation: the context body.
  MuTerm term;
  /// Continuations only.
  std::optional<MuType> hole_type;
};

/// Throws NotCanonical if the form leaves the grammar.
Inverted invert(const TargetContext& ctx, const CanonicalForm& form, Mode mode = Mode::Plain);

/// eq_target([[P⁻¹]], P, mode) for a Program P.
EqVerdict roundtrip(const TargetContext& ctx, const CanonicalForm& program, Mode mode = Mode::Plain);

}  // namespace mu2forge

#endif  // MU2FORGE_INVERSE_CPS_HPP
