#ifndef MU2FORGE_FOCALITY_HPP
#define MU2FORGE_FOCALITY_HPP

// Focal maps: algebra morphisms for the double-negation monad. A map
// f : σ₁ → σ₂ is certified when the canonical form of [[f x]] factors as
// λk. x g with x not free in g; g is the continuation transformer.
//
// A missing certificate is inconclusive, not a disproof.

#include <optional>
#include <string>

#include "mu2forge/mu_theory.hpp"

namespace mu2forge {

struct FocalityCertificate {
  Context gamma, delta;
  MuTerm subject;
  MuType dom, cod;
  Theory theory = Theory::LambdaMu2P;
  /// x : ¬dom° and k : cod°, fresh for the subject and its contexts.
  std::string arg, cont;
  /// cont : cod° ⊢ transformer : dom° (plus the translated contexts).
  TargetTerm transformer;
  /// Canonical form of [[f x]] the transformer was read off.
  CanonicalForm evidence;
};

struct FocalCheck {
  std::optional<FocalityCertificate> certificate;
  /// Why extraction failed; empty when certified.
  std::string reason;
  explicit operator bool() const { return certificate.has_value(); }
};

/// Throws the type checker's error if f is ill-typed, IllTyped if it is not
/// a map.
FocalCheck check_focal(const Context& gamma, const Context& delta, const MuTerm& f,
                       Theory theory = Theory::LambdaMu2P);

/// Re-derives the factorization: the transformer typechecks at dom° and
/// λk. x g equals [[f x]]. Returns an empty string on success.
std::string validate_certificate(const FocalityCertificate& cert);

/// f ∘ A_σ₁ = A_σ₂
EqVerdict check_discardable(const Context& gamma, const Context& delta, const MuTerm& f,
                            Theory theory = Theory::LambdaMu2P);

/// P_σ₂,σ₃ ∘ ((f → σ₃) → f) = f ∘ P_σ₁,σ₃ with σ₃ a fresh type variable.
EqVerdict check_repeatable(const Context& gamma, const Context& delta, const MuTerm& f,
                           Theory theory = Theory::LambdaMu2P);

/// f (𝛍α.k (λx.[α]x)) = 𝛍β.k (λx.[β](f x)) for a free k : ¬¬σ₁, the defining
/// square of focality.
EqVerdict check_algebra_square(const Context& gamma, const Context& delta, const MuTerm& f,
                               Theory theory = Theory::LambdaMu2P);

/// f (M σ₁ (λx.x)) = M σ₂ f for a free M : L σ₁.
EqVerdict check_linear(const Context& gamma, const Context& delta, const MuTerm& f,
                       Theory theory = Theory::LambdaMu2P);

enum class Square { C, Peirce, Fold };

/// The naturality square of `square` instantiated at a certified map h:
///   C:      the algebra square above;
///   Peirce: the repeatability square;
///   Fold:   for the constant scheme F[X] = r and a : r → σ₁, with the
///           premise h ∘ a = b ∘ F[h] made true by b := h ∘ a, the
///           conclusion h ∘ fold a = fold b at the instance in y.
EqVerdict check_naturality_square(const FocalityCertificate& h, Square square);

/// λx. h (f x) with the transformer g_f[g_h/k], validated against direct
/// extraction. Throws NotFocal if the composite transformer disagrees.
FocalityCertificate compose(const FocalityCertificate& f, const FocalityCertificate& h);

}  // namespace mu2forge

#endif  // MU2FORGE_FOCALITY_HPP
