#ifndef MU2FORGE_NORMALIZER_HPP
#define MU2FORGE_NORMALIZER_HPP

// Normal forms and equality for the target calculus.
//
// canonicalize works in four phases, each logged as rewrite steps:
//   1. normal-order beta (and, in parametric mode, collapse of every maximal
//      subterm of type ∃X.X to ⋆);
//   2. at a negated type, eta-expansion of the root to a lambda;
//   3. every binder of conjunctive or existential type is opened with a
//      let at the start of its scope, followed by beta again;
//   4. bottom-up contraction of decompositions that only rebuild their
//      scrutinee, and of lambdas of the form λz.f z.
// The result lies in the Program/Continuation/Answer grammar.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mu2forge/target_kernel.hpp"

namespace mu2forge {

using Path = std::vector<int>;

/// One logged rewrite: an axiom instance applied to the subterm at `path`.
/// `args` carries the binder names an expansion introduces or consumes.
struct RewriteStep {
  std::string axiom;
  Path path;
  std::vector<std::string> args;
};

using Trace = std::vector<RewriteStep>;

/// "axiom path arg..." with the path as dot-separated child indices, "-" at
/// the root.
std::string format_step(const RewriteStep& step);
RewriteStep parse_step(std::string_view line);
std::string format_trace(const Trace& trace);
Trace parse_trace(std::string_view text);

TargetTerm subterm_at(const TargetTerm& t, const Path& path);
TargetTerm replace_at(const TargetTerm& t, const Path& path, const TargetTerm& replacement);
/// Typing context in force at `path` inside `t`.
TargetContext context_at(const TargetContext& ctx, const TargetTerm& t, const Path& path, Mode mode);

/// Normal-order beta normal form. In parametric mode ⋆-unpacking counts as a
/// beta step; ∃X.X-collapse is not performed here.
TargetTerm beta_normalize(const TargetTerm& term, Mode mode = Mode::Plain, Trace* trace = nullptr);

/// True for types of the form σ° (the image of the type translation).
bool is_image_type(const TargetType& t);

struct CanonicalForm {
  enum class Kind { Program, Continuation, Answer };
  Kind kind;
  TargetTerm term;
  TargetType type;
  /// Steps from the input term to `term`.
  Trace trace;
};

std::string_view kind_name(CanonicalForm::Kind k);

/// Checks grammar membership only; throws NotCanonical otherwise.
CanonicalForm::Kind classify(const TargetTerm& term, const TargetType& type, Mode mode);

/// Throws NotInImageType unless `type` is R, σ° or ¬σ°, and TypeMismatch if
/// `term` does not have that type.
CanonicalForm canonicalize(const TargetContext& ctx, const TargetTerm& term, const TargetType& type, Mode mode);

struct EqVerdict {
  bool equal = false;
  /// Equal: both sides are the shared form. Distinct: the two forms.
  std::optional<CanonicalForm> left, right;
  explicit operator bool() const { return equal; }
};

EqVerdict eq_target(const TargetContext& ctx, const TargetTerm& lhs, const TargetTerm& rhs, Mode mode);

/// Re-executes `trace` from `start`, checking every step against its axiom
/// schema. Throws TraceInvalid on the first bad step.
TargetTerm replay(const TargetContext& ctx, const TargetTerm& start, const Trace& trace, Mode mode);

/// Replays both sides of an Equal verdict and confirms they meet. Returns an
/// empty string on success, otherwise a description of the failure.
std::string validate_verdict(const TargetContext& ctx, const TargetTerm& lhs, const TargetTerm& rhs,
                             const EqVerdict& verdict, Mode mode);

}  // namespace mu2forge

#endif  // MU2FORGE_NORMALIZER_HPP
