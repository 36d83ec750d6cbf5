#ifndef MU2FORGE_MU_KERNEL_HPP
#define MU2FORGE_MU_KERNEL_HPP

// Abstract syntax, scoping, typing and substitution for the second-order
// lambda-mu calculus. Terms carry two binder namespaces: variables (bound by
// lambda) and names (bound by mu). Types are those of System F.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mu2forge/common.hpp"

namespace mu2forge {

class MuType {
 public:
  enum class Kind : std::uint8_t { Var, Arrow, Forall };

  static MuType var(std::string name);
  static MuType arrow(MuType dom, MuType cod);
  static MuType forall(std::string binder, MuType body);
  /// The falsity type, ∀X.X.
  static MuType bottom();
  /// ¬σ, i.e. σ → ⊥.
  static MuType neg(MuType t);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_arrow() const { return kind() == Kind::Arrow; }
  bool is_forall() const { return kind() == Kind::Forall; }
  bool is_bottom() const;

  /// Identifier of a Var, or the binder of a Forall.
  const std::string& name() const { return node_->name; }
  MuType dom() const { return MuType(node_->a); }
  MuType cod() const { return MuType(node_->b); }
  MuType body() const { return MuType(node_->a); }

  /// Identity of the shared node; used only for fast paths.
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;
  };
  explicit MuType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// α-equivalence.
bool operator==(const MuType& lhs, const MuType& rhs);
inline bool operator!=(const MuType& lhs, const MuType& rhs) { return !(lhs == rhs); }

NameSet free_type_vars(const MuType& t);
MuType subst_type(const MuType& t, const std::string& var, const MuType& replacement);
MuType subst_types(const MuType& t, const std::map<std::string, MuType>& sub);

class MuTerm {
 public:
  enum class Kind : std::uint8_t { Var, Lam, App, TyLam, TyApp, Mu };

  static MuTerm var(std::string name);
  static MuTerm lam(std::string binder, MuType annotation, MuTerm body);
  static MuTerm app(MuTerm fn, MuTerm arg);
  static MuTerm tylam(std::string binder, MuTerm body);
  static MuTerm tyapp(MuTerm fn, MuType arg);
  /// μα^σ.[β]M, the only name-introducing construct.
  static MuTerm mu(std::string binder, MuType annotation, std::string target, MuTerm body);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return kind() == k; }

  /// Var: identifier. Lam/TyLam/Mu: the bound variable, type variable or name.
  const std::string& name() const { return node_->name; }
  /// Mu: the name β that the body is passed to.
  const std::string& target() const { return node_->target; }
  /// Lam/Mu annotation, or the TyApp argument.
  MuType type() const { return *node_->type; }
  /// Lam/TyLam/Mu body, or App/TyApp function.
  MuTerm body() const { return MuTerm(node_->a); }
  MuTerm fn() const { return MuTerm(node_->a); }
  MuTerm arg() const { return MuTerm(node_->b); }

  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::string target;
    std::optional<MuType> type;
    std::shared_ptr<const Node> a, b;
  };
  explicit MuTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// α-equivalence in all three binder namespaces.
bool operator==(const MuTerm& lhs, const MuTerm& rhs);
inline bool operator!=(const MuTerm& lhs, const MuTerm& rhs) { return !(lhs == rhs); }

NameSet free_vars(const MuTerm& m);
NameSet free_names(const MuTerm& m);
NameSet free_type_vars(const MuTerm& m);
/// Every identifier appearing anywhere in the term, bound or free.
NameSet all_identifiers(const MuTerm& m);

// Sugar. Both desugar immediately into the core grammar.
/// [β]M ≡ μα^⊥.[β]M with α fresh.
MuTerm named(const std::string& target, const MuTerm& body);
/// 𝛍α^σ.M ≡ μα^σ.[α](M σ), for M : ⊥.
MuTerm bold_mu(const std::string& binder, const MuType& annotation, const MuTerm& body);

using Context = std::vector<std::pair<std::string, MuType>>;

struct MuJudgement {
  Context gamma;
  Context delta;
  MuTerm subject;
  MuType type;
};

/// Synthesizes the unique σ with Γ ⊢ M : σ | Δ. Later context entries shadow
/// earlier ones.
MuType typecheck_mu(const Context& gamma, const Context& delta, const MuTerm& term);
MuJudgement judge(const Context& gamma, const Context& delta, const MuTerm& term);

// Capture-avoiding substitutions.
MuTerm subst_term(const MuTerm& m, const std::string& var, const MuTerm& replacement);
MuTerm subst_type(const MuTerm& m, const std::string& var, const MuType& replacement);
MuTerm rename_name(const MuTerm& m, const std::string& from, const std::string& to);

/// What replaces a named subterm [α]L during mixed substitution.
struct MixedMode {
  enum class Kind : std::uint8_t { AppArg, TyArg, Rename };
  Kind kind;
  std::optional<MuTerm> term;
  std::optional<MuType> type;

  static MixedMode app_arg(MuTerm n) { return {Kind::AppArg, std::move(n), std::nullopt}; }
  static MixedMode ty_arg(MuType t) { return {Kind::TyArg, std::nullopt, std::move(t)}; }
  static MixedMode rename() { return {Kind::Rename, std::nullopt, std::nullopt}; }
};

/// M[[β](− N)/[α](−)] and friends: every [α]L becomes [β](L′ N), [β](L′ σ) or
/// [β]L′, where L′ has already been processed.
MuTerm mixed_subst(const MuTerm& m, const std::string& alpha, const MixedMode& mode, const std::string& beta);

std::string to_string(const MuType& t, PrintStyle style = PrintStyle::Ascii);
std::string to_string(const MuTerm& m, PrintStyle style = PrintStyle::Ascii);

std::size_t term_size(const MuTerm& m);

}  // namespace mu2forge

#endif  // MU2FORGE_MU_KERNEL_HPP
