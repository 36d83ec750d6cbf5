#ifndef MU2FORGE_TARGET_KERNEL_HPP
#define MU2FORGE_TARGET_KERNEL_HPP

// The {∃,∧,¬,R} continuation calculus: negation is the only arrow and every
// abstraction returns an answer of type R.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mu2forge/common.hpp"

namespace mu2forge {

class TargetType {
 public:
  enum class Kind : std::uint8_t { Var, Answer, Neg, Conj, Exists };

  static TargetType var(std::string name);
  static TargetType answer();
  static TargetType neg(TargetType t);
  static TargetType conj(TargetType l, TargetType r);
  static TargetType exists(std::string binder, TargetType body);
  /// ∃X.X, the type inhabited by ⋆ in parametric mode.
  static TargetType top();

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return kind() == k; }
  bool is_top() const;
  /// Conjunctions and existentials: the types whose variables get opened.
  bool is_positive() const { return is(Kind::Conj) || is(Kind::Exists); }

  const std::string& name() const { return node_->name; }
  /// Neg operand, Exists body, or left conjunct.
  TargetType body() const { return TargetType(node_->a); }
  TargetType left() const { return TargetType(node_->a); }
  TargetType right() const { return TargetType(node_->b); }

  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;
  };
  explicit TargetType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

bool operator==(const TargetType& lhs, const TargetType& rhs);
inline bool operator!=(const TargetType& lhs, const TargetType& rhs) { return !(lhs == rhs); }

NameSet free_type_vars(const TargetType& t);
TargetType subst_types(const TargetType& t, const std::map<std::string, TargetType>& sub);
TargetType subst_type(const TargetType& t, const std::string& var, const TargetType& replacement);

class TargetTerm {
 public:
  enum class Kind : std::uint8_t { Var, Lam, App, Pair, LetPair, Pack, LetPack, Star };

  static TargetTerm var(std::string name);
  static TargetTerm lam(std::string binder, TargetType annotation, TargetTerm body);
  static TargetTerm app(TargetTerm fn, TargetTerm arg);
  static TargetTerm pair(TargetTerm fst, TargetTerm snd);
  /// let ⟨x,y⟩ = M in N
  static TargetTerm let_pair(std::string x, std::string y, TargetTerm scrutinee, TargetTerm body);
  /// ⟨τ, M⟩ at the existential type `as`.
  static TargetTerm pack(TargetType witness, TargetTerm payload, TargetType as);
  /// let ⟨X,x⟩ = M in N
  static TargetTerm let_pack(std::string tvar, std::string x, TargetTerm scrutinee, TargetTerm body);
  static TargetTerm star();

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return kind() == k; }

  /// Var identifier; Lam binder; LetPair first binder; LetPack type binder.
  const std::string& name() const { return node_->name; }
  /// LetPair second binder; LetPack term binder.
  const std::string& name2() const { return node_->name2; }
  /// Lam annotation or Pack witness.
  TargetType type() const { return *node_->type; }
  /// Pack's existential type.
  TargetType pack_type() const { return *node_->type2; }

  std::size_t arity() const;
  TargetTerm child(std::size_t i) const { return TargetTerm(i == 0 ? node_->a : node_->b); }

  TargetTerm body() const;  // Lam/LetPair/LetPack body
  TargetTerm fn() const { return child(0); }
  TargetTerm arg() const { return child(1); }
  TargetTerm fst() const { return child(0); }
  TargetTerm snd() const { return child(1); }
  TargetTerm scrutinee() const { return child(0); }
  TargetTerm payload() const { return child(0); }

  /// Rebuilds this node with new children (same binders and annotations).
  TargetTerm with_children(const TargetTerm& c0, const std::optional<TargetTerm>& c1 = std::nullopt) const;

  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    std::string name, name2;
    std::optional<TargetType> type, type2;
    std::shared_ptr<const Node> a, b;
  };
  explicit TargetTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

bool operator==(const TargetTerm& lhs, const TargetTerm& rhs);
inline bool operator!=(const TargetTerm& lhs, const TargetTerm& rhs) { return !(lhs == rhs); }

NameSet free_vars(const TargetTerm& m);
NameSet free_type_vars(const TargetTerm& m);
NameSet all_identifiers(const TargetTerm& m);
std::size_t term_size(const TargetTerm& m);

using TargetContext = std::vector<std::pair<std::string, TargetType>>;

enum class Mode { Plain, Parametric };

/// Synthesizes the type of `term`. ⋆ is admitted only in parametric mode.
TargetType typecheck_target(const TargetContext& ctx, const TargetTerm& term, Mode mode);

// Capture-avoiding substitution of terms for variables and types for type
// variables, applied simultaneously.
TargetTerm target_subst(const TargetTerm& m, const std::map<std::string, TargetTerm>& vars,
                        const std::map<std::string, TargetType>& types = {});
TargetTerm target_subst(const TargetTerm& m, const std::string& var, const TargetTerm& replacement);
TargetTerm target_subst_type(const TargetTerm& m, const std::string& var, const TargetType& replacement);

std::string to_string(const TargetType& t, PrintStyle style = PrintStyle::Ascii);
std::string to_string(const TargetTerm& m, PrintStyle style = PrintStyle::Ascii);

}  // namespace mu2forge

#endif  // MU2FORGE_TARGET_KERNEL_HPP
