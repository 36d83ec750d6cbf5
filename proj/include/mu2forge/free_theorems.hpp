#ifndef MU2FORGE_FREE_THEOREMS_HPP
#define MU2FORGE_FREE_THEOREMS_HPP

// Relational parametricity as data. Admissible relations interpret target
// types, focal relations interpret λμ2 types; formulas are emitted, printed
// and exported, and only their graph instances are handed to the oracle.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mu2forge/focality.hpp"

namespace mu2forge {

/// A term or type of either calculus.
using FTerm = std::variant<MuTerm, TargetTerm>;
using FType = std::variant<MuType, TargetType>;

std::string to_string(const FTerm& t, PrintStyle style = PrintStyle::Unicode);
std::string to_string(const FType& t, PrintStyle style = PrintStyle::Unicode);

enum class RelKind { Admissible, Focal };

class RelFormula;

/// What a relational atom applies: a relation variable, the graph of a map,
/// the identity (equality) at a type, or an abstraction λ(x,y).φ.
struct RelRef {
  enum class Kind { Var, Graph, Identity, Abstract };
  Kind kind = Kind::Var;
  std::string name;                   // Var
  std::optional<FTerm> map;           // Graph: u ⟨f⟩ v iff f u = v
  bool focal_required = false;        // Graph
  std::optional<FType> type;          // Identity
  std::string left_var, right_var;    // Abstract
  std::shared_ptr<const RelFormula> body;  // Abstract

  static RelRef var(std::string name);
  static RelRef graph(FTerm map, bool focal_required);
  static RelRef identity(FType type);
  static RelRef abstract(std::string x, std::string y, RelFormula body);
};

/// A relation together with its endpoint types r : left ↔ right.
struct Relation {
  RelRef ref;
  FType left, right;
};

using RelEnv = std::map<std::string, Relation>;

class RelFormula {
 public:
  enum class Kind { Atom, Implies, And, ForallTerm, ExistsTerm, ForallType, ExistsType, ForallRel, ExistsRel };

  static RelFormula atom(RelRef rel, FTerm left, FTerm right);
  static RelFormula implies(RelFormula premise, RelFormula conclusion);
  static RelFormula conj(RelFormula lhs, RelFormula rhs);
  static RelFormula forall_term(std::string var, FType type, RelFormula body);
  static RelFormula exists_term(std::string var, FType type, RelFormula body);
  static RelFormula forall_type(std::string var, bool target, RelFormula body);
  static RelFormula exists_type(std::string var, bool target, RelFormula body);
  static RelFormula forall_rel(std::string var, RelKind kind, FType left, FType right, RelFormula body);
  static RelFormula exists_rel(std::string var, RelKind kind, FType left, FType right, RelFormula body);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  const RelRef& rel() const;           // Atom
  const FTerm& left() const;           // Atom
  const FTerm& right() const;          // Atom
  const RelFormula& lhs() const;       // Implies (premise), And
  const RelFormula& rhs() const;       // Implies (conclusion), And
  const std::string& var() const;      // binders
  const FType& type() const;           // term binders
  bool target() const;                 // type binders: which calculus
  RelKind rel_kind() const;            // relation binders
  const FType& rel_left() const;
  const FType& rel_right() const;
  const RelFormula& body() const;      // binders

 private:
  struct Node;
  explicit RelFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Applies a relation to two terms. Abstractions are unfolded, so
/// holds(¬r, f, g) is exactly the ¬-clause.
RelFormula holds(const RelRef& rel, const FTerm& left, const FTerm& right);

/// Deterministic UTF-8 rendering:
///   F ::= ∀x:T. F | ∃x:T. F | ∀X. F | ∃X. F | ∀ focal r : T ↔ T. F
///       | ∃ admissible r : T ↔ T. F | F ⇒ F | F ∧ F | (F) | A
///   A ::= u = v | r(u, v) | ⟨f⟩(u, v)
/// Quantifiers extend as far right as possible, ⇒ associates to the right
/// and ∧ binds tighter than ⇒.
std::string to_string(const RelFormula& f);
/// Tree-shaped JSON export; terms and types as ASCII surface syntax.
std::string to_json(const RelFormula& f, int indent = 2);

/// Target builders for the derived connectives on admissible relations.
Relation neg_relation(const Relation& r);
Relation conj_relation(const Relation& r, const Relation& s);
/// ∃X.r where `body` maps the relation for X to r.
Relation exists_relation(const std::string& x, const TargetType& left_body, const TargetType& right_body,
                         const std::function<Relation(const Relation&)>& body);

/// τ* over the free variables of τ, all of which must be bound in env.
/// Throws UnboundRelVar.
Relation target_relation(const TargetType& tau, const RelEnv& env);
RelFormula target_relation(const TargetType& tau, const RelEnv& env, const TargetTerm& u, const TargetTerm& v);
/// σ* for λμ2 types, the ∀-clause quantifying over focal relations.
Relation mu_relation(const MuType& sigma, const RelEnv& env);
RelFormula mu_relation(const MuType& sigma, const RelEnv& env, const MuTerm& u, const MuTerm& v);

/// ∀x:σ. σ*(x, x) with identity relations at the listed parameters. Any
/// other free type variable throws OpenType.
RelFormula free_theorem(const MuType& sigma, const std::vector<std::string>& params = {});
/// The same statement for a target type with admissible relations.
RelFormula target_free_theorem(const TargetType& tau, const std::vector<std::string>& params = {});

/// A map whose graph instantiates a focal relation quantifier.
struct GraphMap {
  Context gamma, delta;
  MuTerm map;
  MuType dom, cod;
  std::optional<FocalityCertificate> certificate;
};

/// Runs check_focal on f; the certificate is absent if extraction fails.
GraphMap graph_map(const Context& gamma, const Context& delta, const MuTerm& f,
                   Theory theory = Theory::LambdaMu2P);

/// An equation under its hypotheses; both sides typed in (gamma, delta).
struct GraphEquation {
  Context gamma, delta;
  std::vector<std::string> type_params;  // schematic type variables
  std::vector<RelFormula> premises;
  MuTerm lhs, rhs;
};

struct GraphInstance {
  std::vector<GraphEquation> equations;
  /// Conclusions that did not reduce to equations.
  std::vector<RelFormula> residual;
};

/// Strips the leading term and type quantifiers, replaces the first relation
/// quantifier r : A ↔ B by ⟨f⟩ with A := dom and B := cod, and reduces graph
/// and identity atoms to equations. Throws NotFocal when the quantifier is
/// focal and the map has no certificate.
GraphInstance instantiate_graph(const RelFormula& formula, const GraphMap& f);

enum class Discharge { Confirmed, Open };

struct DischargeResult {
  Discharge status = Discharge::Open;
  EqVerdict verdict;
  std::string note;
};

/// Confirms an equation when the oracle proves it without its premises.
/// Anything else stays open.
DischargeResult discharge(const GraphEquation& eq, Theory theory = Theory::LambdaMu2P);

std::string to_string(const GraphEquation& eq);

/// Parametricity-only claims: stated, never decided.
struct Obligation {
  std::string tag;
  std::string claim;
  RelFormula statement;
  /// What the oracle says about the executable parts, for the record.
  std::string oracle_note;
};

std::vector<Obligation> obligations();

}  // namespace mu2forge

#endif  // MU2FORGE_FREE_THEOREMS_HPP
