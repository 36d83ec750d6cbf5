#ifndef MU2FORGE_ENCODINGS_HPP
#define MU2FORGE_ENCODINGS_HPP

// Impredicative and classical encodings: double-negation elimination, Peirce,
// abort, focal decomposition, initial algebras μX.F[X], Church numerals and
// the continuation-like monad L σ = ∀X.(σ→X)→X.

#include <string>
#include <string_view>
#include <vector>

#include "mu2forge/mu_kernel.hpp"

namespace mu2forge {

enum class Polarity { Absent, Positive, Negative, Mixed };

std::string_view polarity_name(Polarity p);

/// F[X]: a type with one distinguished free type variable.
struct TypeScheme {
  std::string var;
  MuType body;

  /// Polarity of each occurrence of `var`, left to right.
  std::vector<Polarity> occurrences() const;
  /// Combined polarity: Positive means no negative occurrence.
  Polarity polarity() const;
  MuType at(const MuType& t) const;
};

/// ∀X.(F[X]→X)→X
MuType mu_type(const TypeScheme& f);
/// L σ = ∀X.(σ→X)→X
MuType l_type(const MuType& sigma);
/// N = ∀X.X→(X→X)→X
MuType nat_type();
/// ⊥→(σ→⊥)→⊥, the classical counterpart of 1 + σ.
MuType nat_signature(const MuType& sigma);

/// F[f] : F[a] → F[b] for f : a → b. Throws NegativeOccurrence if X occurs
/// negatively in F.
MuTerm functorial_action(const TypeScheme& f_scheme, const MuTerm& f, const MuType& a, const MuType& b);
/// Mixed variance: `back` : b → a is used at negative occurrences.
MuTerm functorial_action(const TypeScheme& f_scheme, const MuTerm& f, const MuTerm& back, const MuType& a,
                         const MuType& b);

/// ΛX.λx^X f^{X→X}. fⁿ x
MuTerm church(unsigned n);

/// Builds a named combinator. Type parameters come first; schemes F[X] are
/// passed as their body with X the distinguished variable. Term parameters
/// are the maps the display is indexed by (g for sharp, f for L-map, ...).
/// Throws UnknownCombinator or ArityMismatch.
MuTerm mk_combinator(std::string_view name, const std::vector<MuType>& types,
                     const std::vector<MuTerm>& terms = {});

struct CombinatorArity {
  std::string name;
  std::size_t types, terms;
  std::string usage;
};

const std::vector<CombinatorArity>& combinator_table();

struct CatalogEntry {
  std::string name;
  MuTerm term;
  MuType type;
  Context gamma;  // free term parameters, if any
  Context delta;  // free names, if any
  std::string topic;
  std::string description;
};

/// The standard instances used by the test suites, typed in their contexts.
const std::vector<CatalogEntry>& catalog();

}  // namespace mu2forge

#endif  // MU2FORGE_ENCODINGS_HPP
