#ifndef MU2FORGE_SYNTAX_HPP
#define MU2FORGE_SYNTAX_HPP

// ASCII surface syntax for both calculi and an s-expression interchange
// format. Parsers accept everything the ASCII printers emit.
//
// λμ2 types:   forall X. t | t -> t | not t | bot | X | (t)
// λμ2 terms:   \x:t. M | \x. M | /\X. M | M N | M [t] | mu a:t. [b] M
//              | bmu a:t. M | [b] M | Name[t, ...](M, ...) | (M)
// target types: exists X. t | t /\ t | not t | R | X | (t)
// target terms: \x:t. M | M N | <M, N> | <t | M> | <t | M as t>
//              | let <x, y> = M in N | *  | (M)
//
// Annotations may be omitted where the expected type is known, e.g. the
// argument of a combinator. `let <a, b> = M in N` is a pair or a pack
// elimination depending on the type of M; when that is unknown an initial
// capital on `a` selects the pack form.

#include <optional>
#include <string>
#include <string_view>

#include "mu2forge/target_kernel.hpp"
#include "mu2forge/mu_kernel.hpp"

namespace mu2forge {

/// Throws SyntaxError with the column of the offending token.
MuType parse_mu_type(std::string_view text);
MuTerm parse_mu_term(std::string_view text, const Context& gamma = {}, const Context& delta = {});
/// As parse_mu_term, but an unbound variable met where its type is known
/// (an argument, or the whole term against `expected`) is added to the
/// front of `gamma`.
MuTerm parse_open_mu_term(std::string_view text, Context& gamma, const Context& delta,
                          const std::optional<MuType>& expected = std::nullopt);
TargetType parse_target_type(std::string_view text);
TargetTerm parse_target_term(std::string_view text, const TargetContext& ctx = {});

/// Tree-shaped export, one node per constructor:
///   (var X) (arrow A B) (forall X A)
///   (var x) (lam x A M) (app M N) (tylam X M) (tyapp M A) (mu a A b M)
///   (var X) (answer) (neg A) (conj A B) (exists X A)
///   (var x) (lam x A M) (app M N) (pair M N) (let-pair x y M N)
///   (pack A M B) (let-pack X x M N) (star)
std::string to_sexpr(const MuType& t);
std::string to_sexpr(const MuTerm& m);
std::string to_sexpr(const TargetType& t);
std::string to_sexpr(const TargetTerm& m);

MuType mu_type_from_sexpr(std::string_view text);
MuTerm mu_term_from_sexpr(std::string_view text);
TargetType target_type_from_sexpr(std::string_view text);
TargetTerm target_term_from_sexpr(std::string_view text);

}  // namespace mu2forge

#endif  // MU2FORGE_SYNTAX_HPP
