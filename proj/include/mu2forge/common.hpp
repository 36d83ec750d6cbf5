#ifndef MU2FORGE_COMMON_HPP
#define MU2FORGE_COMMON_HPP

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mu2forge {

enum class Errc {
  UnboundVariable,
  UnboundName,
  TypeMismatch,
  EscapingTypeVariable,
  NonAnswerBody,
  EscapeCheckFailed,
  StarInPlainMode,
  NotInImageType,
  NotCanonical,
  IllTyped,
  GaveUp,
  ArityMismatch,
  NegativeOccurrence,
  UnboundRelVar,
  OpenType,
  NotFocal,
  SyntaxError,
  SoundnessViolation,
  ContextMismatch,
  NameClash,
  TraceInvalid,
  UnknownCombinator,
};

std::string_view errc_name(Errc code);

/// Every kernel failure is reported through this exception; `code()` names
/// the failing check and `what()` carries the offending rule or construct.
class KernelError : public std::runtime_error {
 public:
  KernelError(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

using NameSet = std::set<std::string>;

// Returns `base` (with any trailing digits stripped) or the first `baseN`
// for which `taken` is false.
std::string fresh_name(std::string_view base, const std::function<bool(const std::string&)>& taken);
std::string fresh_name(std::string_view base, const NameSet& avoid);

enum class PrintStyle { Ascii, Unicode };

}  // namespace mu2forge

#endif  // MU2FORGE_COMMON_HPP
