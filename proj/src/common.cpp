#include "mu2forge/common.hpp"

#include <cctype>

namespace mu2forge {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::UnboundName: return "UnboundName";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::EscapingTypeVariable: return "EscapingTypeVariable";
    case Errc::NonAnswerBody: return "NonAnswerBody";
    case Errc::EscapeCheckFailed: return "EscapeCheckFailed";
    case Errc::StarInPlainMode: return "StarInPlainMode";
    case Errc::NotInImageType: return "NotInImageType";
    case Errc::NotCanonical: return "NotCanonical";
    case Errc::IllTyped: return "IllTyped";
    case Errc::GaveUp: return "GaveUp";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NegativeOccurrence: return "NegativeOccurrence";
    case Errc::UnboundRelVar: return "UnboundRelVar";
    case Errc::OpenType: return "OpenType";
    case Errc::NotFocal: return "NotFocal";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SoundnessViolation: return "SoundnessViolation";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NameClash: return "NameClash";
    case Errc::TraceInvalid: return "TraceInvalid";
    case Errc::UnknownCombinator: return "UnknownCombinator";
  }
  return "Unknown";
}

std::string fresh_name(std::string_view base, const std::function<bool(const std::string&)>& taken) {
  std::string stem(base);
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "v";
  if (!taken(stem)) return stem;
  for (unsigned i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

std::string fresh_name(std::string_view base, const NameSet& avoid) {
  return fresh_name(base, [&](const std::string& s) { return avoid.count(s) != 0; });
}

}  // namespace mu2forge
