#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace koyal {

enum class ErrorCode {
  NonBrahmicRun,
  UnmappedCodepoint,
  OutOfRange,
  NoBrahmicContent,
  UnsupportedLanguage,
  DurationOutOfRange,
  MissingVoicePrompt,
  ProviderUnreachable,
  ValidationFailed,
  CacheCorrupt,
  BadInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class UnmappedCodepointError : public Error {
 public:
  UnmappedCodepointError(char32_t cp, const std::string& message)
      : Error(ErrorCode::UnmappedCodepoint, message), cp_(cp) {}

  char32_t codepoint() const noexcept { return cp_; }

 private:
  char32_t cp_;
};

}  // namespace koyal
