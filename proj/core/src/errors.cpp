#include "koyal/errors.hpp"

namespace koyal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonBrahmicRun: return "NonBrahmicRun";
    case ErrorCode::UnmappedCodepoint: return "UnmappedCodepoint";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NoBrahmicContent: return "NoBrahmicContent";
    case ErrorCode::UnsupportedLanguage: return "UnsupportedLanguage";
    case ErrorCode::DurationOutOfRange: return "DurationOutOfRange";
    case ErrorCode::MissingVoicePrompt: return "MissingVoicePrompt";
    case ErrorCode::ProviderUnreachable: return "ProviderUnreachable";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace koyal
