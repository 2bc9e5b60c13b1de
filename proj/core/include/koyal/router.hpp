#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koyal/normaliser.hpp"
#include "koyal/plan.hpp"
#include "koyal/script.hpp"
#include "koyal/translit.hpp"

namespace koyal {

// Maps the majority Brahmic script of the text to its deployment language
// (Devanagari -> hi, Telugu -> te, Tamil -> ta), ties broken by first
// occurrence. Throws Error(NoBrahmicContent) when no Brahmic codepoint is
// present and Error(UnsupportedLanguage) when the majority script has no
// deployment branch (Bengali, Gujarati, Kannada, Malayalam).
Lang detect_language(std::string_view text);

// Recommended reference-clip length; validation accepts the wider BYOR bound.
constexpr double kVoicePromptMinSeconds = 8.0;
constexpr double kVoicePromptMaxSeconds = 20.0;
constexpr double kVoicePromptRecommendedMaxSeconds = 11.0;

struct VoicePromptValidation {
  bool ok = false;
  std::string error;  // set when duration is outside [8, 20] s
  std::vector<Warning> warnings;
};

// Duration outside [8, 20] s is an error; a cross-language clip is a warning
// only (it degrades acoustic match but still synthesises).
VoicePromptValidation validate_voice_prompt(const VoicePrompt& vp, Lang target);

// Branch selection. Code-mix detection runs on the raw input, before any
// normalisation; pure te/ta routes to the LoRA branch, pure hi to vanilla.
Branch route(std::string_view text, Lang lang);

// The per-branch preprocessing steps, injectable so tests can count calls
// and the code-mix provider can be swapped.
struct PlannerDeps {
  std::function<NormaliseResult(std::string_view, Lang)> normalise;
  std::function<std::string(std::string_view)> romanise;
  std::function<std::string(const TranslitRequest&)> transliterate;
};

PlannerDeps default_planner_deps(TranslitCache& cache, TranslitProvider& provider);

struct PlanOptions {
  std::optional<Lang> lang;  // detected from the text when absent
  std::optional<VoicePrompt> voice_prompt;
  Preset preset = Preset::ConfigB;
  bool strict = true;      // Chatterbox branches require a voice prompt
  bool force_lora = false; // allow bn/gu/kn/ml down the LoRA branch, unvalidated
};

// Runs the full frontend for one utterance and emits a self-contained plan.
SynthesisPlan build_plan(std::string_view text, const PlanOptions& opts,
                         const PlannerDeps& deps);

}  // namespace koyal
