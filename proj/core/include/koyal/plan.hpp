#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koyal/normaliser.hpp"

namespace koyal {

// The three inference branches.
enum class Branch : std::uint8_t { LoraBups, Vanilla, CodeMix };

std::string_view to_string(Branch branch);
std::optional<Branch> parse_branch(std::string_view name);

enum class Preset : std::uint8_t { Default, ConfigA, ConfigB, ConfigC };

std::optional<Preset> parse_preset(std::string_view name);

// Five-knob decoder sampling preset. Optional knobs are omitted from the
// serialised plan when absent (backend default applies).
struct SamplingConfig {
  double exaggeration = 0.5;
  double temperature = 0.8;
  double min_p = 0.05;
  std::optional<double> cfg_weight;
  std::optional<double> repetition_penalty;
  std::string preset_name = "default";

  static SamplingConfig preset(Preset p);

  bool operator==(const SamplingConfig&) const = default;
};

struct VoicePrompt {
  std::string audio_path;
  double duration = 0.0;  // seconds
  std::string language;   // "te" | "ta" | "hi" | "other"

  bool operator==(const VoicePrompt&) const = default;
};

struct PlanProvenance {
  std::string source_text;
  std::string detected_language;
  std::string pipeline_version;

  bool operator==(const PlanProvenance&) const = default;
};

// The backend-agnostic output document consumed by a synthesis backend.
// Serialises to JSON with snake_case keys and version tag "plan_v1".
struct SynthesisPlan {
  Branch branch = Branch::Vanilla;
  std::string backend_id;
  std::string processed_text;
  std::optional<std::string> language_id;
  std::optional<SamplingConfig> sampling;
  std::optional<VoicePrompt> voice_prompt;
  std::vector<Warning> warnings;
  PlanProvenance provenance;

  bool operator==(const SynthesisPlan&) const = default;
};

constexpr std::string_view kPlanVersion = "plan_v1";

std::string serialise_plan(const SynthesisPlan& plan);  // stable, NFC, UTF-8

// Inverse of serialise_plan. Throws Error(BadInput) on malformed documents
// or version mismatch.
SynthesisPlan parse_plan(std::string_view json_text);

}  // namespace koyal
