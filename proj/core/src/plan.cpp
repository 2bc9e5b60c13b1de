#include "koyal/plan.hpp"

#include <json.hpp>

#include "koyal/errors.hpp"

namespace koyal {

using nlohmann::json;

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::LoraBups: return "lora_bups";
    case Branch::Vanilla: return "vanilla";
    case Branch::CodeMix: return "code_mix";
  }
  return "vanilla";
}

std::optional<Branch> parse_branch(std::string_view name) {
  if (name == "lora_bups") return Branch::LoraBups;
  if (name == "vanilla") return Branch::Vanilla;
  if (name == "code_mix") return Branch::CodeMix;
  return std::nullopt;
}

std::optional<Preset> parse_preset(std::string_view name) {
  if (name == "default") return Preset::Default;
  if (name == "a" || name == "config_a") return Preset::ConfigA;
  if (name == "b" || name == "config_b") return Preset::ConfigB;
  if (name == "c" || name == "config_c") return Preset::ConfigC;
  return std::nullopt;
}

SamplingConfig SamplingConfig::preset(Preset p) {
  SamplingConfig c;  // default-constructed == preset "default"
  switch (p) {
    case Preset::Default:
      break;
    case Preset::ConfigA:  // "preserve endings"
      c.repetition_penalty = 1.2;
      c.min_p = 0.03;
      c.preset_name = "config_a";
      break;
    case Preset::ConfigB:  // "stress + stability"
      c.exaggeration = 0.7;
      c.temperature = 0.6;
      c.min_p = 0.1;
      c.preset_name = "config_b";
      break;
    case Preset::ConfigC:  // "tight CFG"
      c.cfg_weight = 0.7;
      c.temperature = 0.6;
      c.preset_name = "config_c";
      break;
  }
  return c;
}

namespace {

json sampling_to_json(const SamplingConfig& s) {
  json j{{"exaggeration", s.exaggeration},
         {"temperature", s.temperature},
         {"min_p", s.min_p},
         {"preset_name", s.preset_name}};
  if (s.cfg_weight) j["cfg_weight"] = *s.cfg_weight;
  if (s.repetition_penalty) j["repetition_penalty"] = *s.repetition_penalty;
  return j;
}

SamplingConfig sampling_from_json(const json& j) {
  SamplingConfig s;
  s.exaggeration = j.at("exaggeration").get<double>();
  s.temperature = j.at("temperature").get<double>();
  s.min_p = j.at("min_p").get<double>();
  s.preset_name = j.at("preset_name").get<std::string>();
  if (j.contains("cfg_weight")) s.cfg_weight = j["cfg_weight"].get<double>();
  if (j.contains("repetition_penalty")) {
    s.repetition_penalty = j["repetition_penalty"].get<double>();
  }
  return s;
}

}  // namespace

std::string serialise_plan(const SynthesisPlan& plan) {
  json j{{"version", std::string(kPlanVersion)},
         {"branch", std::string(to_string(plan.branch))},
         {"backend_id", plan.backend_id},
         {"processed_text", plan.processed_text}};
  if (plan.language_id) j["language_id"] = *plan.language_id;
  if (plan.sampling) j["sampling"] = sampling_to_json(*plan.sampling);
  if (plan.voice_prompt) {
    j["voice_prompt"] = json{{"audio_path", plan.voice_prompt->audio_path},
                             {"duration", plan.voice_prompt->duration},
                             {"language", plan.voice_prompt->language}};
  }
  j["warnings"] = json::array();
  for (const Warning& w : plan.warnings) {
    j["warnings"].push_back(json{{"code", w.code}, {"message", w.message}});
  }
  j["provenance"] = json{{"source_text", plan.provenance.source_text},
                         {"detected_language", plan.provenance.detected_language},
                         {"pipeline_version", plan.provenance.pipeline_version}};
  return j.dump();
}

SynthesisPlan parse_plan(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("bad plan JSON: ") + e.what());
  }

  try {
    if (j.value("version", "") != kPlanVersion) {
      throw Error(ErrorCode::BadInput,
                  "unsupported plan version: " + j.value("version", "<none>"));
    }
    SynthesisPlan plan;
    auto branch = parse_branch(j.at("branch").get<std::string>());
    if (!branch) {
      throw Error(ErrorCode::BadInput,
                  "unknown branch: " + j.at("branch").get<std::string>());
    }
    plan.branch = *branch;
    plan.backend_id = j.at("backend_id").get<std::string>();
    plan.processed_text = j.at("processed_text").get<std::string>();
    if (j.contains("language_id")) {
      plan.language_id = j["language_id"].get<std::string>();
    }
    if (j.contains("sampling")) {
      plan.sampling = sampling_from_json(j["sampling"]);
    }
    if (j.contains("voice_prompt")) {
      const json& vp = j["voice_prompt"];
      plan.voice_prompt = VoicePrompt{vp.at("audio_path").get<std::string>(),
                                      vp.at("duration").get<double>(),
                                      vp.at("language").get<std::string>()};
    }
    for (const json& w : j.value("warnings", json::array())) {
      plan.warnings.push_back(Warning{w.value("code", ""), w.value("message", "")});
    }
    const json& prov = j.at("provenance");
    plan.provenance.source_text = prov.at("source_text").get<std::string>();
    plan.provenance.detected_language =
        prov.at("detected_language").get<std::string>();
    plan.provenance.pipeline_version =
        prov.at("pipeline_version").get<std::string>();
    return plan;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput,
                std::string("plan document missing fields: ") + e.what());
  }
}

}  // namespace koyal
