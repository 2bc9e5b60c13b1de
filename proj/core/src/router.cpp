#include "koyal/router.hpp"

#include <array>
#include <sstream>

#include "koyal/errors.hpp"
#include "koyal/romaniser.hpp"
#include "koyal/utf8.hpp"
#include "koyal/version.hpp"

namespace koyal {

namespace {

// ISO 639-1 codes for the romanisable-but-undeployed scripts.
std::string_view language_code(ScriptClass sc) {
  switch (sc) {
    case ScriptClass::Devanagari: return "hi";
    case ScriptClass::Telugu: return "te";
    case ScriptClass::Tamil: return "ta";
    case ScriptClass::Bengali: return "bn";
    case ScriptClass::Gujarati: return "gu";
    case ScriptClass::Kannada: return "kn";
    case ScriptClass::Malayalam: return "ml";
    case ScriptClass::PassThrough: break;
  }
  return "";
}

// Majority Brahmic class by codepoint count, ties broken by first occurrence.
std::optional<ScriptClass> majority_brahmic_class(std::string_view text) {
  std::array<std::size_t, 7> counts{};
  std::array<std::size_t, 7> first{};
  first.fill(SIZE_MAX);

  std::size_t index = 0;
  for (char32_t cp : utf8::decode(text)) {
    if (auto sc = classify_char(cp); sc && is_brahmic(*sc)) {
      const auto k = static_cast<std::size_t>(*sc);
      if (counts[k]++ == 0) first[k] = index;
    }
    ++index;
  }

  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    if (!best || counts[k] > counts[*best] ||
        (counts[k] == counts[*best] && first[k] < first[*best])) {
      best = k;
    }
  }
  if (!best) return std::nullopt;
  return static_cast<ScriptClass>(*best);
}

}  // namespace

Lang detect_language(std::string_view text) {
  auto majority = majority_brahmic_class(text);
  if (!majority) {
    throw Error(ErrorCode::NoBrahmicContent,
                "no Brahmic codepoints in the input");
  }
  switch (*majority) {
    case ScriptClass::Devanagari: return Lang::Hi;
    case ScriptClass::Telugu: return Lang::Te;
    case ScriptClass::Tamil: return Lang::Ta;
    default:
      throw Error(ErrorCode::UnsupportedLanguage,
                  "majority script " + std::string(to_string(*majority)) +
                      " (" + std::string(language_code(*majority)) +
                      ") has no deployment branch");
  }
}

Branch route(std::string_view text, Lang lang) {
  if (detect_codemix(text)) {
    return Branch::CodeMix;  // any language
  }
  return (lang == Lang::Hi) ? Branch::Vanilla : Branch::LoraBups;
}

namespace {

VoicePromptValidation validate_voice_prompt_code(const VoicePrompt& vp,
                                                 std::string_view target_code) {
  VoicePromptValidation v;
  if (vp.duration < kVoicePromptMinSeconds ||
      vp.duration > kVoicePromptMaxSeconds) {
    std::ostringstream msg;
    msg << "voice prompt duration " << vp.duration
        << " s outside the accepted [" << kVoicePromptMinSeconds << ", "
        << kVoicePromptMaxSeconds << "] s range";
    v.error = msg.str();
    return v;
  }
  v.ok = true;
  if (vp.duration > kVoicePromptRecommendedMaxSeconds) {
    std::ostringstream msg;
    msg << "voice prompt duration " << vp.duration
        << " s is outside the recommended [" << kVoicePromptMinSeconds << ", "
        << kVoicePromptRecommendedMaxSeconds << "] s range";
    v.warnings.push_back(Warning{"duration_outside_recommended", msg.str()});
  }
  if (vp.language != target_code) {
    v.warnings.push_back(Warning{
        "cross_language_voice_prompt",
        "voice prompt language '" + vp.language + "' differs from target '" +
            std::string(target_code) + "'; cross-language references degrade "
            "acoustic match"});
  }
  return v;
}

}  // namespace

VoicePromptValidation validate_voice_prompt(const VoicePrompt& vp, Lang target) {
  return validate_voice_prompt_code(vp, to_string(target));
}

PlannerDeps default_planner_deps(TranslitCache& cache,
                                 TranslitProvider& provider) {
  PlannerDeps deps;
  deps.normalise = [](std::string_view text, Lang lang) {
    return normalise(text, lang);
  };
  deps.romanise = [](std::string_view text) { return bups(text); };
  deps.transliterate = [&cache, &provider](const TranslitRequest& req) {
    return transliterate_codemix(req, cache, provider);
  };
  return deps;
}

SynthesisPlan build_plan(std::string_view text, const PlanOptions& opts,
                         const PlannerDeps& deps) {
  SynthesisPlan plan;
  plan.provenance.source_text = std::string(text);
  plan.provenance.pipeline_version = std::string(kVersion);

  std::optional<Lang> lang = opts.lang;
  std::string detected_code;
  bool forced = false;

  if (lang) {
    detected_code = std::string(to_string(*lang));
  } else {
    try {
      lang = detect_language(text);
      detected_code = std::string(to_string(*lang));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedLanguage || !opts.force_lora) {
        throw;
      }
      const auto majority = majority_brahmic_class(text);
      detected_code = std::string(language_code(*majority));
      forced = true;
    }
  }
  plan.provenance.detected_language = detected_code;

  const Branch branch = forced ? Branch::LoraBups : route(text, *lang);
  plan.branch = branch;

  NormaliseResult norm;
  if (forced) {
    // No spellout table exists for this language; romanise the raw text.
    norm.text = std::string(text);
    plan.warnings.push_back(Warning{
        "unvalidated_language",
        "language '" + detected_code + "' has no validated deployment branch; "
        "forced down the LoRA branch, number normalisation skipped"});
  } else {
    norm = deps.normalise(text, *lang);
  }
  for (const Warning& w : norm.warnings) {
    plan.warnings.push_back(w);
  }

  switch (branch) {
    case Branch::LoraBups:
      plan.backend_id = "chatterbox-lora";
      plan.processed_text = deps.romanise(norm.text);
      plan.language_id = "hi";  // Hindi-proxy conditioning tag
      plan.sampling = SamplingConfig::preset(opts.preset);
      break;
    case Branch::Vanilla:
      plan.backend_id = "chatterbox-vanilla";
      plan.processed_text = norm.text;  // stays in native script
      plan.language_id = "hi";
      plan.sampling = SamplingConfig::preset(opts.preset);
      break;
    case Branch::CodeMix: {
      plan.backend_id = "indicf5";
      TranslitRequest req;
      req.text = norm.text;
      req.lang = *lang;
      req.prompt_version = std::string(kPromptVersion);
      plan.processed_text = deps.transliterate(req);
      // no language_id and no sampling: the character-level backend takes
      // neither
      break;
    }
  }

  if (branch == Branch::CodeMix) {
    // carried through untouched; the 8-20 s rule is a Chatterbox constraint
    plan.voice_prompt = opts.voice_prompt;
  } else if (opts.voice_prompt) {
    const VoicePromptValidation check =
        validate_voice_prompt_code(*opts.voice_prompt, detected_code);
    if (!check.ok) {
      throw Error(ErrorCode::DurationOutOfRange, check.error);
    }
    for (const Warning& w : check.warnings) {
      plan.warnings.push_back(w);
    }
    plan.voice_prompt = opts.voice_prompt;
  } else if (opts.strict) {
    throw Error(ErrorCode::MissingVoicePrompt,
                "this branch requires a reference voice prompt "
                "(pass one or disable strict mode)");
  } else {
    plan.warnings.push_back(Warning{
        "no_voice_prompt",
        "no reference clip supplied; synthesis will run without the "
        "voice-prompt recovery step"});
  }

  return plan;
}

}  // namespace koyal
