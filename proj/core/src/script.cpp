#include "koyal/script.hpp"

#include "koyal/utf8.hpp"

namespace koyal {

bool is_brahmic(ScriptClass sc) {
  return sc != ScriptClass::PassThrough;
}

std::string_view to_string(ScriptClass sc) {
  switch (sc) {
    case ScriptClass::Devanagari: return "devanagari";
    case ScriptClass::Bengali: return "bengali";
    case ScriptClass::Gujarati: return "gujarati";
    case ScriptClass::Tamil: return "tamil";
    case ScriptClass::Telugu: return "telugu";
    case ScriptClass::Kannada: return "kannada";
    case ScriptClass::Malayalam: return "malayalam";
    case ScriptClass::PassThrough: return "passthrough";
  }
  return "passthrough";
}

std::optional<ScriptClass> classify_char(char32_t cp) {
  if (cp == kZwnj || cp == kZwj) {
    return std::nullopt;  // inherits the surrounding class
  }
  if (cp >= 0x0900 && cp <= 0x097F) return ScriptClass::Devanagari;
  if (cp >= 0x0980 && cp <= 0x09FF) return ScriptClass::Bengali;
  if (cp >= 0x0A80 && cp <= 0x0AFF) return ScriptClass::Gujarati;
  if (cp >= 0x0B80 && cp <= 0x0BFF) return ScriptClass::Tamil;
  if (cp >= 0x0C00 && cp <= 0x0C7F) return ScriptClass::Telugu;
  if (cp >= 0x0C80 && cp <= 0x0CFF) return ScriptClass::Kannada;
  if (cp >= 0x0D00 && cp <= 0x0D7F) return ScriptClass::Malayalam;
  return ScriptClass::PassThrough;
}

std::vector<ScriptRun> segment(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  const std::size_t n = cps.size();
  std::vector<ScriptRun> runs;
  if (n == 0) {
    return runs;
  }

  // Effective class per codepoint: joiners take the class of the nearest
  // non-joiner to the left (so they stay in the preceding run), falling back
  // to the right for leading joiners. When both neighbours share a class the
  // run is unbroken either way, which keeps joiners inside Brahmic clusters.
  std::vector<ScriptClass> eff(n, ScriptClass::PassThrough);
  std::optional<ScriptClass> prev;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto sc = classify_char(cps[i])) {
      prev = sc;
      eff[i] = *sc;
    } else if (prev) {
      eff[i] = *prev;
    } else {
      std::optional<ScriptClass> ahead;
      for (std::size_t j = i + 1; j < n && !ahead; ++j) {
        ahead = classify_char(cps[j]);
      }
      eff[i] = ahead.value_or(ScriptClass::PassThrough);
    }
  }

  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || eff[i] != eff[start]) {
      runs.push_back(ScriptRun{
          utf8::encode(std::u32string_view(cps).substr(start, i - start)),
          eff[start], start, i});
      start = i;
    }
  }
  return runs;
}

}  // namespace koyal
