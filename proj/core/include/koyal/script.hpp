#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace koyal {

// The seven Brahmic script classes handled by the frontend plus one
// pass-through class for everything else (Latin, digits, punctuation,
// whitespace, emoji, unlisted blocks).
enum class ScriptClass : std::uint8_t {
  Devanagari,
  Bengali,
  Gujarati,
  Tamil,
  Telugu,
  Kannada,
  Malayalam,
  PassThrough,
};

constexpr char32_t kZwnj = U'‌';
constexpr char32_t kZwj = U'‍';

bool is_brahmic(ScriptClass sc);
std::string_view to_string(ScriptClass sc);

// Total over all Unicode scalar values. ZWNJ/ZWJ return nullopt: they inherit
// the class of the surrounding text (see segment()).
std::optional<ScriptClass> classify_char(char32_t cp);

// A maximal single-class span of the source text. Offsets are Unicode scalar
// values, not bytes; text is the UTF-8 slice source[start:end].
struct ScriptRun {
  std::string text;
  ScriptClass script = ScriptClass::PassThrough;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const ScriptRun&) const = default;
};

// Partitions text into maximal runs. Lossless: concatenating run texts in
// order reproduces the input codepoint-for-codepoint. Joiners are merged into
// the enclosing run when flanked by same-class codepoints, otherwise into the
// preceding run (leading joiners join the first run).
std::vector<ScriptRun> segment(std::string_view text);

}  // namespace koyal
