#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "koyal/script.hpp"

namespace koyal {

// Per-codepoint transliteration rule. Consonants carry the inherent vowel:
// a trailing "a" is emitted unless a vowel sign or virama follows.
enum class EntryKind : std::uint8_t {
  Consonant,  // bare Latin form, inherent "a" logic applies
  VowelSign,  // dependent vowel, replaces the inherent "a"
  Virama,     // suppresses the inherent "a", emits nothing
  Digit,      // native digit, maps to ASCII
  Plain,      // independent vowels, signs, punctuation: emitted as-is
  Drop,       // explicitly discarded (cantillation marks etc.)
};

struct TableEntry {
  std::string latin;
  EntryKind kind = EntryKind::Plain;
};

// ISO-15919 mapping for one script. Keys are sequences of one to three
// codepoints (nukta pairs and decomposed two-part vowels take precedence
// over single codepoints). Tables are embedded static data in a text format
// of one entry per line: hex codepoint(s), TAB, output, TAB, flag.
class TransliterationTable {
 public:
  static TransliterationTable parse(std::string_view source, ScriptClass script);

  // The embedded table for a Brahmic script. Throws Error(NonBrahmicRun) for
  // PassThrough. Tables are immutable after first load.
  static const TransliterationTable& for_script(ScriptClass script);

  ScriptClass script() const { return script_; }

  // Longest-match lookup starting at cps[pos]; returns matched length via
  // out param, nullptr if no entry starts there.
  const TableEntry* find(const std::u32string& cps, std::size_t pos,
                         std::size_t& matched) const;

  const std::unordered_map<std::u32string, TableEntry>& entries() const {
    return entries_;
  }

 private:
  ScriptClass script_ = ScriptClass::PassThrough;
  std::unordered_map<std::u32string, TableEntry> entries_;
  std::size_t max_key_len_ = 1;
};

// ISO-15919 transliteration of one Brahmic run. Strictly orthographic: no
// schwa deletion. Throws Error(NonBrahmicRun) for PassThrough runs and
// UnmappedCodepointError for block codepoints without a table entry.
std::string transliterate_run(const ScriptRun& run);

// Whole-string romanisation: Brahmic runs transliterated, everything else
// passed through verbatim. Output is NFC and contains no Brahmic codepoints.
std::string bups(std::string_view text);

const std::set<ScriptClass>& supported_scripts();

}  // namespace koyal
