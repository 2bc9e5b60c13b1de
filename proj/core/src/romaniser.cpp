#include "koyal/romaniser.hpp"

#include <array>
#include <sstream>

#include "koyal/errors.hpp"
#include "koyal/script_tables.hpp"
#include "koyal/utf8.hpp"

namespace koyal {

namespace {

std::string hex_cp(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

EntryKind parse_flag(char flag, std::string_view line) {
  switch (flag) {
    case 'C': return EntryKind::Consonant;
    case 'V': return EntryKind::VowelSign;
    case 'X': return EntryKind::Virama;
    case 'D': return EntryKind::Digit;
    case 'P': return EntryKind::Plain;
    case 'R': return EntryKind::Drop;
    default:
      throw Error(ErrorCode::BadInput,
                  "bad table flag in line: " + std::string(line));
  }
}

}  // namespace

TransliterationTable TransliterationTable::parse(std::string_view source,
                                                 ScriptClass script) {
  TransliterationTable table;
  table.script_ = script;

  std::size_t pos = 0;
  while (pos < source.size()) {
    std::size_t eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    std::string_view line = source.substr(pos, eol - pos);
    pos = eol + 1;

    if (line.empty() || line.front() == '#') continue;

    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 =
        tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos) {
      throw Error(ErrorCode::BadInput,
                  "bad table line (need two tabs): " + std::string(line));
    }

    std::u32string key;
    {
      std::istringstream iss{std::string(line.substr(0, tab1))};
      std::string hex;
      while (iss >> hex) {
        key.push_back(static_cast<char32_t>(std::stoul(hex, nullptr, 16)));
      }
    }
    if (key.empty()) {
      throw Error(ErrorCode::BadInput,
                  "bad table line (empty key): " + std::string(line));
    }

    TableEntry entry;
    entry.latin = std::string(line.substr(tab1 + 1, tab2 - tab1 - 1));
    entry.kind = parse_flag(line.size() > tab2 + 1 ? line[tab2 + 1] : '?', line);

    table.max_key_len_ = std::max(table.max_key_len_, key.size());
    table.entries_[key] = std::move(entry);
  }
  return table;
}

const TransliterationTable& TransliterationTable::for_script(ScriptClass script) {
  if (!is_brahmic(script)) {
    throw Error(ErrorCode::NonBrahmicRun,
                "no transliteration table for pass-through text");
  }
  static const std::array<TransliterationTable, 7>& tables = [] {
    static std::array<TransliterationTable, 7> t;
    for (int i = 0; i < 7; ++i) {
      const auto sc = static_cast<ScriptClass>(i);
      t[i] = parse(tables::embedded_table_source(sc), sc);
    }
    return t;
  }();
  return tables[static_cast<int>(script)];
}

const TableEntry* TransliterationTable::find(const std::u32string& cps,
                                             std::size_t pos,
                                             std::size_t& matched) const {
  for (std::size_t len = std::min(max_key_len_, cps.size() - pos); len >= 1;
       --len) {
    auto it = entries_.find(cps.substr(pos, len));
    if (it != entries_.end()) {
      matched = len;
      return &it->second;
    }
  }
  matched = 0;
  return nullptr;
}

std::string transliterate_run(const ScriptRun& run) {
  if (!is_brahmic(run.script)) {
    throw Error(ErrorCode::NonBrahmicRun,
                "transliterate_run requires a Brahmic run");
  }
  const TransliterationTable& table = TransliterationTable::for_script(run.script);
  const std::u32string cps = utf8::decode(run.text);

  std::string out;
  out.reserve(run.text.size());
  bool pending_a = false;  // consonant emitted, inherent vowel unresolved

  std::size_t i = 0;
  while (i < cps.size()) {
    if (cps[i] == kZwnj || cps[i] == kZwj) {
      ++i;  // rendering controls carry no phonemic content
      continue;
    }
    std::size_t matched = 0;
    const TableEntry* entry = table.find(cps, i, matched);
    if (entry == nullptr) {
      throw UnmappedCodepointError(
          cps[i], "no ISO-15919 mapping for " + hex_cp(cps[i]) + " (" +
                      std::string(to_string(run.script)) + ")");
    }
    i += matched;

    if (pending_a) {
      if (entry->kind == EntryKind::VowelSign) {
        out += entry->latin;
        pending_a = false;
        continue;
      }
      if (entry->kind == EntryKind::Virama) {
        pending_a = false;
        continue;
      }
      out += 'a';
      pending_a = false;
    }

    switch (entry->kind) {
      case EntryKind::Consonant:
        out += entry->latin;
        pending_a = true;
        break;
      case EntryKind::Virama:
        break;  // orphan virama, nothing to suppress
      case EntryKind::Drop:
        break;
      case EntryKind::VowelSign:  // orphan vowel sign: emit its value
      case EntryKind::Digit:
      case EntryKind::Plain:
        out += entry->latin;
        break;
    }
  }
  if (pending_a) {
    out += 'a';
  }
  return out;
}

std::string bups(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const ScriptRun& run : segment(text)) {
    if (is_brahmic(run.script)) {
      out += transliterate_run(run);
    } else {
      out += run.text;
    }
  }
  return out;
}

const std::set<ScriptClass>& supported_scripts() {
  static const std::set<ScriptClass> scripts = {
      ScriptClass::Devanagari, ScriptClass::Bengali, ScriptClass::Gujarati,
      ScriptClass::Tamil,      ScriptClass::Telugu,  ScriptClass::Kannada,
      ScriptClass::Malayalam,
  };
  return scripts;
}

}  // namespace koyal
