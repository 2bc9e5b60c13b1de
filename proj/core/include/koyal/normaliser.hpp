#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace koyal {

// Deployment target languages.
enum class Lang : std::uint8_t { Te, Ta, Hi };

std::string_view to_string(Lang lang);
std::optional<Lang> parse_lang(std::string_view code);

struct Warning {
  std::string code;
  std::string message;

  bool operator==(const Warning&) const = default;
};

struct NormaliseResult {
  std::string text;
  std::vector<Warning> warnings;
};

// Largest value the cardinal spellout covers: 99,99,99,999 in Indian
// grouping (99 crore ...).
constexpr std::int64_t kMaxSpellable = 999'999'999;

// Per-language word inventory: cardinals 0-99, Indian-grouping unit words,
// month names, currency words, percent/point words and the 26 Latin-letter
// names. Embedded as auditable text, same format as the transliteration
// tables (key, TAB, value).
class SpelloutTable {
 public:
  static SpelloutTable parse(std::string_view source, Lang lang);
  static const SpelloutTable& for_lang(Lang lang);

  Lang lang() const { return lang_; }

  const std::string& small_cardinal(int n) const;  // 0..99
  const std::string& hundred() const { return hundred_; }
  const std::string& thousand() const { return thousand_; }
  const std::string& lakh() const { return lakh_; }
  const std::string& crore() const { return crore_; }
  const std::string& month(int m) const;        // 1..12
  const std::string& rupee(bool plural) const;
  const std::string& paisa(bool plural) const;
  const std::string& percent() const { return percent_; }
  const std::string& point() const { return point_; }
  const std::string& letter(char upper) const;  // 'A'..'Z'

 private:
  Lang lang_ = Lang::Hi;
  std::array<std::string, 100> cardinals_;
  std::string hundred_, thousand_, lakh_, crore_;
  std::array<std::string, 12> months_;
  std::string rupee_sg_, rupee_pl_, paisa_sg_, paisa_pl_;
  std::string percent_, point_;
  std::array<std::string, 26> letters_;
};

// Native-script cardinal with Indian grouping (crore/lakh/thousand/hundred).
// Throws Error(OutOfRange) outside [0, kMaxSpellable].
std::string spell_cardinal(std::int64_t n, Lang lang);

// "<day-cardinal> <month-name> <year-cardinal>". Years 1100-1999 read as
// "<hundreds> <hundred-word> <remainder>", others as plain cardinals.
// Throws Error(OutOfRange) for day/month outside range.
std::string spell_date(int day, int month, std::int64_t year, Lang lang);

// Expands dates, currency, percentages, numbers, decimals and standalone
// single Latin letters into native-script words. Longest match first, left
// to right. Unrecognised patterns pass through; out-of-range numbers pass
// through unchanged with a warning in the result.
NormaliseResult normalise(std::string_view text, Lang lang);

}  // namespace koyal
