#include "koyal/normaliser.hpp"

#include <algorithm>
#include <cctype>

#include "koyal/errors.hpp"
#include "koyal/spellout_tables.hpp"
#include "koyal/utf8.hpp"

namespace koyal {

std::string_view to_string(Lang lang) {
  switch (lang) {
    case Lang::Te: return "te";
    case Lang::Ta: return "ta";
    case Lang::Hi: return "hi";
  }
  return "hi";
}

std::optional<Lang> parse_lang(std::string_view code) {
  if (code == "te") return Lang::Te;
  if (code == "ta") return Lang::Ta;
  if (code == "hi") return Lang::Hi;
  return std::nullopt;
}

SpelloutTable SpelloutTable::parse(std::string_view source, Lang lang) {
  SpelloutTable t;
  t.lang_ = lang;

  std::size_t pos = 0;
  while (pos < source.size()) {
    std::size_t eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    std::string_view line = source.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab + 1 >= line.size()) {
      throw Error(ErrorCode::BadInput,
                  "bad spellout line: " + std::string(line));
    }
    const std::string key(line.substr(0, tab));
    const std::string value(line.substr(tab + 1));

    if (!key.empty() && std::isdigit(static_cast<unsigned char>(key[0]))) {
      const int n = std::stoi(key);
      if (n < 0 || n > 99) {
        throw Error(ErrorCode::BadInput, "cardinal slot out of range: " + key);
      }
      t.cardinals_[n] = value;
    } else if (key == "hundred") {
      t.hundred_ = value;
    } else if (key == "thousand") {
      t.thousand_ = value;
    } else if (key == "lakh") {
      t.lakh_ = value;
    } else if (key == "crore") {
      t.crore_ = value;
    } else if (key.rfind("month", 0) == 0) {
      const int m = std::stoi(key.substr(5));
      if (m < 1 || m > 12) {
        throw Error(ErrorCode::BadInput, "month slot out of range: " + key);
      }
      t.months_[m - 1] = value;
    } else if (key == "rupee") {
      t.rupee_sg_ = value;
    } else if (key == "rupees") {
      t.rupee_pl_ = value;
    } else if (key == "paisa") {
      t.paisa_sg_ = value;
    } else if (key == "paise") {
      t.paisa_pl_ = value;
    } else if (key == "percent") {
      t.percent_ = value;
    } else if (key == "point") {
      t.point_ = value;
    } else if (key.rfind("letter", 0) == 0 && key.size() == 7) {
      const char c = key[6];
      if (c < 'A' || c > 'Z') {
        throw Error(ErrorCode::BadInput, "bad letter slot: " + key);
      }
      t.letters_[c - 'A'] = value;
    } else {
      throw Error(ErrorCode::BadInput, "unknown spellout slot: " + key);
    }
  }

  // Every slot must be filled; a hole here is a data bug.
  for (int n = 0; n <= 99; ++n) {
    if (t.cardinals_[n].empty()) {
      throw Error(ErrorCode::BadInput,
                  "missing cardinal " + std::to_string(n));
    }
  }
  for (int m = 1; m <= 12; ++m) {
    if (t.months_[m - 1].empty()) {
      throw Error(ErrorCode::BadInput, "missing month " + std::to_string(m));
    }
  }
  for (char c = 'A'; c <= 'Z'; ++c) {
    if (t.letters_[c - 'A'].empty()) {
      throw Error(ErrorCode::BadInput, std::string("missing letter ") + c);
    }
  }
  for (const std::string* s :
       {&t.hundred_, &t.thousand_, &t.lakh_, &t.crore_, &t.rupee_sg_,
        &t.rupee_pl_, &t.paisa_sg_, &t.paisa_pl_, &t.percent_, &t.point_}) {
    if (s->empty()) {
      throw Error(ErrorCode::BadInput, "incomplete spellout table");
    }
  }
  return t;
}

const SpelloutTable& SpelloutTable::for_lang(Lang lang) {
  static const SpelloutTable hi =
      parse(tables::embedded_spellout_source(Lang::Hi), Lang::Hi);
  static const SpelloutTable te =
      parse(tables::embedded_spellout_source(Lang::Te), Lang::Te);
  static const SpelloutTable ta =
      parse(tables::embedded_spellout_source(Lang::Ta), Lang::Ta);
  switch (lang) {
    case Lang::Te: return te;
    case Lang::Ta: return ta;
    case Lang::Hi: return hi;
  }
  return hi;
}

const std::string& SpelloutTable::small_cardinal(int n) const {
  if (n < 0 || n > 99) {
    throw Error(ErrorCode::OutOfRange,
                "small cardinal out of range: " + std::to_string(n));
  }
  return cardinals_[n];
}

const std::string& SpelloutTable::month(int m) const {
  if (m < 1 || m > 12) {
    throw Error(ErrorCode::OutOfRange, "month out of range: " + std::to_string(m));
  }
  return months_[m - 1];
}

const std::string& SpelloutTable::rupee(bool plural) const {
  return plural ? rupee_pl_ : rupee_sg_;
}

const std::string& SpelloutTable::paisa(bool plural) const {
  return plural ? paisa_pl_ : paisa_sg_;
}

const std::string& SpelloutTable::letter(char upper) const {
  if (upper < 'A' || upper > 'Z') {
    throw Error(ErrorCode::OutOfRange, "no letter name for that codepoint");
  }
  return letters_[upper - 'A'];
}

std::string spell_cardinal(std::int64_t n, Lang lang) {
  if (n < 0 || n > kMaxSpellable) {
    throw Error(ErrorCode::OutOfRange,
                "cardinal out of range: " + std::to_string(n));
  }
  const SpelloutTable& t = SpelloutTable::for_lang(lang);
  if (n == 0) {
    return t.small_cardinal(0);
  }

  const auto crore = static_cast<int>(n / 10'000'000);
  const auto lakh = static_cast<int>((n / 100'000) % 100);
  const auto thousand = static_cast<int>((n / 1'000) % 100);
  const auto hundred = static_cast<int>((n / 100) % 10);
  const auto rest = static_cast<int>(n % 100);

  std::string out;
  const auto add = [&out](const std::string& part) {
    if (!out.empty()) out += ' ';
    out += part;
  };
  if (crore > 0) {
    add(t.small_cardinal(crore));
    add(t.crore());
  }
  if (lakh > 0) {
    add(t.small_cardinal(lakh));
    add(t.lakh());
  }
  if (thousand > 0) {
    add(t.small_cardinal(thousand));
    add(t.thousand());
  }
  if (hundred > 0) {
    add(t.small_cardinal(hundred));
    add(t.hundred());
  }
  if (rest > 0) {
    add(t.small_cardinal(rest));
  }
  return out;
}

namespace {

// Broadcast-style year reading: 1100-1999 as "<hundreds> <hundred-word>
// <remainder>", everything else as a plain cardinal.
std::string spell_year(std::int64_t year, Lang lang) {
  const SpelloutTable& t = SpelloutTable::for_lang(lang);
  if (year >= 1100 && year <= 1999) {
    std::string out = t.small_cardinal(static_cast<int>(year / 100));
    out += ' ';
    out += t.hundred();
    if (year % 100 != 0) {
      out += ' ';
      out += t.small_cardinal(static_cast<int>(year % 100));
    }
    return out;
  }
  return spell_cardinal(year, lang);
}

}  // namespace

std::string spell_date(int day, int month, std::int64_t year, Lang lang) {
  if (day < 1 || day > 31) {
    throw Error(ErrorCode::OutOfRange, "day out of range: " + std::to_string(day));
  }
  if (month < 1 || month > 12) {
    throw Error(ErrorCode::OutOfRange,
                "month out of range: " + std::to_string(month));
  }
  if (year < 0 || year > kMaxSpellable) {
    throw Error(ErrorCode::OutOfRange,
                "year out of range: " + std::to_string(year));
  }
  const SpelloutTable& t = SpelloutTable::for_lang(lang);
  std::string out = t.small_cardinal(day);
  out += ' ';
  out += t.month(month);
  out += ' ';
  out += spell_year(year, lang);
  return out;
}

namespace {

constexpr char32_t kRupeeSign = U'₹';

std::optional<int> digit_value(char32_t cp) {
  static constexpr char32_t bases[] = {U'0',    0x0966, 0x09E6, 0x0AE6,
                                       0x0BE6, 0x0C66, 0x0CE6, 0x0D66};
  for (char32_t base : bases) {
    if (cp >= base && cp <= base + 9) {
      return static_cast<int>(cp - base);
    }
  }
  return std::nullopt;
}

bool is_latin_alpha(char32_t cp) {
  if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z')) return true;
  if (cp == 0x00D7 || cp == 0x00F7) return false;  // multiplication/division
  if (cp >= 0x00C0 && cp <= 0x024F) return true;   // Latin-1..Extended-B letters
  if (cp >= 0x1E00 && cp <= 0x1EFF) return true;   // Latin Extended Additional
  return false;
}

struct Match {
  std::size_t length = 0;  // codepoints consumed
  std::string replacement;
  std::vector<Warning> warnings;
};

struct NumberToken {
  std::size_t length = 0;   // includes any comma separators
  std::int64_t value = 0;
  bool overflow = false;
  int digit_count = 0;
};

// Reads a digit sequence (any supported script) with optional comma grouping.
std::optional<NumberToken> read_int(const std::u32string& cps, std::size_t pos,
                                    bool allow_commas) {
  NumberToken tok;
  std::size_t i = pos;
  while (i < cps.size()) {
    if (auto d = digit_value(cps[i])) {
      if (tok.value > kMaxSpellable) {
        tok.overflow = true;  // keep consuming, value no longer meaningful
      } else {
        tok.value = tok.value * 10 + *d;
      }
      ++tok.digit_count;
      ++i;
    } else if (allow_commas && cps[i] == U',' && i + 1 < cps.size() &&
               digit_value(cps[i + 1])) {
      ++i;
    } else {
      break;
    }
  }
  if (tok.digit_count == 0) {
    return std::nullopt;
  }
  tok.overflow = tok.overflow || tok.value > kMaxSpellable;
  tok.length = i - pos;
  return tok;
}

std::string slice_text(const std::u32string& cps, std::size_t pos,
                       std::size_t len) {
  return utf8::encode(std::u32string_view(cps).substr(pos, len));
}

Warning out_of_range_warning(const std::string& literal) {
  return Warning{"number_out_of_range",
                 "numeric value exceeds the spellable range, passed through: " +
                     literal};
}

// A numeric run must not start or end mid-number.
bool at_number_boundary(const std::u32string& cps, std::size_t pos) {
  return pos == 0 || !digit_value(cps[pos - 1]);
}

std::string spell_digits(const std::u32string& cps, std::size_t pos,
                         std::size_t count, const SpelloutTable& t) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (auto d = digit_value(cps[pos + i])) {
      if (!out.empty()) out += ' ';
      out += t.small_cardinal(*d);
    }
  }
  return out;
}

// dd/mm/yyyy or dd-mm-yyyy with in-range day and month.
std::optional<Match> try_date(const std::u32string& cps, std::size_t pos,
                              Lang lang) {
  if (!at_number_boundary(cps, pos)) return std::nullopt;
  auto day = read_int(cps, pos, false);
  if (!day || day->digit_count > 2) return std::nullopt;
  std::size_t i = pos + day->length;
  if (i >= cps.size() || (cps[i] != U'/' && cps[i] != U'-')) return std::nullopt;
  const char32_t sep = cps[i++];
  auto month = read_int(cps, i, false);
  if (!month || month->digit_count > 2) return std::nullopt;
  i += month->length;
  if (i >= cps.size() || cps[i] != sep) return std::nullopt;
  ++i;
  auto year = read_int(cps, i, false);
  if (!year || year->digit_count != 4) return std::nullopt;
  i += year->length;
  if (i < cps.size() && digit_value(cps[i])) return std::nullopt;
  if (day->value < 1 || day->value > 31 || month->value < 1 ||
      month->value > 12) {
    return std::nullopt;
  }
  Match m;
  m.length = i - pos;
  m.replacement = spell_date(static_cast<int>(day->value),
                             static_cast<int>(month->value), year->value, lang);
  return m;
}

// ₹n, Rs. n, Rs n with optional paise decimals (1-2 digits).
std::optional<Match> try_currency(const std::u32string& cps, std::size_t pos,
                                  Lang lang) {
  std::size_t i = pos;
  if (cps[i] == kRupeeSign) {
    ++i;
    while (i < cps.size() && cps[i] == U' ') ++i;
  } else if (cps[i] == U'R' && i + 1 < cps.size() && cps[i + 1] == U's' &&
             (pos == 0 || !is_latin_alpha(cps[pos - 1]))) {
    i += 2;
    if (i < cps.size() && cps[i] == U'.') ++i;
    if (i >= cps.size() || cps[i] != U' ') return std::nullopt;
    while (i < cps.size() && cps[i] == U' ') ++i;
  } else {
    return std::nullopt;
  }

  auto rupees = read_int(cps, i, true);
  if (!rupees) return std::nullopt;
  i += rupees->length;

  int paise = 0;
  if (i + 1 < cps.size() && cps[i] == U'.' && digit_value(cps[i + 1])) {
    auto frac = read_int(cps, i + 1, false);
    if (frac && frac->digit_count <= 2) {
      paise = static_cast<int>(frac->value);
      if (frac->digit_count == 1) paise *= 10;
      i += 1 + frac->length;
    }
    // three or more decimals: not a money amount, leave them to the
    // number rule
  }

  Match m;
  m.length = i - pos;
  if (rupees->overflow) {
    m.replacement = slice_text(cps, pos, m.length);
    m.warnings.push_back(out_of_range_warning(m.replacement));
    return m;
  }

  const SpelloutTable& t = SpelloutTable::for_lang(lang);
  std::string out;
  if (rupees->value > 0 || paise == 0) {
    out = spell_cardinal(rupees->value, lang);
    out += ' ';
    out += t.rupee(rupees->value != 1);
  }
  if (paise > 0) {
    if (!out.empty()) out += ' ';
    out += spell_cardinal(paise, lang);
    out += ' ';
    out += t.paisa(paise != 1);
  }
  m.replacement = std::move(out);
  return m;
}

// n% with n an integer or decimal.
std::optional<Match> try_percent(const std::u32string& cps, std::size_t pos,
                                 Lang lang) {
  if (!at_number_boundary(cps, pos)) return std::nullopt;
  auto num = read_int(cps, pos, true);
  if (!num) return std::nullopt;
  std::size_t i = pos + num->length;

  std::size_t frac_pos = 0, frac_count = 0;
  if (i + 1 < cps.size() && cps[i] == U'.' && digit_value(cps[i + 1])) {
    auto frac = read_int(cps, i + 1, false);
    frac_pos = i + 1;
    frac_count = frac->digit_count;
    i += 1 + frac->length;
  }
  if (i >= cps.size() || cps[i] != U'%') return std::nullopt;
  ++i;

  Match m;
  m.length = i - pos;
  if (num->overflow) {
    m.replacement = slice_text(cps, pos, m.length);
    m.warnings.push_back(out_of_range_warning(m.replacement));
    return m;
  }
  const SpelloutTable& t = SpelloutTable::for_lang(lang);
  std::string out = spell_cardinal(num->value, lang);
  if (frac_count > 0) {
    out += ' ';
    out += t.point();
    out += ' ';
    out += spell_digits(cps, frac_pos, frac_count, t);
  }
  out += ' ';
  out += t.percent();
  m.replacement = std::move(out);
  return m;
}

// Bare integer (optional comma grouping) or decimal.
std::optional<Match> try_number(const std::u32string& cps, std::size_t pos,
                                Lang lang) {
  if (!at_number_boundary(cps, pos)) return std::nullopt;
  auto num = read_int(cps, pos, true);
  if (!num) return std::nullopt;
  std::size_t i = pos + num->length;

  std::size_t frac_pos = 0, frac_count = 0;
  if (i + 1 < cps.size() && cps[i] == U'.' && digit_value(cps[i + 1])) {
    auto frac = read_int(cps, i + 1, false);
    frac_pos = i + 1;
    frac_count = frac->digit_count;
    i += 1 + frac->length;
  }

  Match m;
  m.length = i - pos;
  if (num->overflow) {
    m.replacement = slice_text(cps, pos, m.length);
    m.warnings.push_back(out_of_range_warning(m.replacement));
    return m;
  }
  const SpelloutTable& t = SpelloutTable::for_lang(lang);
  std::string out = spell_cardinal(num->value, lang);
  if (frac_count > 0) {
    out += ' ';
    out += t.point();
    out += ' ';
    out += spell_digits(cps, frac_pos, frac_count, t);
  }
  m.replacement = std::move(out);
  return m;
}

// Standalone single Latin letter -> native letter name. Only ASCII letters
// have table names; runs of length >= 2 are never touched.
std::optional<Match> try_letter(const std::u32string& cps, std::size_t pos,
                                Lang lang) {
  const char32_t cp = cps[pos];
  const bool ascii_letter =
      (cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z');
  if (!ascii_letter) return std::nullopt;
  if (pos > 0 && is_latin_alpha(cps[pos - 1])) return std::nullopt;
  if (pos + 1 < cps.size() && is_latin_alpha(cps[pos + 1])) return std::nullopt;

  const char upper = static_cast<char>(cp >= U'a' ? cp - (U'a' - U'A') : cp);
  Match m;
  m.length = 1;
  m.replacement = SpelloutTable::for_lang(lang).letter(upper);
  return m;
}

}  // namespace

NormaliseResult normalise(std::string_view text, Lang lang) {
  const std::u32string cps = utf8::decode(text);
  NormaliseResult result;
  result.text.reserve(text.size());

  std::size_t i = 0;
  bool last_was_replacement = false;
  while (i < cps.size()) {
    std::optional<Match> best;
    // Longest match wins; ties go to the earlier rule in this order.
    for (auto* rule : {&try_date, &try_currency, &try_percent, &try_number,
                       &try_letter}) {
      auto m = (*rule)(cps, i, lang);
      if (m && (!best || m->length > best->length)) {
        best = std::move(m);
      }
    }
    if (best) {
      if (last_was_replacement) {
        result.text += ' ';  // keep back-to-back expansions apart ("B2B")
      }
      result.text += best->replacement;
      for (auto& w : best->warnings) {
        result.warnings.push_back(std::move(w));
      }
      i += best->length;
      last_was_replacement = true;
    } else {
      utf8::append(result.text, cps[i]);
      ++i;
      last_was_replacement = false;
    }
  }
  return result;
}

}  // namespace koyal
