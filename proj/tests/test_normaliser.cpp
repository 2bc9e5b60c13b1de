#include <doctest.h>

#include <random>
#include <set>

#include "koyal/errors.hpp"
#include "koyal/normaliser.hpp"
#include "koyal/translit.hpp"
#include "koyal/utf8.hpp"

using namespace koyal;

namespace {

bool has_any_digit(const std::string& text) {
  for (char32_t cp : utf8::decode(text)) {
    if (cp >= U'0' && cp <= U'9') return true;
    static constexpr char32_t bases[] = {0x0966, 0x09E6, 0x0AE6, 0x0BE6,
                                         0x0C66, 0x0CE6, 0x0D66};
    for (char32_t base : bases) {
      if (cp >= base && cp <= base + 9) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("spell_cardinal: frozen examples") {
  CHECK(spell_cardinal(0, Lang::Hi) == "शून्य");
  CHECK(spell_cardinal(3, Lang::Te) == "మూడు");
  CHECK(spell_cardinal(100000, Lang::Hi) == "एक लाख");
  CHECK(spell_cardinal(26, Lang::Hi) == "छब्बीस");
  CHECK(spell_cardinal(50, Lang::Hi) == "पचास");
  CHECK(spell_cardinal(2000, Lang::Hi) == "दो हज़ार");
  CHECK(spell_cardinal(10000000, Lang::Hi) == "एक करोड़");
  CHECK(spell_cardinal(999999999, Lang::Hi) ==
        "निन्यानवे करोड़ निन्यानवे लाख निन्यानवे हज़ार नौ सौ निन्यानवे");
  CHECK(spell_cardinal(105, Lang::Te) == "ఒకటి వంద ఐదు");
  CHECK(spell_cardinal(21, Lang::Ta) == "இருபத்து ஒன்று");
}

TEST_CASE("spell_cardinal: out of range") {
  CHECK_THROWS_AS(spell_cardinal(-1, Lang::Hi), Error);
  CHECK_THROWS_AS(spell_cardinal(1000000000, Lang::Hi), Error);
  try {
    spell_cardinal(-1, Lang::Hi);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("spell_cardinal is injective on 0..9999, sampled above") {
  for (Lang lang : {Lang::Hi, Lang::Te, Lang::Ta}) {
    CAPTURE(to_string(lang));
    std::set<std::string> seen;
    for (int n = 0; n <= 9999; ++n) {
      const auto [_, fresh] = seen.insert(spell_cardinal(n, lang));
      CHECK(fresh);
    }
    std::mt19937 rng(0x5E11);
    std::uniform_int_distribution<std::int64_t> dist(10000, kMaxSpellable);
    for (int i = 0; i < 3000; ++i) {
      const auto [_, fresh] = seen.insert(spell_cardinal(dist(rng), lang));
      CHECK(fresh);
    }
  }
}

TEST_CASE("spell_date: frozen examples") {
  CHECK(spell_date(26, 1, 1950, Lang::Hi) == "छब्बीस जनवरी उन्नीस सौ पचास");
  CHECK(spell_date(1, 1, 2000, Lang::Hi) == "एक जनवरी दो हज़ार");
  CHECK_THROWS_AS(spell_date(32, 1, 2000, Lang::Hi), Error);
  CHECK_THROWS_AS(spell_date(1, 13, 2000, Lang::Hi), Error);
  try {
    spell_date(32, 1, 2000, Lang::Hi);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("normalise: currency") {
  CHECK(normalise("₹50 दो", Lang::Hi).text == "पचास रुपये दो");
  CHECK(normalise("₹1", Lang::Hi).text == "एक रुपया");
  CHECK(normalise("Rs. 50", Lang::Hi).text == "पचास रुपये");
  CHECK(normalise("Rs 50", Lang::Hi).text == "पचास रुपये");
  CHECK(normalise("₹1.50", Lang::Hi).text == "एक रुपया पचास पैसे");
  CHECK(normalise("₹0.05", Lang::Hi).text == "पाँच पैसे");
  CHECK(normalise("₹2.5", Lang::Hi).text == "दो रुपये पचास पैसे");
  // bare "Rs" with no digits is not currency
  CHECK(normalise("Rs kya?", Lang::Hi).text == "Rs kya?");
}

TEST_CASE("normalise: untouched text") {
  CHECK(normalise("hello", Lang::Hi).text == "hello");
  CHECK(normalise("", Lang::Hi).text == "");
  CHECK(normalise("नमस्ते दुनिया", Lang::Hi).text == "नमस्ते दुनिया");
}

TEST_CASE("normalise: single letters get native names, words do not") {
  CHECK(normalise("విటమిన్ A", Lang::Te).text == "విటమిన్ ఏ");
  CHECK(normalise("a", Lang::Hi).text == "ए");
  CHECK(normalise("AB", Lang::Hi).text == "AB");
  CHECK(normalise("B2B", Lang::Hi).text == "बी दो बी");
}

TEST_CASE("normalise: dates") {
  CHECK(normalise("26/01/1950", Lang::Hi).text == "छब्बीस जनवरी उन्नीस सौ पचास");
  CHECK(normalise("26-01-1950", Lang::Hi).text == "छब्बीस जनवरी उन्नीस सौ पचास");
  CHECK(normalise("1/1/2000 को", Lang::Hi).text == "एक जनवरी दो हज़ार को");
  // invalid calendar fields fall back to plain numbers
  CHECK(normalise("32/01/2000", Lang::Hi).text ==
        "बत्तीस/एक/दो हज़ार");
}

TEST_CASE("normalise: percent") {
  CHECK(normalise("50%", Lang::Hi).text == "पचास प्रतिशत");
  CHECK(normalise("3.5%", Lang::Hi).text == "तीन दशमलव पाँच प्रतिशत");
  CHECK(normalise("20%", Lang::Te).text == "ఇరవై శాతం");
}

TEST_CASE("normalise: integers, grouping, decimals") {
  CHECK(normalise("42", Lang::Hi).text == "बयालीस");
  CHECK(normalise("1,00,000", Lang::Hi).text == "एक लाख");
  CHECK(normalise("3.14", Lang::Hi).text == "तीन दशमलव एक चार");
  CHECK(normalise("५०", Lang::Hi).text == "पचास");   // native digits
  CHECK(normalise("౨౦", Lang::Te).text == "ఇరవై");
}

TEST_CASE("normalise: out-of-range numbers pass through with a warning") {
  const auto r = normalise("9999999999", Lang::Hi);
  CHECK(r.text == "9999999999");
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].code == "number_out_of_range");
  CHECK(normalise("1000000000", Lang::Hi).text == "1000000000");
  CHECK(normalise("999999999", Lang::Hi).warnings.empty());
}

TEST_CASE("normalise properties over generated numeric strings") {
  std::mt19937 rng(0xD161);
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<std::int64_t> value(0, kMaxSpellable);
  std::uniform_int_distribution<int> day(1, 31), month(1, 12),
      year(1000, 2999), pct(0, 100);

  for (Lang lang : {Lang::Hi, Lang::Te, Lang::Ta}) {
    for (int iter = 0; iter < 400; ++iter) {
      std::string text;
      switch (kind(rng)) {
        case 0: text = std::to_string(value(rng)); break;
        case 1: text = "₹" + std::to_string(value(rng) % 100000); break;
        case 2: text = std::to_string(pct(rng)) + "%"; break;
        case 3:
          text = std::to_string(day(rng)) + "/" + std::to_string(month(rng)) +
                 "/" + std::to_string(year(rng));
          break;
        case 4:
          text = std::to_string(value(rng) % 10000) + "." +
                 std::to_string(pct(rng));
          break;
        default:
          text = "देखो " + std::to_string(value(rng)) + " बार";
          break;
      }
      const auto once = normalise(text, lang);
      CHECK_FALSE(has_any_digit(once.text));          // everything expanded
      CHECK(once.warnings.empty());                   // all values in range
      CHECK(normalise(once.text, lang).text == once.text);  // idempotent
    }
  }
}

TEST_CASE("normalise never touches Latin words of length >= 2") {
  // so code-mix detection commutes with normalisation
  const std::string inputs[] = {
      "मैंने WhatsApp पे 2 message भेजे",
      "విటమిన్ A B12 complex 50%",
      "call me at 5 baje",
  };
  for (const auto& text : inputs) {
    const auto out = normalise(text, Lang::Hi).text;
    CHECK(detect_codemix(out) == detect_codemix(text));
  }
  // documented exception: an "Rs <n>" currency marker is consumed
  CHECK(normalise("Rs 50", Lang::Hi).text.find("Rs") == std::string::npos);
}
