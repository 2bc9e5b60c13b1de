#include <doctest.h>

#include <random>

#include "koyal/script.hpp"
#include "koyal/utf8.hpp"
#include "support/gen.hpp"

using namespace koyal;

TEST_CASE("classify_char covers the seven block ranges") {
  CHECK(classify_char(U'న') == ScriptClass::Telugu);   // న
  CHECK(classify_char(U'A') == ScriptClass::PassThrough);
  CHECK(classify_char(U'க') == ScriptClass::Tamil);    // க
  CHECK(classify_char(U'ऀ') == ScriptClass::Devanagari);
  CHECK(classify_char(U'ॿ') == ScriptClass::Devanagari);
  CHECK(classify_char(U'ঀ') == ScriptClass::Bengali);
  CHECK(classify_char(U'઀') == ScriptClass::Gujarati);
  CHECK(classify_char(U'౿') == ScriptClass::Telugu);
  CHECK(classify_char(U'ಀ') == ScriptClass::Kannada);
  CHECK(classify_char(U'ഀ') == ScriptClass::Malayalam);
  CHECK(classify_char(U'ൿ') == ScriptClass::Malayalam);
  // block neighbours stay outside
  CHECK(classify_char(U'ࣿ') == ScriptClass::PassThrough);
  CHECK(classify_char(U'඀') == ScriptClass::PassThrough);
  // Vedic extensions are deliberately pass-through
  CHECK(classify_char(U'᳐') == ScriptClass::PassThrough);
}

TEST_CASE("joiners inherit the surrounding class") {
  CHECK(classify_char(kZwnj) == std::nullopt);
  CHECK(classify_char(kZwj) == std::nullopt);
}

TEST_CASE("segment: worked example spans") {
  const auto runs = segment("మా CEO");
  REQUIRE(runs.size() == 2);
  CHECK(runs[0].text == "మా");
  CHECK(runs[0].script == ScriptClass::Telugu);
  CHECK(runs[0].start == 0);
  CHECK(runs[0].end == 2);
  CHECK(runs[1].text == " CEO");
  CHECK(runs[1].script == ScriptClass::PassThrough);
  CHECK(runs[1].start == 2);
  CHECK(runs[1].end == 6);
}

TEST_CASE("segment: empty input") {
  CHECK(segment("").empty());
}

TEST_CASE("segment: three-way split across scripts") {
  const auto runs = segment("नमस्ते, hello ௧");
  REQUIRE(runs.size() == 3);
  CHECK(runs[0].script == ScriptClass::Devanagari);
  CHECK(runs[0].text == "नमस्ते");
  CHECK(runs[1].script == ScriptClass::PassThrough);
  CHECK(runs[1].text == ", hello ");
  CHECK(runs[2].script == ScriptClass::Tamil);
  CHECK(runs[2].text == "௧");
}

TEST_CASE("segment: joiner flanked by same class stays inside the run") {
  // క + virama + ZWNJ + క : a single Telugu run
  const std::string text = "క్‌క";
  const auto runs = segment(text);
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].script == ScriptClass::Telugu);
  CHECK(runs[0].text == text);
}

TEST_CASE("segment: joiner at class boundary attaches to the preceding run") {
  const auto runs = segment("క‌a");
  REQUIRE(runs.size() == 2);
  CHECK(runs[0].text == "క‌");
  CHECK(runs[0].script == ScriptClass::Telugu);
  CHECK(runs[1].text == "a");
}

TEST_CASE("segment: leading joiner attaches to the first run") {
  const auto runs = segment("‌క");
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].script == ScriptClass::Telugu);
  CHECK(runs[0].text == "‌క");
}

TEST_CASE("segment: joiners only") {
  const auto runs = segment("‌‍");
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].script == ScriptClass::PassThrough);
}

TEST_CASE("segment is total over raw block codepoints, assigned or not") {
  std::mt19937 rng(0x0B10);
  const std::pair<char32_t, char32_t> ranges[] = {
      {0x0900, 0x097F}, {0x0980, 0x09FF}, {0x0A80, 0x0AFF}, {0x0B80, 0x0BFF},
      {0x0C00, 0x0C7F}, {0x0C80, 0x0CFF}, {0x0D00, 0x0D7F}, {0x0020, 0x007E},
  };
  std::uniform_int_distribution<std::size_t> pick_range(0, std::size(ranges) - 1);
  std::uniform_int_distribution<std::size_t> len(0, 24);
  std::uniform_int_distribution<int> joiner(0, 19);
  for (int iter = 0; iter < 1000; ++iter) {
    std::u32string cps;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      if (joiner(rng) == 0) {
        cps += (rng() & 1) ? kZwj : kZwnj;
        continue;
      }
      const auto [lo, hi] = ranges[pick_range(rng)];
      cps += static_cast<char32_t>(
          std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng));
    }
    const std::string text = utf8::encode(cps);
    const auto runs = segment(text);
    std::string rebuilt;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      rebuilt += runs[i].text;
      if (i > 0) CHECK(runs[i].script != runs[i - 1].script);
    }
    CHECK(rebuilt == text);
  }
}

TEST_CASE("segment properties: lossless, maximal, class-pure") {
  std::mt19937 rng(0xC0DE);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::string text = testgen::random_mixed(rng);
    const auto runs = segment(text);

    std::string rebuilt;
    std::size_t expected_start = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      rebuilt += runs[i].text;
      CHECK(runs[i].start == expected_start);
      CHECK(runs[i].end > runs[i].start);
      CHECK(runs[i].end - runs[i].start == utf8::length(runs[i].text));
      expected_start = runs[i].end;
      if (i > 0) {
        CHECK(runs[i].script != runs[i - 1].script);
      }
      for (char32_t cp : utf8::decode(runs[i].text)) {
        if (cp == kZwnj || cp == kZwj) continue;
        CHECK(classify_char(cp) == runs[i].script);
      }
    }
    CHECK(rebuilt == text);
    CHECK(expected_start == utf8::length(text));
  }
}
