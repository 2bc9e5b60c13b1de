#!/usr/bin/env python3
"""Generates the frozen normaliser cases (tests/data/normaliser_cases_*.tsv).

Each line is "input TAB expected". Expected strings come from
spellout_oracle.py; the in-context rows wrap the pattern in plain native
words the normaliser must leave untouched.
"""

import pathlib

import spellout_oracle as so

OUT_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"

CARDINAL_VALUES = [
    0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 15, 17, 19, 20, 21, 26, 29,
    30, 38, 40, 47, 50, 55, 60, 63, 70, 79, 80, 89, 90, 95, 99, 100, 101,
    105, 110, 199, 200, 555, 999, 1000, 1001, 1100, 1999, 2000, 9999,
    10000, 10500, 99999, 100000, 100001, 123456, 999999, 1000000, 2500000,
    9999999, 10000000, 10000001, 12345678, 99999999, 100000000, 123456789,
    999999999,
]

CURRENCY = [
    ("₹0", 0, 0), ("₹1", 1, 0), ("₹2", 2, 0), ("₹50", 50, 0),
    ("₹100", 100, 0), ("₹1.50", 1, 50), ("₹0.05", 0, 5), ("₹2.5", 2, 50),
    ("₹0.01", 0, 1), ("Rs. 99", 99, 0), ("Rs 1000", 1000, 0),
    ("₹1,00,000", 100000, 0),
]

PERCENTS = [0, 1, 50, 99, 100]

DATES = [
    (26, 1, 1950), (1, 1, 2000), (15, 8, 1947), (31, 12, 1999),
    (2, 10, 1869), (29, 2, 2024), (9, 9, 999), (10, 6, 2025),
]

DECIMALS = [("3.14", 3, "14"), ("0.5", 0, "5"), ("99.99", 99, "99"),
            ("12.305", 12, "305")]

LETTERS = ["A", "z", "Q"]

# plain native words for in-context rows, per language
CONTEXT = {
    "hi": ("मुझे", "चाहिए"),
    "te": ("నాకు", "కావాలి"),
    "ta": ("எனக்கு", "வேண்டும்"),
}

NATIVE_DIGIT_CASES = {
    "hi": [("५०", 50), ("१००", 100)],
    "te": [("౨౦", 20), ("౯", 9)],
    "ta": [("௫", 5), ("௧௨", 12)],
}


def rows_for(lang):
    rows = []
    for n in CARDINAL_VALUES:
        rows.append((str(n), so.cardinal(n, lang)))
    for text, rupees, paise in CURRENCY:
        rows.append((text, so.currency_words(rupees, paise, lang)))
    for n in PERCENTS:
        rows.append((f"{n}%", so.percent_words(n, lang)))
    for d, m, y in DATES:
        rows.append((f"{d:02d}/{m:02d}/{y:04d}", so.date_words(d, m, y, lang)))
        if len(rows) % 2 == 0:  # exercise the dash separator on half of them
            rows.pop()
            rows.append((f"{d:02d}-{m:02d}-{y:04d}",
                         so.date_words(d, m, y, lang)))
    for text, int_part, frac in DECIMALS:
        rows.append((text, so.decimal_words(int_part, frac, lang)))
    for ch in LETTERS:
        rows.append((ch, so.letter_word(ch, lang)))
    for text, value in NATIVE_DIGIT_CASES[lang]:
        rows.append((text, so.cardinal(value, lang)))

    before, after = CONTEXT[lang]
    rows.append((f"{before} ₹50 {after}",
                 f"{before} {so.currency_words(50, 0, lang)} {after}"))
    rows.append((f"{before} 7 {after}",
                 f"{before} {so.cardinal(7, lang)} {after}"))
    rows.append((f"{before} B {after}",
                 f"{before} {so.letter_word('B', lang)} {after}"))
    rows.append((f"{before} 15/08/1947 {after}",
                 f"{before} {so.date_words(15, 8, 1947, lang)} {after}"))
    return rows


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for lang in ("hi", "te", "ta"):
        rows = rows_for(lang)
        assert len(rows) >= 100, (lang, len(rows))
        path = OUT_DIR / f"normaliser_cases_{lang}.tsv"
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write("# frozen normaliser cases: input TAB expected\n")
            for text, expected in rows:
                f.write(f"{text}\t{expected}\n")
        print(f"wrote {path} ({len(rows)} cases)")


if __name__ == "__main__":
    main()
