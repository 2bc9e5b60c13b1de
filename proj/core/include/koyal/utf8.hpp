#pragma once

#include <string>
#include <string_view>

namespace koyal::utf8 {

// Decodes UTF-8 into Unicode scalar values. Malformed bytes become U+FFFD,
// one replacement per offending byte, so decoding is total.
std::u32string decode(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);
std::string encode(char32_t cp);

// Number of Unicode scalar values in a UTF-8 string.
std::size_t length(std::string_view text);

}  // namespace koyal::utf8
