#pragma once

#include <string_view>

#include "koyal/script.hpp"

namespace koyal::tables {

// Embedded ISO-15919 table source for a Brahmic script; empty view for
// PassThrough. Format: one entry per line, hex codepoint(s), TAB, output,
// TAB, flag (C/V/X/D/P/R); '#' comments; LF line endings.
std::string_view embedded_table_source(ScriptClass script);

}  // namespace koyal::tables
