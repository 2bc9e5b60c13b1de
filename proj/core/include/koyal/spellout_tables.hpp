#pragma once

#include <string_view>

#include "koyal/normaliser.hpp"

namespace koyal::tables {

// Embedded spellout word inventory for a language. Format: one "key TAB
// value" per line; '#' comments; LF line endings.
std::string_view embedded_spellout_source(Lang lang);

}  // namespace koyal::tables
