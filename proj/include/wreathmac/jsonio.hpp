#pragma once

#include <string>

#include "wreathmac/multisym.hpp"

namespace wreathmac {

// Schur-expansion JSON: {"basis":"schur","terms":{"[[1],[],[2]]":"1 - q*t"}}.
// For r = 1 the keys take the classical form "s[2,1]".
std::string multisym_to_json(const MultiSymFn& f);
MultiSymFn multisym_from_json(const std::string& text, int r);

// {"key":<canonical key json>, "value":<multisym json>}
std::string cache_entry_to_json(const std::string& keyjson, const MultiSymFn& f);
std::pair<std::string, MultiSymFn> cache_entry_from_json(const std::string& text, int r);

}  // namespace wreathmac
