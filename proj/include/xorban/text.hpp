#pragma once

#include "xorban/core.hpp"

#include <string>
#include <string_view>

namespace xorban
{

// Network text format, one rule per line:
//
//     # comment
//     1 : x1 ^ x2
//     2 : !x1
//
// Ids are 1-based and every id in 1..n appears exactly once on the left.
[[nodiscard]] Network parse_network( std::string_view text );
[[nodiscard]] std::string emit_network( const Network& net );
[[nodiscard]] std::string format_rule( const LocalRule& rule );

[[nodiscard]] Network load_network( const std::string& path );

} // namespace xorban
