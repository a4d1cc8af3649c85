#pragma once

#include "xorban/families.hpp"

#include <iosfwd>
#include <string>

namespace xorban::cli
{

// Exit codes: 0 success, 1 bad input or unmet precondition, 2 failed
// self-verification.
int run( int argc, const char* const* argv, std::ostream& out, std::ostream& err );

// Sidecar format: {"kind": ..., "cycles": [[1, 2, 3], ...], "intersections": [...]}
// with 1-based ids.
[[nodiscard]] std::string labeling_to_json( const FamilyLabeling& labeling );
[[nodiscard]] FamilyLabeling labeling_from_json( const std::string& text );

} // namespace xorban::cli
