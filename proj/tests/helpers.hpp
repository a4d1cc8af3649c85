#pragma once

#include "xorban/core.hpp"
#include "xorban/text.hpp"

#include <algorithm>
#include <string>
#include <vector>

inline xorban::Network net_of( const std::string& text ) { return xorban::parse_network( text ); }

inline xorban::Config cfg( const std::string& bits ) { return xorban::config_from_string( bits, static_cast<int>( bits.size() ) ); }

inline std::vector<xorban::Config> sorted( std::vector<xorban::Config> xs )
{
    std::sort( xs.begin(), xs.end() );
    return xs;
}
