#include "xorban/text.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace xorban
{

namespace
{

std::string_view trim( std::string_view s )
{
    while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
        s.remove_prefix( 1 );
    while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
        s.remove_suffix( 1 );
    return s;
}

int parse_id( std::string_view s, int line, std::string_view what )
{
    int value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars( s.data(), end, value );
    if ( s.empty() || ec != std::errc{} || ptr != end || value < 1 )
        throw ParseError( line, "invalid " + std::string( what ) + " '" + std::string( s ) + "'" );
    return value;
}

Literal parse_literal( std::string_view s, int line )
{
    s = trim( s );
    if ( s.empty() )
        throw ParseError( line, "empty literal" );
    Literal lit;
    if ( s.front() == '!' )
    {
        lit.negated = true;
        s = trim( s.substr( 1 ) );
    }
    if ( s.empty() || s.front() != 'x' )
        throw ParseError( line, "literal must look like x<id> or !x<id>, got '" + std::string( s ) + "'" );
    lit.source = parse_id( s.substr( 1 ), line, "literal id" ) - 1;
    return lit;
}

} // namespace

Network parse_network( std::string_view text )
{
    std::map<int, std::pair<std::vector<Literal>, int>> rules; // id -> (literals, line)
    int line_no = 0;
    std::size_t pos = 0;
    while ( pos <= text.size() )
    {
        const std::size_t eol = std::min( text.find( '\n', pos ), text.size() );
        std::string_view line = text.substr( pos, eol - pos );
        pos = eol + 1;
        ++line_no;

        if ( const auto hash = line.find( '#' ); hash != std::string_view::npos )
            line = line.substr( 0, hash );
        line = trim( line );
        if ( line.empty() )
            continue;

        const auto colon = line.find( ':' );
        if ( colon == std::string_view::npos )
            throw ParseError( line_no, "expected '<id> : <literals>'" );
        const int id = parse_id( trim( line.substr( 0, colon ) ), line_no, "automaton id" );
        if ( id > max_automata )
            throw ParseError( line_no, "automaton id " + std::to_string( id ) + " exceeds the limit of " +
                                           std::to_string( max_automata ) );
        if ( rules.contains( id ) )
            throw ParseError( line_no, "automaton " + std::to_string( id ) + " already defined on line " +
                                           std::to_string( rules[id].second ) );

        std::string_view body = trim( line.substr( colon + 1 ) );
        if ( body.empty() )
            throw ParseError( line_no, "rule for automaton " + std::to_string( id ) + " is empty" );
        std::vector<Literal> lits;
        while ( true )
        {
            const auto caret = body.find( '^' );
            lits.push_back( parse_literal( body.substr( 0, caret ), line_no ) );
            if ( caret == std::string_view::npos )
                break;
            body = body.substr( caret + 1 );
        }
        for ( std::size_t a = 0; a < lits.size(); ++a )
            for ( std::size_t b = a + 1; b < lits.size(); ++b )
                if ( lits[a].source == lits[b].source )
                    throw ParseError( line_no, "duplicate source x" + std::to_string( lits[a].source + 1 ) +
                                                   " in rule for automaton " + std::to_string( id ) );
        rules[id] = { std::move( lits ), line_no };
    }

    if ( rules.empty() )
        throw ParseError( line_no, "no rules found" );
    const int n = rules.rbegin()->first;
    std::vector<LocalRule> out;
    for ( int id = 1; id <= n; ++id )
    {
        auto it = rules.find( id );
        if ( it == rules.end() )
            throw ParseError( line_no, "automaton " + std::to_string( id ) + " has no rule (ids must cover 1.." +
                                           std::to_string( n ) + ")" );
        for ( const Literal& lit : it->second.first )
            if ( lit.source >= n )
                throw ParseError( it->second.second, "literal x" + std::to_string( lit.source + 1 ) +
                                                         " refers past the last automaton " + std::to_string( n ) );
        out.emplace_back( it->second.first );
    }
    return Network( std::move( out ) );
}

std::string format_rule( const LocalRule& rule )
{
    std::string out;
    for ( const Literal& lit : rule.literals() )
    {
        if ( !out.empty() )
            out += " ^ ";
        if ( lit.negated )
            out += '!';
        out += 'x' + std::to_string( lit.source + 1 );
    }
    return out;
}

std::string emit_network( const Network& net )
{
    std::string out;
    for ( int i = 0; i < net.size(); ++i )
        out += std::to_string( i + 1 ) + " : " + format_rule( net.rule( i ) ) + '\n';
    return out;
}

Network load_network( const std::string& path )
{
    std::ifstream in( path );
    if ( !in )
        throw Error( "cannot open network file '" + path + "'" );
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network( buf.str() );
}

} // namespace xorban
