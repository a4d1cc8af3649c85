#include "helpers.hpp"
#include "oracle.hpp"

#include "xorban/error.hpp"
#include "xorban/families.hpp"

#include <doctest.h>

#include <random>

using namespace xorban;

namespace
{

int error_line( const std::string& text )
{
    try
    {
        (void)parse_network( text );
    }
    catch ( const ParseError& e )
    {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE( "parse the (1,2) double cycle" )
{
    const Network net = parse_network( "1 : x1 ^ x2\n2 : x1" );
    CHECK( net == gen_badc( 1, 2 ).network );
    REQUIRE( net.size() == 2 );
    CHECK( net.rule( 0 ).size() == 2 );
    CHECK( net.rule( 1 ).literals()[0].source == 0 );
}

TEST_CASE( "comments, blank lines and negations" )
{
    const Network net = parse_network( "# two automata\n\n2 : x1 ^ !x2   # trailing\n1 : x2\n" );
    REQUIRE( net.size() == 2 );
    CHECK( net.rule( 1 ).literals()[1].negated );
    CHECK( net.rule( 1 ).parity() );
    CHECK( emit_network( net ) == "1 : x2\n2 : x1 ^ !x2\n" );
}

TEST_CASE( "line-numbered diagnostics" )
{
    CHECK( error_line( "1 : x1 ^ x1" ) == 1 );
    CHECK( error_line( "1 : x1\n# c\n1 : x1" ) == 3 );
    CHECK( error_line( "1 : x1\n2 : " ) == 2 );
    CHECK( error_line( "1 : x1\n2 : y1" ) == 2 );
    CHECK( error_line( "1 : x1\n2 : x1 ^" ) == 2 );
    CHECK( error_line( "1 : x5\n2 : x1" ) == 1 );
    CHECK( error_line( "0 : x1" ) == 1 );
    CHECK( error_line( "1 x1" ) == 1 );
    // A gap is only visible once every line has been read.
    CHECK( error_line( "1 : x1\n3 : x1\n" ) > 0 );
    CHECK( error_line( "# nothing\n" ) > 0 );
    CHECK_THROWS_WITH_AS( (void)parse_network( "1 : x1 ^ x1" ), doctest::Contains( "duplicate" ), ParseError );
}

TEST_CASE( "load_network reports missing files" )
{
    CHECK_THROWS_AS( (void)load_network( "/nonexistent/net.txt" ), Error );
}

TEST_CASE( "emit and parse round-trip" )
{
    std::mt19937_64 rng( 21 );
    for ( int round = 0; round < 200; ++round )
    {
        const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 12 ) );
        const std::string text = emit_network( net );
        const Network back = parse_network( text );
        REQUIRE( back == net );
        REQUIRE( emit_network( back ) == text );
    }
}
