#include "helpers.hpp"
#include "oracle.hpp"

#include "xorban/error.hpp"
#include "xorban/families.hpp"

#include <doctest.h>

#include <random>

using namespace xorban;

namespace
{

const std::string small_net = "1 : x2\n2 : x1 ^ !x2\n";
const std::string badc12 = "1 : x1 ^ x2\n2 : x1\n";
// Center at automaton 2, as in the usual drawing of the (2,2) double cycle.
const std::string badc22 = "1 : x2\n2 : x1 ^ x3\n3 : x2\n";

} // namespace

TEST_CASE( "configuration strings put automaton k at character k" )
{
    CHECK( config_to_string( 0b001, 3 ) == "100" );
    CHECK( config_from_string( "011", 3 ) == 0b110 );
    CHECK_THROWS_AS( (void)config_from_string( "01", 3 ), Error );
    CHECK_THROWS_AS( (void)config_from_string( "0a1", 3 ), Error );
}

TEST_CASE( "eval_local" )
{
    const Network net = net_of( small_net );
    CHECK( eval_local( net, 1, cfg( "00" ) ) );
    CHECK_FALSE( eval_local( net, 0, cfg( "00" ) ) );
    CHECK_FALSE( eval_local( net_of( badc22 ), 1, cfg( "010" ) ) );
    CHECK_THROWS_AS( (void)eval_local( net, 2, cfg( "00" ) ), StructuralError );
}

TEST_CASE( "apply_update" )
{
    const Network b12 = net_of( badc12 );
    CHECK( apply_update( b12, 0, cfg( "01" ) ) == cfg( "01" ) );
    CHECK( apply_update( b12, singleton( 0 ), cfg( "01" ) ) == cfg( "11" ) );

    // Both leaves of the (2,2) double cycle copy the center, read from 101.
    const Network b22 = net_of( badc22 );
    const Config x = cfg( "101" );
    const Config w = singleton( 0 ) | singleton( 2 );
    CHECK( apply_update( b22, w, x ) == oracle::sync_update( b22, w, x ) );
    CHECK( apply_update( b22, w, x ) == cfg( "000" ) );
}

TEST_CASE( "stability and fixed points" )
{
    const Network b22 = net_of( badc22 );
    CHECK( is_fixed_point( b22, cfg( "000" ) ) );
    CHECK_FALSE( is_fixed_point( b22, cfg( "111" ) ) );
    CHECK_FALSE( is_stable( b22, 1, cfg( "111" ) ) );
    CHECK( is_stable( b22, 0, cfg( "111" ) ) );
    CHECK( unstable_set( b22, cfg( "111" ) ) == singleton( 1 ) );
    CHECK( apply_update( b22, full_set( 3 ), cfg( "000" ) ) == cfg( "000" ) );
}

TEST_CASE( "has_predecessor matches the in-degree scan" )
{
    std::mt19937_64 rng( 11 );
    for ( int round = 0; round < 60; ++round )
    {
        const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 7 ) );
        const auto deg = oracle::in_degrees( net );
        for ( Config x = 0; x < oracle::count( net ); ++x )
            REQUIRE( has_predecessor( net, x ) == ( deg[x] > 0 ) );
    }
}

TEST_CASE( "influencers are the literal sources" )
{
    CHECK( influencers( net_of( small_net ), 1 ) == std::vector<AutomatonId>{ 0, 1 } );
    CHECK( influencers( net_of( badc22 ), 2 ) == std::vector<AutomatonId>{ 1 } );
    CHECK( influencers( gen_flower( { 2, 3, 2, 2 } ).network, 0 ).size() == 4 );
}

TEST_CASE( "strong connectivity and shortest paths" )
{
    CHECK( is_strongly_connected( net_of( badc22 ) ) );
    CHECK_FALSE( is_strongly_connected( net_of( "1 : x1\n2 : x1\n" ) ) );
    const Network cycle = net_of( "1 : x4\n2 : x1\n3 : x2\n4 : x3\n" );
    const auto p = shortest_path( cycle, 0, singleton( 2 ) );
    REQUIRE( p );
    CHECK( *p == std::vector<AutomatonId>{ 0, 1, 2 } );
    CHECK_FALSE( shortest_path( net_of( "1 : x1\n2 : x1\n" ), 1, singleton( 0 ) ) );
}

TEST_CASE( "maximal nude paths" )
{
    SUBCASE( "intersection automata have length 0" )
    {
        const Family chain = gen_chain( { 3, 3, 3 } );
        for ( AutomatonId o : chain.labeling.intersections )
            CHECK( maximal_nude_path( chain.network, o ).length() == 0 );
    }
    SUBCASE( "a pure cycle is cut before repeating" )
    {
        const Network cycle = net_of( "1 : x3\n2 : x1\n3 : x2\n" );
        const NudePath p = maximal_nude_path( cycle, 0 );
        CHECK( p.length() == 2 );
        CHECK( p.automata == std::vector<AutomatonId>{ 1, 2, 0 } );
        CHECK( is_maximal_nude_path( cycle, p ) );
    }
    SUBCASE( "a leaf of the (2,2) double cycle" )
    {
        const NudePath p = maximal_nude_path( net_of( badc22 ), 2 );
        CHECK( p.automata == std::vector<AutomatonId>{ 1, 2 } );
        CHECK_FALSE( p.negative );
    }
    SUBCASE( "sign is the parity of negated arcs" )
    {
        const Network net = net_of( "1 : x1 ^ x4\n2 : !x1\n3 : !x2\n4 : !x3\n" );
        const NudePath p = maximal_nude_path( net, 3 );
        CHECK( p.automata == std::vector<AutomatonId>{ 0, 1, 2, 3 } );
        CHECK( p.negative );
        CHECK_FALSE( is_maximal_nude_path( net, { { 1, 2, 3 }, false } ) );
    }
}

TEST_CASE( "dual" )
{
    const Network net = gen_badc( 3, 2, SignClass::mixed ).network;
    CHECK( same_truth_tables( dual( dual( net ) ), net ) );

    // Every rule is replaced by x -> not f(not x).
    const Network d = dual( net );
    for ( Config x = 0; x < oracle::count( net ); ++x )
        for ( AutomatonId i = 0; i < net.size(); ++i )
            REQUIRE( oracle::eval( d, i, x ) != oracle::eval( net, i, x ^ full_set( net.size() ) ) );

    // A two-literal rule keeps its sources and changes parity.
    const Network two = net_of( "1 : x1 ^ x2\n2 : x1\n" );
    CHECK( same_truth_tables( dual( two ), net_of( "1 : !x1 ^ x2\n2 : x1\n" ) ) );
}

TEST_CASE( "reverse" )
{
    const Network b12 = net_of( badc12 );
    CHECK( same_truth_tables( reverse( b12 ), net_of( "1 : x1 ^ x2\n2 : !x1\n" ) ) );
    CHECK( oracle::fixed_points( reverse( b12 ) ) == std::vector<Config>{ cfg( "10" ) } );
    CHECK( oracle::unreachables( b12 ) == std::vector<Config>{ cfg( "10" ) } );

    // Without self-loops every rule is simply negated.
    const Network b33 = gen_badc( 3, 3 ).network;
    const Network r = reverse( b33 );
    for ( Config x = 0; x < oracle::count( b33 ); ++x )
        for ( AutomatonId i = 0; i < b33.size(); ++i )
            REQUIRE( oracle::eval( r, i, x ) != oracle::eval( b33, i, x ) );
}

TEST_CASE( "canonical" )
{
    const Network pos = gen_badc( 3, 3 ).network;
    CHECK( canonical( pos ) == pos );

    // A negative arc in the middle of a cycle moves to the center rule.
    CycleSpec c1 = CycleSpec::positive( 3 );
    c1.arc_negated[1] = true;
    const Network mid = gen_badc( c1, CycleSpec::positive( 3 ) ).network;
    const Network can = canonical( mid );
    for ( AutomatonId i = 1; i < can.size(); ++i )
        CHECK_FALSE( can.rule( i ).parity() );
    CHECK( can.rule( 0 ).parity() );
    CHECK( canonical( can ) == can );

    const AutomatonSet s = canonical_flip_set( mid );
    for ( Config x = 0; x < oracle::count( mid ); ++x )
        for ( AutomatonId i = 0; i < mid.size(); ++i )
            REQUIRE( oracle::eval( can, i, x ) == ( oracle::eval( mid, i, x ^ s ) != bit( s, i ) ) );
}

TEST_CASE( "flip" )
{
    const Network pos = gen_badc( 3, 4 ).network;
    CHECK( flip( pos, 0 ) == pos );
    CHECK( same_truth_tables( flip( pos, full_set( pos.size() ) ), gen_badc( 3, 4, SignClass::mixed ).network ) );
    CHECK_THROWS_AS( (void)flip( pos, singleton( 9 ) ), StructuralError );

    // Vertex flip at the center: literals read from it change sign, and so
    // does one literal of its own rule.
    const Network f = flip( pos, singleton( 0 ) );
    CHECK( f.rule( 1 ).literals()[0].negated );
    CHECK( f.rule( 3 ).literals()[0].negated );
    CHECK( f.rule( 0 ).parity() );
}

TEST_CASE( "contraction" )
{
    const Network trivial = net_of( "1 : x1\n2 : x2\n3 : x3\n" );
    CHECK( contraction( trivial ).network == trivial );

    const Contraction c = contraction( gen_flower( { 3, 3 } ).network );
    CHECK( c.kept == std::vector<AutomatonId>{ 0 } );
    REQUIRE( c.network.size() == 1 );
    CHECK( c.network.rule( 0 ).size() == 2 );
    CHECK( c.network.has_repeated_sources() );

    // Two disjoint positive cycles contract to two self-copying automata.
    const Network two = net_of( "1 : x3\n2 : x1\n3 : x2\n4 : x5\n5 : x4\n" );
    const Contraction c2 = contraction( two );
    CHECK( c2.network == net_of( "1 : x1\n2 : x2\n" ) );
    CHECK( oracle::fixed_points( two ).size() == 4 );
}

// ---------------------------------------------------------------------------
// Properties over random networks.

TEST_CASE( "updates only touch the updated automata" )
{
    std::mt19937_64 rng( 3 );
    for ( int round = 0; round < 200; ++round )
    {
        const int n = 1 + static_cast<int>( rng() % 8 );
        const Network net = oracle::random_network( rng, n );
        const Config w = rng() & full_set( n );
        const Config x = rng() & full_set( n );
        const Config y = apply_update( net, w, x );
        REQUIRE( ( ( x ^ y ) & ~w ) == 0 );
        REQUIRE( y == oracle::sync_update( net, w, x ) );
    }
}

TEST_CASE( "local functions are linear over GF(2)" )
{
    std::mt19937_64 rng( 5 );
    for ( int round = 0; round < 100; ++round )
    {
        const int n = 1 + static_cast<int>( rng() % 7 );
        const Network net = oracle::random_network( rng, n );
        const Config x = rng() & full_set( n );
        for ( AutomatonId i = 0; i < n; ++i )
        {
            const auto inf = influencers( net, i );
            for ( AutomatonId j = 0; j < n; ++j )
            {
                const bool changes = eval_local( net, i, x ) != eval_local( net, i, x ^ singleton( j ) );
                REQUIRE( changes == std::binary_search( inf.begin(), inf.end(), j ) );
            }
        }
    }
}

TEST_CASE( "transforms keep the interaction graph" )
{
    std::mt19937_64 rng( 7 );
    for ( int round = 0; round < 100; ++round )
    {
        const int n = 1 + static_cast<int>( rng() % 8 );
        const Network net = oracle::random_network( rng, n );
        for ( const Network& t : { dual( net ), reverse( net ), flip( net, rng() & full_set( n ) ), canonical( net ) } )
        {
            REQUIRE( t.size() == n );
            for ( AutomatonId i = 0; i < n; ++i )
                REQUIRE( influencers( t, i ) == influencers( net, i ) );
        }
    }
}

TEST_CASE( "flip conjugates the asynchronous dynamics" )
{
    std::mt19937_64 rng( 9 );
    for ( int round = 0; round < 60; ++round )
    {
        const int n = 1 + static_cast<int>( rng() % 8 );
        const Network net = oracle::random_network( rng, n );
        const AutomatonSet s = rng() & full_set( n );
        const Network f = flip( net, s );
        for ( Config x = 0; x < oracle::count( net ); ++x )
            for ( AutomatonId i = 0; i < n; ++i )
                REQUIRE( ( oracle::step( net, i, x ) ^ s ) == oracle::step( f, i, x ^ s ) );
    }
}

TEST_CASE( "fixed points of the reverse are the unreachable configurations" )
{
    std::mt19937_64 rng( 13 );
    for ( int round = 0; round < 80; ++round )
    {
        const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 10 ), 0.25 );
        REQUIRE( oracle::fixed_points( reverse( net ) ) == oracle::unreachables( net ) );
    }
}

TEST_CASE( "fixed points are bounded by the nude-path roots" )
{
    std::mt19937_64 rng( 17 );
    for ( int round = 0; round < 100; ++round )
    {
        const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 9 ), 0.2 );
        const auto k = nude_roots( net ).roots.size();
        REQUIRE( oracle::fixed_points( net ).size() <= ( std::size_t{ 1 } << k ) );
    }
}
