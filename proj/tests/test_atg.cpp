#include "helpers.hpp"
#include "oracle.hpp"

#include "xorban/atg.hpp"
#include "xorban/error.hpp"
#include "xorban/families.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>
#include <set>
#include <tuple>

using namespace xorban;

namespace
{

using Edge = std::tuple<std::string, int, std::string>;

std::set<Edge> labeled_edges( const Atg& atg )
{
    std::set<Edge> out;
    for ( Config x = 0; x < atg.size(); ++x )
        for ( AutomatonId i = 0; i < atg.n(); ++i )
            out.emplace( config_to_string( x, atg.n() ), i + 1, config_to_string( atg.successor( x, i ), atg.n() ) );
    return out;
}

bool same_partition( const std::vector<std::uint32_t>& a, const std::vector<int>& b )
{
    for ( std::size_t x = 0; x < a.size(); ++x )
        for ( std::size_t y = x + 1; y < a.size(); ++y )
            if ( ( a[x] == a[y] ) != ( b[x] == b[y] ) )
                return false;
    return true;
}

} // namespace

TEST_CASE( "ATG of the (1,2) double cycle" )
{
    const Atg atg = build_atg( net_of( "1 : x1 ^ x2\n2 : x1\n" ) );
    const std::set<Edge> expected = {
        { "00", 1, "00" }, { "00", 2, "00" }, { "01", 1, "11" }, { "01", 2, "00" },
        { "10", 1, "10" }, { "10", 2, "11" }, { "11", 1, "01" }, { "11", 2, "11" },
    };
    CHECK( labeled_edges( atg ) == expected );
    CHECK( unreachables( atg ) == std::vector<Config>{ cfg( "10" ) } );
    CHECK( fixed_points( atg ) == std::vector<Config>{ cfg( "00" ) } );
}

TEST_CASE( "ATG of the (2,2) double cycle" )
{
    const Atg atg = build_atg( net_of( "1 : x2\n2 : x1 ^ x3\n3 : x2\n" ) );
    const auto edges = labeled_edges( atg );
    CHECK( edges.size() == 24 );
    CHECK( edges.contains( { "111", 2, "101" } ) );
    CHECK( edges.contains( { "110", 3, "111" } ) );
    CHECK( edges.contains( { "010", 2, "000" } ) );

    const Condensation cond = condense( atg );
    const auto terminal = attractors( cond );
    REQUIRE( terminal.size() == 1 );
    CHECK( cond.sizes[terminal[0]] == 1 );
    CHECK( cond.scc_of[cfg( "000" )] == terminal[0] );
    // 010 has no incoming arc; 111 sits on the cycle 111 -> 101 -> 100 -> 110.
    CHECK( unreachables( atg ) == std::vector<Config>{ cfg( "010" ) } );
    CHECK( is_reversible_transient( cond, cfg( "111" ) ) );
    CHECK_FALSE( is_reversible_transient( cond, cfg( "010" ) ) );
    CHECK_FALSE( is_reversible_transient( cond, cfg( "000" ) ) );
}

TEST_CASE( "ATG matches single-automaton updates" )
{
    std::mt19937_64 rng( 31 );
    for ( int round = 0; round < 60; ++round )
    {
        const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 8 ) );
        const Atg atg = build_atg( net );
        REQUIRE( atg.size() == oracle::count( net ) );
        for ( Config x = 0; x < atg.size(); ++x )
        {
            for ( AutomatonId i = 0; i < net.size(); ++i )
                REQUIRE( atg.successor( x, i ) == oracle::step( net, i, x ) );
            REQUIRE( atg.is_fixed_point( x ) == oracle::is_fixed_point( net, x ) );
        }
        REQUIRE( fixed_points( atg ) == oracle::fixed_points( net ) );
        REQUIRE( unreachables( atg ) == oracle::unreachables( net ) );
    }
}

TEST_CASE( "construction is the same for any worker count" )
{
    std::mt19937_64 rng( 37 );
    const Network net = oracle::random_network( rng, 15, 0.2 );
    const Atg one = build_atg( net, default_atg_limit, 1 );
    CHECK( build_atg( net, default_atg_limit, 3 ) == one );
    CHECK( build_atg( net, default_atg_limit, 8 ) == one );
    CHECK( build_atg( net ) == one );
}

TEST_CASE( "size limit" )
{
    const Network net = gen_badc( 5, 5 ).network;
    CHECK_THROWS_AS( (void)build_atg( net, 8 ), LimitError );
    CHECK_NOTHROW( (void)build_atg( net, 9 ) );
}

TEST_CASE( "condensation agrees with mutual reachability" )
{
    std::mt19937_64 rng( 41 );
    for ( int round = 0; round < 40; ++round )
    {
        const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 7 ) );
        const Atg atg = build_atg( net );
        const Condensation cond = condense( atg );
        REQUIRE( same_partition( cond.scc_of, oracle::scc_ids( net ) ) );

        const auto reach = oracle::reachability( net );
        std::vector<Config> member( cond.count() );
        for ( Config x = 0; x < atg.size(); ++x )
            member[cond.scc_of[x]] = x;
        std::uint64_t total = 0;
        for ( std::size_t c = 0; c < cond.count(); ++c )
        {
            total += cond.sizes[c];
            REQUIRE( cond.terminal[c] == cond.dag[c].empty() );
            for ( auto d : cond.dag[c] )
            {
                REQUIRE( d != c );
                REQUIRE( reach[member[c]][member[d]] );
                REQUIRE_FALSE( reach[member[d]][member[c]] );
            }
        }
        REQUIRE( total == atg.size() );
        REQUIRE_FALSE( attractors( cond ).empty() );
        for ( Config x : fixed_points( atg ) )
        {
            REQUIRE( cond.sizes[cond.scc_of[x]] == 1 );
            REQUIRE( cond.terminal[cond.scc_of[x]] );
        }
    }
}

TEST_CASE( "negative flowers" )
{
    // Seven automata: the reverse is positive, so two unreachables remain
    // outside the single attractor.
    const Atg odd = build_atg( gen_flower( { 3, 3, 3 }, SignClass::negative ).network );
    const Condensation c7 = condense( odd );
    CHECK( fixed_points( odd ).empty() );
    CHECK( unreachables( odd ).size() == 2 );
    CHECK( attractors( c7 ).size() == 1 );
    CHECK( c7.count() == 3 );

    // Six automata: the reverse is negative too and the attractor is everything.
    const Condensation c6 = condense( build_atg( gen_flower( { 2, 3, 3 }, SignClass::negative ).network ) );
    REQUIRE( c6.count() == 1 );
    CHECK( c6.sizes[0] == 64 );
}

TEST_CASE( "breadth-first distances" )
{
    const Atg b12 = build_atg( gen_badc( 1, 2 ).network );
    CHECK( bfs_distance( b12, cfg( "01" ), cfg( "01" ) ) == 0 );
    CHECK( bfs_distance( b12, cfg( "01" ), cfg( "00" ) ) == 1 );
    CHECK_FALSE( bfs_distance( b12, cfg( "00" ), cfg( "01" ) ) );

    std::mt19937_64 rng( 43 );
    for ( int round = 0; round < 30; ++round )
    {
        const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 8 ) );
        const Atg atg = build_atg( net );
        const Config from = rng() % atg.size();
        REQUIRE( bfs_distances( atg, from ) == oracle::distances( net, from ) );
    }

    // Alternating targets get further away as the double cycles grow.
    int previous = 0;
    for ( int k : { 3, 5, 7 } )
    {
        const Family f = gen_badc( k, k );
        Config target = 0;
        for ( const auto& cycle : f.labeling.cycles )
            for ( std::size_t j = 1; j < cycle.size(); ++j )
                target = with_bit( target, cycle[j], j % 2 == 1 );
        const auto d = bfs_distance( build_atg( f.network ), singleton( 0 ), target );
        REQUIRE( d );
        CHECK( *d > previous );
        previous = *d;
    }
}

TEST_CASE( "transient and attractor shape" )
{
    SUBCASE( "positive (3,3) flower" )
    {
        const ShapeReport r = check_theorem_shape( gen_flower( { 3, 3 } ).network );
        CHECK( r.in_scope );
        CHECK( r.verdict );
        CHECK( r.fixed_points.size() == 1 );
        CHECK( r.unreachables.size() == 1 );
        CHECK( r.big_scc_size == 30 );
        CHECK( r.big_scc_diameter.has_value() );
    }
    SUBCASE( "chain of four 2-cycles" )
    {
        const Network net = gen_chain( { 2, 2, 2, 2 } ).network;
        const ShapeReport r = check_theorem_shape( net );
        CHECK_FALSE( r.in_scope );
        CHECK( r.verdict == oracle::theorem_shape( net ) );
        CHECK( r.big_scc_size == ( std::uint64_t{ 1 } << net.size() ) - r.fixed_points.size() - r.unreachables.size() );
    }
    SUBCASE( "(1,2) double cycle is out of scope" )
    {
        CHECK_FALSE( check_theorem_shape( gen_badc( 1, 2 ).network ).in_scope );
    }
    SUBCASE( "agrees with the brute-force shape test" )
    {
        std::mt19937_64 rng( 47 );
        for ( int round = 0; round < 40; ++round )
        {
            const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 7 ) );
            REQUIRE( check_theorem_shape( net ).verdict == oracle::theorem_shape( net ) );
        }
        for ( std::uint64_t seed = 1; seed <= 30; ++seed )
        {
            const Network net = gen_random_cactus( seed, 9, 2 + static_cast<int>( seed % 3 ) ).network;
            const ShapeReport r = check_theorem_shape( net );
            REQUIRE( r.verdict == oracle::theorem_shape( net ) );
            if ( r.in_scope )
                REQUIRE( r.verdict );
        }
    }
}

TEST_CASE( "DOT and JSON exports" )
{
    const Atg atg = build_atg( gen_badc( 2, 2 ).network );
    const std::string dot = atg_to_dot( atg );
    CHECK( dot.rfind( "digraph atg {", 0 ) == 0 );
    CHECK( dot.find( "\"000\" -> \"000\" [label=\"{1},{2},{3}\"];" ) != std::string::npos );
    CHECK( dot.back() == '\n' );

    const auto doc = nlohmann::json::parse( atg_to_json( atg, condense( atg ) ) );
    CHECK( doc["n"] == 3 );
    CHECK( doc["nodes"].size() == 8 );
    CHECK( doc["edges"].size() == 24 );
    CHECK( doc["fixed_points"] == nlohmann::json::array( { "000" } ) );
    std::size_t covered = 0;
    for ( const auto& scc : doc["sccs"] )
        covered += scc["configurations"].size();
    CHECK( covered == 8 );
    CHECK( atg_to_json( atg, condense( atg ) ) == atg_to_json( atg, condense( atg ) ) );
}
