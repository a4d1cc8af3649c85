#include "helpers.hpp"
#include "oracle.hpp"

#include "xorban/atg.hpp"
#include "xorban/equiv.hpp"
#include "xorban/error.hpp"
#include "xorban/families.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace xorban;

namespace
{

std::vector<AutomatonId> random_perm( std::mt19937_64& rng, int n )
{
    std::vector<AutomatonId> p( n );
    for ( int i = 0; i < n; ++i )
        p[i] = i;
    std::shuffle( p.begin(), p.end(), rng );
    return p;
}

// Renames automaton i to p[i] and negates the states in `flips` (given in
// the new numbering) by rewriting the text of the network.
Network relabel( const Network& net, const std::vector<AutomatonId>& p, AutomatonSet flips )
{
    std::vector<LocalRule> rules( net.size() );
    for ( AutomatonId i = 0; i < net.size(); ++i )
    {
        std::vector<Literal> lits;
        for ( const Literal& l : net.rule( i ).literals() )
            lits.push_back( { p[l.source], l.negated != bit( flips, p[l.source] ) } );
        if ( bit( flips, p[i] ) )
            lits.front().negated = !lits.front().negated;
        rules[p[i]] = LocalRule( std::move( lits ) );
    }
    return Network( std::move( rules ) );
}

Network all_negative( const Network& net )
{
    std::vector<LocalRule> rules;
    for ( AutomatonId i = 0; i < net.size(); ++i )
    {
        std::vector<Literal> lits( net.rule( i ).literals().begin(), net.rule( i ).literals().end() );
        for ( auto& l : lits )
            l.negated = true;
        rules.emplace_back( std::move( lits ) );
    }
    return Network( std::move( rules ) );
}

std::vector<Config> sorted_configs( std::vector<Config> v )
{
    std::sort( v.begin(), v.end() );
    return v;
}

} // namespace

TEST_CASE( "witness algebra" )
{
    const Network net = gen_badc( 3, 3 ).network;
    CHECK( check_witness( net, net, IsoWitness::identity( 5 ) ) );
    CHECK_FALSE( check_witness( net, net, IsoWitness::identity( 5, singleton( 0 ) ) ) );

    std::mt19937_64 rng( 61 );
    for ( int round = 0; round < 50; ++round )
    {
        const int n = 1 + static_cast<int>( rng() % 10 );
        const IsoWitness a{ random_perm( rng, n ), rng() % ( Config{ 1 } << n ) };
        const IsoWitness b{ random_perm( rng, n ), rng() % ( Config{ 1 } << n ) };
        const Config x = rng() % ( Config{ 1 } << n );
        REQUIRE( a.inverse().map( a.map( x ) ) == x );
        REQUIRE( a.then( b ).map( x ) == b.map( a.map( x ) ) );
    }
}

TEST_CASE( "isomorphism search agrees with exhaustive search" )
{
    std::mt19937_64 rng( 67 );
    int found = 0;
    for ( int round = 0; round < 150; ++round )
    {
        const int n = 1 + static_cast<int>( rng() % 5 );
        const Network a = oracle::random_network( rng, n, 0.4 );
        // Half the time compare against a disguised copy.
        const Network b = round % 2 == 0 ? relabel( a, random_perm( rng, n ), rng() % ( Config{ 1 } << n ) )
                                         : oracle::random_network( rng, n, 0.4 );
        const auto w = find_isomorphism( a, b );
        REQUIRE( w.has_value() == oracle::isomorphic( a, b ) );
        if ( w )
        {
            REQUIRE( check_witness( a, b, *w ) );
            REQUIRE( oracle::behaves_isomorphic( a, b, w->perm, w->flips ) );
            ++found;
        }
    }
    CHECK( found >= 75 );
    CHECK_FALSE( find_isomorphism( gen_badc( 3, 3 ).network, gen_badc( 2, 4 ).network ) );
    CHECK_FALSE( find_isomorphism( gen_badc( 3, 3 ).network, gen_badc( 2, 3 ).network ) );
}

TEST_CASE( "larger disguised copies are found" )
{
    std::mt19937_64 rng( 71 );
    for ( const Family& f : { gen_flower( { 3, 3, 3, 3 } ), gen_chain( { 3, 4, 3, 3 } ), gen_random_cactus( 9, 14, 4 ) } )
    {
        const int n = f.network.size();
        const Network b = relabel( f.network, random_perm( rng, n ), rng() % ( Config{ 1 } << n ) );
        const auto w = find_isomorphism( f.network, b );
        REQUIRE( w );
        CHECK( check_witness( f.network, b, *w ) );
    }
}

TEST_CASE( "duals and canonical forms" )
{
    std::mt19937_64 rng( 73 );
    for ( int round = 0; round < 40; ++round )
    {
        const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 6 ) );
        const int n = net.size();
        const auto w = find_isomorphism( net, dual( net ) );
        REQUIRE( w );
        REQUIRE( check_witness( net, dual( net ), IsoWitness::identity( n, full_set( n ) ) ) );
        REQUIRE( check_witness( net, canonical( net ), IsoWitness::identity( n, canonical_flip_set( net ) ) ) );
        // Fixed points of the reverse are the unreachables.
        REQUIRE( oracle::fixed_points( reverse( net ) ) == oracle::unreachables( net ) );
    }

    // Positive and mixed double cycles differ by the all-ones flip.
    const Network pos = gen_badc( 3, 4 ).network;
    const Network mixed = gen_badc( 3, 4, SignClass::mixed ).network;
    CHECK( check_witness( pos, mixed, IsoWitness::identity( 6, full_set( 6 ) ) ) );
}

TEST_CASE( "positive and negative flowers" )
{
    for ( const auto& sizes : { std::vector<int>{ 2, 2, 2 }, std::vector<int>{ 3, 2, 2 }, std::vector<int>{ 3, 3, 3 } } )
    {
        const Network pos = gen_flower( sizes ).network;
        const Network neg = gen_flower( sizes, SignClass::negative ).network;
        CHECK_FALSE( find_isomorphism( pos, neg ) );
        CHECK_FALSE( oracle::isomorphic( pos, neg ) );
    }
    // For the (3,3) double cycle the two sign classes coincide.
    const Network pos = gen_badc( 3, 3 ).network;
    const Network neg = gen_badc( 3, 3, SignClass::negative ).network;
    CHECK( oracle::isomorphic( pos, neg ) );
    CHECK( find_isomorphism( pos, neg ) );
}

TEST_CASE( "rewrites" )
{
    const Network both = net_of( "1 : !x1 ^ !x2\n2 : x1\n" );
    const Rewritten fp = rewrite( both, RewriteStep::flip_pair( 0, 0, 1 ) );
    CHECK( fp.network == net_of( "1 : x1 ^ x2\n2 : x1\n" ) );

    const Network one = net_of( "1 : !x1 ^ x2\n2 : x1\n" );
    CHECK( rewrite( one, RewriteStep::sign_swap( 0, 0, 1 ) ).network == net_of( "1 : x1 ^ !x2\n2 : x1\n" ) );
    CHECK_THROWS_AS( (void)rewrite( one, RewriteStep::flip_pair( 0, 0, 1 ) ), RewriteError );
    CHECK_THROWS_AS( (void)rewrite( both, RewriteStep::sign_swap( 0, 0, 1 ) ), RewriteError );
    CHECK_THROWS_AS( (void)rewrite( both, RewriteStep::flip_pair( 1, 0, 1 ) ), RewriteError );
    CHECK_THROWS_AS( (void)rewrite( both, RewriteStep::flip_pair( 5, 0, 1 ) ), RewriteError );

    const Network vf = rewrite( gen_badc( 1, 2 ).network, RewriteStep::vertex_flip( singleton( 1 ) ) ).network;
    CHECK( vf == net_of( "1 : x1 ^ !x2\n2 : !x1\n" ) );

    // Flipping a whole cycle leaves it positive; cutting a nude arc is refused.
    const Family b33 = gen_badc( 3, 3 );
    const AutomatonSet c2 = make_set( b33.labeling.cycles[1] );
    CHECK_NOTHROW( (void)rewrite( b33.network, RewriteStep::region_flip( full_set( 5 ) ) ) );
    CHECK_THROWS_AS( (void)rewrite( b33.network, RewriteStep::region_flip( c2 & ~singleton( 0 ) ) ), RewriteError );

    std::mt19937_64 rng( 79 );
    for ( int round = 0; round < 100; ++round )
    {
        const Network net = oracle::random_network( rng, 2 + static_cast<int>( rng() % 5 ) );
        const int n = net.size();
        const Rewritten r = rewrite( net, RewriteStep::vertex_flip( rng() % ( Config{ 1 } << n ) ) );
        REQUIRE( check_witness( net, r.network, r.witness ) );
        for ( AutomatonId i = 0; i < n; ++i )
        {
            const auto lits = net.rule( i ).literals();
            if ( lits.size() < 2 )
                continue;
            const bool a = lits[0].negated;
            const bool b = lits[1].negated;
            if ( a == b && !a )
                continue;
            const auto step = a && b ? RewriteStep::flip_pair( i, lits[0].source, lits[1].source )
                                     : RewriteStep::sign_swap( i, lits[0].source, lits[1].source );
            const Rewritten s = rewrite( net, step );
            REQUIRE( check_witness( net, s.network, s.witness ) );
            REQUIRE( oracle::isomorphic( net, s.network ) );
        }
    }
}

TEST_CASE( "sign normalization" )
{
    const Network pos = gen_flower( { 3, 3, 2 } ).network;
    const Normalized p = normalize_signs( pos );
    CHECK( p.all_positive() );
    CHECK( p.steps.empty() );
    CHECK( p.network == pos );

    const Normalized m = normalize_signs( gen_badc( 3, 3, SignClass::mixed ).network );
    CHECK( m.all_positive() );
    CHECK( m.network == gen_badc( 3, 3 ).network );

    // Even number of negative intersections: a chain of four stays signed.
    const Network neg4 = all_negative( gen_chain( { 3, 3, 3, 3 } ).network );
    CHECK_FALSE( normalize_signs( neg4 ).all_positive() );

    std::mt19937_64 rng( 83 );
    for ( int round = 0; round < 60; ++round )
    {
        const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 8 ) );
        const int n = net.size();
        const Normalized a = normalize_signs( net );
        REQUIRE( check_witness( net, a.network, a.witness ) );
        const Normalized b = normalize_signs( flip( net, rng() % ( Config{ 1 } << n ) ) );
        REQUIRE( a.network == b.network );
        REQUIRE( normalize_signs( a.network ).network == a.network );
    }
}

TEST_CASE( "class predictions" )
{
    std::vector<Family> families;
    for ( SignClass c : { SignClass::positive, SignClass::negative, SignClass::mixed } )
        families.push_back( gen_badc( 3, 4, c ) );
    for ( SignClass c : { SignClass::positive, SignClass::negative } )
    {
        families.push_back( gen_flower( { 3, 3, 3 }, c ) );
        families.push_back( gen_flower( { 2, 3, 3 }, c ) );
        families.push_back( gen_flower( { 2, 2, 2, 2 }, c ) );
        families.push_back( gen_chain( { 3, 3, 3 }, {}, c ) );
        families.push_back( gen_chain( { 2, 3, 3, 2 }, {}, c ) );
        families.push_back( gen_chain( { 3, 4, 3 }, { 2, 3 }, c ) );
    }
    families.push_back( gen_flower( { 3, 3, 3 }, std::vector<bool>{ false, true, false } ) );
    for ( const Family& f : families )
    {
        const Classification c = classify( f.network, f.labeling );
        CHECK( sorted_configs( c.predicted_fixed_points ) == oracle::fixed_points( f.network ) );
        CHECK( sorted_configs( c.predicted_unreachables ) == oracle::unreachables( f.network ) );
        CHECK( c.family == f.labeling.kind );

        const auto detected = detect_family( f.network );
        REQUIRE( detected );
        const Classification d = classify( f.network, *detected );
        CHECK( sorted_configs( d.predicted_fixed_points ) == oracle::fixed_points( f.network ) );
    }

    CHECK_FALSE( detect_family( net_of( "1 : x3\n2 : x1\n3 : x2\n" ) ) );
    FamilyLabeling bogus = gen_badc( 3, 3 ).labeling;
    bogus.kind = "tree";
    CHECK_THROWS_AS( (void)classify( gen_badc( 3, 3 ).network, bogus ), ClassificationError );
    CHECK_THROWS_AS( (void)classify_chain( gen_flower( { 3, 3, 3 } ).network, gen_flower( { 3, 3, 3 } ).labeling ),
                     ClassificationError );
}

TEST_CASE( "symbolic fixed points" )
{
    std::mt19937_64 rng( 89 );
    for ( int round = 0; round < 60; ++round )
    {
        const Network net = oracle::random_network( rng, 1 + static_cast<int>( rng() % 9 ) );
        REQUIRE( sorted_configs( fixed_points_symbolic( net ) ) == oracle::fixed_points( net ) );
    }
    for ( std::uint64_t seed = 1; seed <= 40; ++seed )
    {
        const Network net = gen_random_cactus( seed, 12, 1 + static_cast<int>( seed % 4 ) ).network;
        REQUIRE( sorted_configs( fixed_points_symbolic( net ) ) == oracle::fixed_points( net ) );
    }
}

TEST_CASE( "isomorphism is an equivalence" )
{
    std::mt19937_64 rng( 97 );
    for ( int round = 0; round < 30; ++round )
    {
        const int n = 2 + static_cast<int>( rng() % 5 );
        const Network a = oracle::random_network( rng, n );
        const Network b = relabel( a, random_perm( rng, n ), rng() % ( Config{ 1 } << n ) );
        const Network c = relabel( b, random_perm( rng, n ), rng() % ( Config{ 1 } << n ) );
        const auto ab = find_isomorphism( a, b );
        const auto bc = find_isomorphism( b, c );
        REQUIRE( ab );
        REQUIRE( bc );
        REQUIRE( find_isomorphism( a, a ) );
        REQUIRE( check_witness( b, a, ab->inverse() ) );
        REQUIRE( check_witness( a, c, ab->then( *bc ) ) );
    }
}
