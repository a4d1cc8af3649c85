#include "xorban/families.hpp"

#include <algorithm>
#include <random>

namespace xorban
{

std::string_view to_string( SignClass c )
{
    switch ( c )
    {
    case SignClass::positive: return "positive";
    case SignClass::negative: return "negative";
    case SignClass::mixed: return "mixed";
    }
    return "?";
}

SignClass sign_class_from_string( std::string_view s )
{
    if ( s == "positive" )
        return SignClass::positive;
    if ( s == "negative" )
        return SignClass::negative;
    if ( s == "mixed" )
        return SignClass::mixed;
    throw Error( "unknown sign class '" + std::string( s ) + "' (expected positive, negative or mixed)" );
}

CycleSpec CycleSpec::positive( int length )
{
    return { length, std::vector<bool>( static_cast<std::size_t>( std::max( length, 0 ) ), false ) };
}

AutomatonId FamilyLabeling::at( int cycle, int position ) const
{
    return cycles.at( static_cast<std::size_t>( cycle ) ).at( static_cast<std::size_t>( position ) );
}

std::optional<std::pair<int, int>> FamilyLabeling::position_of( AutomatonId id ) const
{
    for ( std::size_t k = 0; k < cycles.size(); ++k )
        for ( std::size_t j = 0; j < cycles[k].size(); ++j )
            if ( cycles[k][j] == id )
                return std::pair{ static_cast<int>( k ), static_cast<int>( j ) };
    return std::nullopt;
}

int FamilyLabeling::size() const
{
    AutomatonSet all = 0;
    for ( const auto& c : cycles )
        all |= make_set( c );
    return std::popcount( all );
}

Network network_from_cycles( int n, const std::vector<std::vector<AutomatonId>>& cycles,
                             const std::vector<CycleSpec>& specs )
{
    if ( cycles.size() != specs.size() )
        throw StructuralError( "one cycle spec per cycle is required" );
    std::vector<std::vector<Literal>> lits( static_cast<std::size_t>( n ) );
    for ( std::size_t k = 0; k < cycles.size(); ++k )
    {
        const auto& cyc = cycles[k];
        const auto len = cyc.size();
        if ( specs[k].arc_negated.size() != len || static_cast<std::size_t>( specs[k].length ) != len )
            throw StructuralError( "cycle " + std::to_string( k + 1 ) + ": arc signs do not match its length" );
        for ( std::size_t j = 0; j < len; ++j )
        {
            const AutomatonId v = cyc[j];
            const AutomatonId pred = cyc[( j + len - 1 ) % len];
            lits[static_cast<std::size_t>( v )].push_back( { pred, specs[k].arc_negated[j] } );
        }
    }
    std::vector<LocalRule> rules;
    for ( int i = 0; i < n; ++i )
    {
        if ( lits[static_cast<std::size_t>( i )].empty() )
            throw StructuralError( "automaton " + std::to_string( i + 1 ) + " lies on no cycle" );
        rules.emplace_back( std::move( lits[static_cast<std::size_t>( i )] ) );
    }
    return Network( std::move( rules ) );
}

namespace
{

void check_spec( const CycleSpec& c, std::string_view what )
{
    if ( c.length < 1 )
        throw StructuralError( std::string( what ) + ": cycle sizes must be positive" );
    if ( static_cast<int>( c.arc_negated.size() ) != c.length )
        throw StructuralError( std::string( what ) + ": one arc sign per cycle position is required" );
}

// Flower-shaped labeling: every petal starts at automaton 0.
Family build_flower( const std::vector<CycleSpec>& petals, std::string kind )
{
    int self_loops = 0;
    for ( const auto& p : petals )
    {
        check_spec( p, kind );
        self_loops += p.length == 1 ? 1 : 0;
    }
    if ( self_loops > 1 )
        throw StructuralError( kind + ": at most one cycle of size 1 (two would repeat the center's self literal)" );

    FamilyLabeling lab;
    lab.kind = std::move( kind );
    lab.intersections = { 0 };
    AutomatonId next = 1;
    for ( const auto& p : petals )
    {
        std::vector<AutomatonId> cyc{ 0 };
        for ( int j = 1; j < p.length; ++j )
            cyc.push_back( next++ );
        lab.cycles.push_back( std::move( cyc ) );
    }
    Network net = network_from_cycles( next, lab.cycles, petals );
    return { std::move( net ), std::move( lab ) };
}

} // namespace

Family gen_badc( const CycleSpec& c1, const CycleSpec& c2 )
{
    if ( c1.length == 1 && c2.length == 1 )
        throw StructuralError( "badc: sizes (1,1) are degenerate" );
    return build_flower( { c1, c2 }, "badc" );
}

Family gen_badc( int n1, int n2, SignClass cls )
{
    if ( n1 < 1 || n2 < 1 )
        throw StructuralError( "badc: cycle sizes must be positive" );
    CycleSpec c1 = CycleSpec::positive( n1 );
    CycleSpec c2 = CycleSpec::positive( n2 );
    if ( cls == SignClass::negative || cls == SignClass::mixed )
        c1.arc_negated[0] = true;
    if ( cls == SignClass::negative )
        c2.arc_negated[0] = true;
    return gen_badc( c1, c2 );
}

Family gen_flower( const std::vector<CycleSpec>& petals )
{
    if ( petals.size() < 2 )
        throw StructuralError( "flower: at least two petals are required" );
    return build_flower( petals, "flower" );
}

Family gen_flower( const std::vector<int>& sizes, const std::vector<bool>& center_negated )
{
    if ( sizes.size() != center_negated.size() )
        throw StructuralError( "flower: one center sign per petal is required" );
    std::vector<CycleSpec> petals;
    for ( std::size_t k = 0; k < sizes.size(); ++k )
    {
        if ( sizes[k] < 1 )
            throw StructuralError( "flower: petal sizes must be positive" );
        petals.push_back( CycleSpec::positive( sizes[k] ) );
        petals.back().arc_negated[0] = center_negated[k];
    }
    return gen_flower( petals );
}

Family gen_flower( const std::vector<int>& sizes, SignClass cls )
{
    if ( cls == SignClass::mixed )
        throw StructuralError( "flower: the sign class is positive or negative" );
    std::vector<bool> neg( sizes.size(), false );
    if ( cls == SignClass::negative && !neg.empty() )
        neg[0] = true;
    return gen_flower( sizes, neg );
}

Family gen_chain( const std::vector<CycleSpec>& specs, const std::vector<int>& offsets_in )
{
    const int m = static_cast<int>( specs.size() );
    if ( m < 2 )
        throw StructuralError( "chain: at least two cycles are required" );
    for ( const auto& s : specs )
        check_spec( s, "chain" );
    std::vector<int> offsets = offsets_in;
    if ( offsets.empty() )
        for ( int k = 0; k + 1 < m; ++k )
            offsets.push_back( specs[static_cast<std::size_t>( k + 1 )].length );
    if ( static_cast<int>( offsets.size() ) != m - 1 )
        throw StructuralError( "chain: one offset per intersection (m-1) is required" );
    for ( int k = 0; k + 1 < m; ++k )
    {
        const int next_len = specs[static_cast<std::size_t>( k + 1 )].length;
        const int off = offsets[static_cast<std::size_t>( k )];
        if ( off < 1 || off > next_len )
            throw StructuralError( "chain: offset " + std::to_string( off ) + " outside cycle " +
                                   std::to_string( k + 2 ) );
        if ( k + 2 < m && off == 1 )
            throw StructuralError( "chain: intersections o" + std::to_string( k + 1 ) + " and o" +
                                   std::to_string( k + 2 ) + " would coincide" );
        if ( specs[static_cast<std::size_t>( k )].length == 1 && next_len == 1 )
            throw StructuralError( "chain: two consecutive cycles of size 1 repeat a self literal" );
    }

    FamilyLabeling lab;
    lab.kind = "chain";
    AutomatonId next = 0;
    for ( int k = 0; k < m; ++k )
    {
        const int len = specs[static_cast<std::size_t>( k )].length;
        std::vector<AutomatonId> cyc( static_cast<std::size_t>( len ), -1 );
        if ( k > 0 )
            cyc[static_cast<std::size_t>( offsets[static_cast<std::size_t>( k - 1 )] - 1 )] =
                    lab.intersections.back();
        for ( auto& v : cyc )
            if ( v < 0 )
                v = next++;
        if ( k + 1 < m )
            lab.intersections.push_back( cyc[0] );
        lab.cycles.push_back( std::move( cyc ) );
    }
    Network net = network_from_cycles( next, lab.cycles, specs );
    return { std::move( net ), std::move( lab ) };
}

Family gen_chain( const std::vector<int>& sizes, const std::vector<int>& offsets, SignClass cls )
{
    if ( cls == SignClass::mixed )
        throw StructuralError( "chain: the sign class is positive or negative" );
    std::vector<CycleSpec> specs;
    for ( int s : sizes )
    {
        if ( s < 1 )
            throw StructuralError( "chain: cycle sizes must be positive" );
        specs.push_back( CycleSpec::positive( s ) );
    }
    if ( cls == SignClass::negative && !specs.empty() )
        specs[0].arc_negated[0] = true;
    return gen_chain( specs, offsets );
}

Family gen_random_cactus( std::uint64_t seed, int n_max, int cycle_count )
{
    if ( n_max < 1 || n_max > max_automata || cycle_count < 1 )
        throw StructuralError( "cactus: need 1 <= n_max <= 64 and cycle_count >= 1" );
    if ( cycle_count > 2 * n_max - 1 )
        throw StructuralError( "cactus: " + std::to_string( cycle_count ) + " cycles cannot fit in " +
                               std::to_string( n_max ) + " automata" );

    std::mt19937_64 rng( seed );
    auto draw = [&rng]( std::uint64_t bound ) { return static_cast<int>( rng() % bound ); };

    FamilyLabeling lab;
    lab.kind = "cactus";
    std::vector<CycleSpec> specs;
    AutomatonSet self_loops = 0;
    int n = 1;
    int budget = n_max - 1;
    for ( int k = 0; k < cycle_count; ++k )
    {
        // Leave one fresh automaton for every later cycle that could not
        // otherwise be placed as a self-loop.
        const int later = cycle_count - k - 1;
        const int reserve = std::max( 0, later - ( n + budget - std::popcount( self_loops ) - 1 ) );
        const int spendable = budget - reserve;
        int fresh = 0;
        if ( spendable > 0 )
            fresh = 1 + draw( static_cast<std::uint64_t>( std::min( spendable, 4 ) ) );

        AutomatonId attach = 0;
        if ( k > 0 || fresh == 0 )
        {
            std::vector<AutomatonId> candidates;
            for ( AutomatonId v = 0; v < n; ++v )
                if ( fresh > 0 || !bit( self_loops, v ) )
                    candidates.push_back( v );
            if ( candidates.empty() )
                throw StructuralError( "cactus: no room left for another cycle" );
            attach = k == 0 ? 0 : candidates[static_cast<std::size_t>( draw( candidates.size() ) )];
        }
        std::vector<AutomatonId> cyc{ attach };
        for ( int f = 0; f < fresh; ++f )
            cyc.push_back( n++ );
        budget -= fresh;
        if ( fresh == 0 )
            self_loops |= singleton( attach );

        CycleSpec spec = CycleSpec::positive( static_cast<int>( cyc.size() ) );
        for ( std::size_t j = 0; j < cyc.size(); ++j )
            spec.arc_negated[j] = draw( 2 ) == 1;
        specs.push_back( std::move( spec ) );
        if ( k > 0 && std::find( lab.intersections.begin(), lab.intersections.end(), attach ) == lab.intersections.end() )
            lab.intersections.push_back( attach );
        lab.cycles.push_back( std::move( cyc ) );
    }
    std::sort( lab.intersections.begin(), lab.intersections.end() );
    Network net = network_from_cycles( n, lab.cycles, specs );
    return { std::move( net ), std::move( lab ) };
}

std::vector<std::vector<AutomatonId>> simple_cycles( const Network& net, std::size_t limit )
{
    const auto succ = successors( net );
    std::vector<std::vector<AutomatonId>> out;
    std::vector<AutomatonId> path;
    AutomatonSet on_path = 0;

    auto dfs = [&]( auto&& self, AutomatonId start, AutomatonId u ) -> void {
        for ( AutomatonId v : succ[static_cast<std::size_t>( u )] )
        {
            if ( v == start )
            {
                out.push_back( path );
                if ( out.size() > limit )
                    throw LimitError( "more than " + std::to_string( limit ) + " simple cycles" );
            }
            else if ( v > start && !bit( on_path, v ) )
            {
                path.push_back( v );
                on_path |= singleton( v );
                self( self, start, v );
                on_path &= ~singleton( v );
                path.pop_back();
            }
        }
    };
    for ( AutomatonId s = 0; s < net.size(); ++s )
    {
        path = { s };
        on_path = singleton( s );
        dfs( dfs, s, s );
    }
    return out;
}

bool is_cactus( const Network& net )
{
    const auto cycles = simple_cycles( net );
    std::vector<AutomatonSet> sets;
    for ( const auto& c : cycles )
        sets.push_back( make_set( c ) );
    for ( std::size_t a = 0; a < sets.size(); ++a )
        for ( std::size_t b = a + 1; b < sets.size(); ++b )
            if ( std::popcount( sets[a] & sets[b] ) > 1 )
                return false;
    return true;
}

Config parse_cycle_vector( std::string_view text, const FamilyLabeling& labeling )
{
    auto fail = [&]( const std::string& why ) {
        return StructuralError( "cycle vector '" + std::string( text ) + "': " + why );
    };
    std::string_view body = text;
    if ( body.size() < 2 || body.front() != '(' || body.back() != ')' )
        throw fail( "expected the form (bits,bits,...)" );
    body = body.substr( 1, body.size() - 2 );

    Config x = 0;
    AutomatonSet assigned = 0;
    std::size_t k = 0;
    while ( true )
    {
        const auto comma = body.find( ',' );
        std::string_view part = body.substr( 0, comma );
        if ( k >= labeling.cycles.size() )
            throw fail( "more parts than cycles in the labeling" );
        const auto& cyc = labeling.cycles[k];
        if ( part.size() != cyc.size() )
            throw fail( "part " + std::to_string( k + 1 ) + " must have " + std::to_string( cyc.size() ) + " bits" );
        for ( std::size_t j = 0; j < cyc.size(); ++j )
        {
            if ( part[j] != '0' && part[j] != '1' )
                throw fail( "bits must be 0 or 1" );
            const bool v = part[j] == '1';
            const AutomatonId id = cyc[j];
            if ( bit( assigned, id ) && bit( x, id ) != v )
                throw fail( "automaton " + std::to_string( id + 1 ) + " gets two different values" );
            assigned |= singleton( id );
            x = with_bit( x, id, v );
        }
        ++k;
        if ( comma == std::string_view::npos )
            break;
        body = body.substr( comma + 1 );
    }
    if ( k != labeling.cycles.size() )
        throw fail( "expected " + std::to_string( labeling.cycles.size() ) + " parts" );
    return x;
}

std::string format_cycle_vector( Config x, const FamilyLabeling& labeling )
{
    std::string out = "(";
    for ( std::size_t k = 0; k < labeling.cycles.size(); ++k )
    {
        if ( k > 0 )
            out += ',';
        for ( AutomatonId id : labeling.cycles[k] )
            out += bit( x, id ) ? '1' : '0';
    }
    return out + ")";
}

} // namespace xorban
