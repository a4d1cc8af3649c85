#include "xorban/core.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace xorban
{

std::string config_to_string( Config x, int n )
{
    std::string out( static_cast<std::size_t>( n ), '0' );
    for ( int i = 0; i < n; ++i )
        if ( bit( x, i ) )
            out[static_cast<std::size_t>( i )] = '1';
    return out;
}

Config config_from_string( std::string_view text, int n )
{
    if ( static_cast<int>( text.size() ) != n )
        throw StructuralError( "configuration '" + std::string( text ) + "' has length " +
                               std::to_string( text.size() ) + ", expected " + std::to_string( n ) );
    Config x = 0;
    for ( int i = 0; i < n; ++i )
    {
        const char c = text[static_cast<std::size_t>( i )];
        if ( c != '0' && c != '1' )
            throw StructuralError( "configuration '" + std::string( text ) + "' must contain only 0 and 1" );
        if ( c == '1' )
            x |= singleton( i );
    }
    return x;
}

std::vector<AutomatonId> set_members( AutomatonSet s )
{
    std::vector<AutomatonId> out;
    while ( s != 0 )
    {
        out.push_back( std::countr_zero( s ) );
        s &= s - 1;
    }
    return out;
}

AutomatonSet make_set( std::span<const AutomatonId> ids )
{
    AutomatonSet s = 0;
    for ( AutomatonId i : ids )
        s |= singleton( i );
    return s;
}

// ---------------------------------------------------------------- LocalRule

LocalRule::LocalRule( std::vector<Literal> literals ) : _literals{ std::move( literals ) }
{
    if ( _literals.empty() )
        throw StructuralError( "a local rule needs at least one literal" );
    std::sort( _literals.begin(), _literals.end() );
    refresh();
}

void LocalRule::refresh()
{
    _mask = 0;
    _parity = false;
    for ( const Literal& lit : _literals )
    {
        if ( lit.source < 0 || lit.source >= max_automata )
            throw StructuralError( "literal source " + std::to_string( lit.source + 1 ) + " out of range" );
        _mask ^= singleton( lit.source );
        _parity = _parity != lit.negated;
    }
}

bool LocalRule::has_source( AutomatonId s ) const
{
    return std::any_of( _literals.begin(), _literals.end(), [s]( const Literal& l ) { return l.source == s; } );
}

LocalRule LocalRule::flip_source( AutomatonId s ) const
{
    LocalRule out = *this;
    for ( Literal& lit : out._literals )
        if ( lit.source == s )
            lit.negated = !lit.negated;
    out.refresh();
    return out;
}

LocalRule LocalRule::negate() const
{
    LocalRule out = *this;
    out._literals.front().negated = !out._literals.front().negated;
    out.refresh();
    return out;
}

// ------------------------------------------------------------------ Network

Network::Network( std::vector<LocalRule> rules, unchecked_tag ) : _rules{ std::move( rules ) }
{
    const int n = size();
    if ( n < 1 )
        throw StructuralError( "a network needs at least one automaton" );
    if ( n > max_automata )
        throw LimitError( "networks are limited to " + std::to_string( max_automata ) + " automata" );
    for ( int i = 0; i < n; ++i )
    {
        const auto lits = _rules[static_cast<std::size_t>( i )].literals();
        if ( lits.empty() )
            throw StructuralError( "rule " + std::to_string( i + 1 ) + " is empty" );
        for ( std::size_t k = 0; k < lits.size(); ++k )
        {
            if ( lits[k].source >= n )
                throw StructuralError( "rule " + std::to_string( i + 1 ) + " reads automaton " +
                                       std::to_string( lits[k].source + 1 ) + " of a network of size " +
                                       std::to_string( n ) );
            if ( k > 0 && lits[k].source == lits[k - 1].source )
                _repeated = true;
        }
    }
}

Network::Network( std::vector<LocalRule> rules ) : Network( std::move( rules ), unchecked_tag{} )
{
    if ( _repeated )
    {
        for ( int i = 0; i < size(); ++i )
        {
            const auto lits = rule( i ).literals();
            for ( std::size_t k = 1; k < lits.size(); ++k )
                if ( lits[k].source == lits[k - 1].source )
                    throw StructuralError( "rule " + std::to_string( i + 1 ) + " repeats source x" +
                                           std::to_string( lits[k].source + 1 ) );
        }
    }
}

Network Network::with_repeated_sources( std::vector<LocalRule> rules )
{
    return Network( std::move( rules ), unchecked_tag{} );
}

const LocalRule& Network::rule( AutomatonId i ) const
{
    if ( i < 0 || i >= size() )
        throw StructuralError( "automaton " + std::to_string( i + 1 ) + " out of range [1," +
                               std::to_string( size() ) + "]" );
    return _rules[static_cast<std::size_t>( i )];
}

bool same_truth_tables( const Network& a, const Network& b )
{
    if ( a.size() != b.size() )
        return false;
    for ( int i = 0; i < a.size(); ++i )
        if ( a.rule( i ).source_mask() != b.rule( i ).source_mask() || a.rule( i ).parity() != b.rule( i ).parity() )
            return false;
    return true;
}

// -------------------------------------------------------------- dynamics

bool eval_local( const Network& net, AutomatonId i, Config x ) { return net.rule( i ).eval( x ); }

Config apply_update( const Network& net, AutomatonSet w, Config x )
{
    if ( ( w & ~full_set( net.size() ) ) != 0 )
        throw StructuralError( "update set names automata outside the network" );
    Config y = x;
    for ( AutomatonId i : set_members( w ) )
        y = with_bit( y, i, net.rule( i ).eval( x ) );
    return y;
}

Config apply_single( const Network& net, AutomatonId i, Config x )
{
    return with_bit( x, i, net.rule( i ).eval( x ) );
}

bool is_stable( const Network& net, AutomatonId i, Config x ) { return net.rule( i ).eval( x ) == bit( x, i ); }

AutomatonSet unstable_set( const Network& net, Config x )
{
    AutomatonSet s = 0;
    const auto rules = net.rules();
    for ( std::size_t i = 0; i < rules.size(); ++i )
        if ( rules[i].eval( x ) != bit( x, static_cast<AutomatonId>( i ) ) )
            s |= singleton( static_cast<AutomatonId>( i ) );
    return s;
}

bool is_fixed_point( const Network& net, Config x ) { return unstable_set( net, x ) == 0; }

bool has_predecessor( const Network& net, Config x )
{
    for ( int i = 0; i < net.size(); ++i )
        if ( net.rule( i ).eval( x ^ singleton( i ) ) == bit( x, i ) )
            return true;
    return false;
}

// ----------------------------------------------------------------- graph

std::vector<AutomatonId> influencers( const Network& net, AutomatonId j )
{
    std::vector<AutomatonId> out;
    for ( const Literal& lit : net.rule( j ).literals() )
        if ( out.empty() || out.back() != lit.source )
            out.push_back( lit.source );
    return out;
}

std::vector<std::vector<AutomatonId>> successors( const Network& net )
{
    std::vector<std::vector<AutomatonId>> succ( static_cast<std::size_t>( net.size() ) );
    for ( int j = 0; j < net.size(); ++j )
        for ( AutomatonId s : influencers( net, j ) )
            succ[static_cast<std::size_t>( s )].push_back( j );
    return succ;
}

namespace
{

AutomatonSet reach( const std::vector<std::vector<AutomatonId>>& adj, AutomatonId from )
{
    AutomatonSet seen = singleton( from );
    std::vector<AutomatonId> stack{ from };
    while ( !stack.empty() )
    {
        const AutomatonId u = stack.back();
        stack.pop_back();
        for ( AutomatonId v : adj[static_cast<std::size_t>( u )] )
            if ( !bit( seen, v ) )
            {
                seen |= singleton( v );
                stack.push_back( v );
            }
    }
    return seen;
}

} // namespace

bool is_strongly_connected( const Network& net )
{
    const auto succ = successors( net );
    std::vector<std::vector<AutomatonId>> pred( succ.size() );
    for ( int j = 0; j < net.size(); ++j )
        pred[static_cast<std::size_t>( j )] = influencers( net, j );
    const AutomatonSet all = full_set( net.size() );
    return reach( succ, 0 ) == all && reach( pred, 0 ) == all;
}

std::optional<std::vector<AutomatonId>> shortest_path( const Network& net, AutomatonId from, AutomatonSet targets )
{
    if ( bit( targets, from ) )
        return std::vector<AutomatonId>{ from };
    const auto succ = successors( net );
    std::vector<AutomatonId> parent( succ.size(), -1 );
    AutomatonSet seen = singleton( from );
    std::deque<AutomatonId> queue{ from };
    while ( !queue.empty() )
    {
        const AutomatonId u = queue.front();
        queue.pop_front();
        for ( AutomatonId v : succ[static_cast<std::size_t>( u )] )
        {
            if ( bit( seen, v ) )
                continue;
            seen |= singleton( v );
            parent[static_cast<std::size_t>( v )] = u;
            if ( bit( targets, v ) )
            {
                std::vector<AutomatonId> path{ v };
                while ( path.back() != from )
                    path.push_back( parent[static_cast<std::size_t>( path.back() )] );
                std::reverse( path.begin(), path.end() );
                return path;
            }
            queue.push_back( v );
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------ nude paths

NudePath maximal_nude_path( const Network& net, AutomatonId i )
{
    NudePath path;
    path.automata.push_back( i );
    AutomatonSet on_path = singleton( i );
    AutomatonId cur = i;
    while ( net.rule( cur ).size() == 1 )
    {
        const Literal lit = net.rule( cur ).literals().front();
        if ( bit( on_path, lit.source ) )
            break;
        path.negative = path.negative != lit.negated;
        path.automata.insert( path.automata.begin(), lit.source );
        on_path |= singleton( lit.source );
        cur = lit.source;
    }
    return path;
}

bool is_maximal_nude_path( const Network& net, const NudePath& path )
{
    if ( path.automata.empty() )
        return false;
    AutomatonSet on_path = 0;
    bool negative = false;
    for ( std::size_t k = 0; k < path.automata.size(); ++k )
    {
        const AutomatonId a = path.automata[k];
        if ( a < 0 || a >= net.size() || bit( on_path, a ) )
            return false;
        on_path |= singleton( a );
        if ( k == 0 )
            continue;
        const auto& rule = net.rule( a );
        if ( rule.size() != 1 || rule.literals().front().source != path.automata[k - 1] )
            return false;
        negative = negative != rule.literals().front().negated;
    }
    if ( negative != path.negative )
        return false;
    // Extendable backwards iff the head itself has a unique fresh influencer.
    const auto& head_rule = net.rule( path.head() );
    return !( head_rule.size() == 1 && !bit( on_path, head_rule.literals().front().source ) );
}

NudeRoots nude_roots( const Network& net )
{
    const int n = net.size();
    std::vector<bool> is_root( static_cast<std::size_t>( n ), false );
    for ( int i = 0; i < n; ++i )
    {
        const auto& rule = net.rule( i );
        is_root[static_cast<std::size_t>( i )] = rule.size() != 1 || rule.literals().front().source == i;
    }
    auto pred = [&]( AutomatonId i ) { return net.rule( i ).literals().front().source; };

    // Backward walks that never meet a root close a pure cycle; its lowest id
    // becomes the root of that cycle.
    for ( int i = 0; i < n; ++i )
    {
        AutomatonSet seen = 0;
        AutomatonId cur = i;
        while ( !is_root[static_cast<std::size_t>( cur )] && !bit( seen, cur ) )
        {
            seen |= singleton( cur );
            cur = pred( cur );
        }
        if ( is_root[static_cast<std::size_t>( cur )] )
            continue;
        AutomatonId lowest = cur;
        for ( AutomatonId c = pred( cur ); c != cur; c = pred( c ) )
            lowest = std::min( lowest, c );
        is_root[static_cast<std::size_t>( lowest )] = true;
    }

    NudeRoots out;
    out.head.assign( static_cast<std::size_t>( n ), -1 );
    out.negative.assign( static_cast<std::size_t>( n ), false );
    std::function<void( AutomatonId )> resolve = [&]( AutomatonId i ) {
        const auto idx = static_cast<std::size_t>( i );
        if ( out.head[idx] >= 0 )
            return;
        if ( is_root[idx] )
        {
            out.head[idx] = i;
            return;
        }
        const Literal lit = net.rule( i ).literals().front();
        resolve( lit.source );
        const auto p = static_cast<std::size_t>( lit.source );
        out.head[idx] = out.head[p];
        out.negative[idx] = out.negative[p] != lit.negated;
    };
    for ( int i = 0; i < n; ++i )
    {
        resolve( i );
        if ( is_root[static_cast<std::size_t>( i )] )
            out.roots.push_back( i );
    }
    return out;
}

// ------------------------------------------------------------- transforms

Network dual( const Network& net )
{
    // f_i(x) -> not f_i(not x): every literal and every rule negated.
    return flip( net, full_set( net.size() ) );
}

Network reverse( const Network& net )
{
    std::vector<LocalRule> rules;
    for ( int i = 0; i < net.size(); ++i )
    {
        LocalRule r = net.rule( i ).negate();
        if ( net.rule( i ).has_source( i ) )
            r = r.flip_source( i );
        rules.push_back( std::move( r ) );
    }
    return net.has_repeated_sources() ? Network::with_repeated_sources( std::move( rules ) ) : Network( std::move( rules ) );
}

Network flip( const Network& net, AutomatonSet s )
{
    if ( ( s & ~full_set( net.size() ) ) != 0 )
        throw StructuralError( "flip set names automata outside the network" );
    std::vector<LocalRule> rules;
    for ( int i = 0; i < net.size(); ++i )
    {
        LocalRule r = net.rule( i );
        for ( AutomatonId src : influencers( net, i ) )
            if ( bit( s, src ) )
                r = r.flip_source( src );
        if ( bit( s, i ) )
            r = r.negate();
        rules.push_back( std::move( r ) );
    }
    return net.has_repeated_sources() ? Network::with_repeated_sources( std::move( rules ) ) : Network( std::move( rules ) );
}

AutomatonSet canonical_flip_set( const Network& net )
{
    const NudeRoots roots = nude_roots( net );
    AutomatonSet s = 0;
    for ( int i = 0; i < net.size(); ++i )
        if ( roots.negative[static_cast<std::size_t>( i )] )
            s |= singleton( i );
    return s;
}

Network canonical( const Network& net ) { return flip( net, canonical_flip_set( net ) ); }

Contraction contraction( const Network& net )
{
    const NudeRoots roots = nude_roots( net );
    std::vector<int> index( static_cast<std::size_t>( net.size() ), -1 );
    for ( std::size_t k = 0; k < roots.roots.size(); ++k )
        index[static_cast<std::size_t>( roots.roots[k] )] = static_cast<int>( k );

    std::vector<LocalRule> rules;
    for ( AutomatonId r : roots.roots )
    {
        std::vector<Literal> lits;
        for ( const Literal& lit : net.rule( r ).literals() )
        {
            const auto s = static_cast<std::size_t>( lit.source );
            lits.push_back( { index[static_cast<std::size_t>( roots.head[s] )], lit.negated != roots.negative[s] } );
        }
        rules.emplace_back( std::move( lits ) );
    }
    return { Network::with_repeated_sources( std::move( rules ) ), roots.roots };
}

} // namespace xorban
