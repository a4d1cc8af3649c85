#include "xorban/atg.hpp"

#include "xorban/planner.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <thread>

namespace xorban
{

bool Atg::has_predecessor( Config x ) const
{
    for ( AutomatonId i = 0; i < _n; ++i )
        if ( bit( _unstable[x ^ singleton( i )], i ) )
            return true;
    return false;
}

Atg build_atg( const Network& net, int limit, unsigned workers )
{
    const int n = net.size();
    limit = std::min( limit, max_atg_limit );
    if ( n > limit )
        throw LimitError( "network has " + std::to_string( n ) + " automata; the transition graph limit is " +
                          std::to_string( limit ) );
    const std::size_t count = std::size_t{ 1 } << n;
    std::vector<std::uint32_t> unstable( count );

    auto fill = [&]( std::size_t lo, std::size_t hi ) {
        for ( std::size_t x = lo; x < hi; ++x )
        {
            std::uint32_t m = 0;
            for ( AutomatonId i = 0; i < n; ++i )
                if ( net.rule( i ).eval( x ) != bit( x, i ) )
                    m |= std::uint32_t{ 1 } << i;
            unstable[x] = m;
        }
    };

    if ( workers == 0 )
        workers = std::max( 1U, std::thread::hardware_concurrency() );
    // Small graphs are not worth a thread.
    if ( workers == 1 || count < ( std::size_t{ 1 } << 14 ) )
        fill( 0, count );
    else
    {
        std::vector<std::thread> pool;
        const std::size_t chunk = ( count + workers - 1 ) / workers;
        for ( std::size_t lo = 0; lo < count; lo += chunk )
            pool.emplace_back( fill, lo, std::min( count, lo + chunk ) );
        for ( auto& t : pool )
            t.join();
    }
    return Atg( n, std::move( unstable ) );
}

Condensation condense( const Atg& atg )
{
    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    const std::size_t count = atg.size();
    const int n = atg.n();

    Condensation out;
    out.scc_of.assign( count, none );
    std::vector<std::uint32_t> index( count, none );
    std::vector<std::uint32_t> low( count, 0 );
    std::vector<std::uint32_t> stack;
    struct Frame
    {
        std::uint32_t node;
        int next;
    };
    std::vector<Frame> calls;
    std::uint32_t counter = 0;

    auto visit = [&]( std::uint32_t v ) {
        index[v] = low[v] = counter++;
        stack.push_back( v );
        calls.push_back( { v, 0 } );
    };

    for ( std::size_t root = 0; root < count; ++root )
    {
        if ( index[root] != none )
            continue;
        visit( static_cast<std::uint32_t>( root ) );
        while ( !calls.empty() )
        {
            Frame& f = calls.back();
            const std::uint32_t v = f.node;
            if ( f.next < n )
            {
                const int i = f.next++;
                if ( !bit( atg.unstable( v ), i ) )
                    continue;
                const auto w = static_cast<std::uint32_t>( v ^ singleton( i ) );
                if ( index[w] == none )
                    visit( w );
                else if ( out.scc_of[w] == none )
                    low[v] = std::min( low[v], index[w] );
                continue;
            }
            calls.pop_back();
            if ( low[v] == index[v] )
            {
                const auto id = static_cast<std::uint32_t>( out.sizes.size() );
                std::uint64_t size = 0;
                std::uint32_t w = 0;
                do
                {
                    w = stack.back();
                    stack.pop_back();
                    out.scc_of[w] = id;
                    ++size;
                } while ( w != v );
                out.sizes.push_back( size );
            }
            if ( !calls.empty() )
            {
                const std::uint32_t parent = calls.back().node;
                low[parent] = std::min( low[parent], low[v] );
            }
        }
    }

    out.dag.resize( out.sizes.size() );
    for ( std::size_t x = 0; x < count; ++x )
    {
        const std::uint32_t from = out.scc_of[x];
        for ( AutomatonSet u = atg.unstable( x ); u != 0; u &= u - 1 )
        {
            const std::uint32_t to = out.scc_of[x ^ ( u & ( ~u + 1 ) )];
            if ( to != from )
                out.dag[from].push_back( to );
        }
    }
    out.terminal.resize( out.sizes.size() );
    for ( std::size_t c = 0; c < out.dag.size(); ++c )
    {
        auto& succ = out.dag[c];
        std::sort( succ.begin(), succ.end() );
        succ.erase( std::unique( succ.begin(), succ.end() ), succ.end() );
        out.terminal[c] = succ.empty();
    }
    return out;
}

std::vector<Config> fixed_points( const Atg& atg )
{
    std::vector<Config> out;
    for ( Config x = 0; x < atg.size(); ++x )
        if ( atg.is_fixed_point( x ) )
            out.push_back( x );
    return out;
}

std::vector<Config> unreachables( const Atg& atg )
{
    std::vector<Config> out;
    for ( Config x = 0; x < atg.size(); ++x )
        if ( !atg.has_predecessor( x ) )
            out.push_back( x );
    return out;
}

std::vector<std::uint32_t> attractors( const Condensation& cond )
{
    std::vector<std::uint32_t> out;
    for ( std::uint32_t c = 0; c < cond.count(); ++c )
        if ( cond.terminal[c] )
            out.push_back( c );
    return out;
}

bool is_reversible_transient( const Condensation& cond, Config x )
{
    const auto c = cond.scc_of.at( x );
    return !cond.terminal[c] && cond.sizes[c] > 1;
}

std::vector<int> bfs_distances( const Atg& atg, Config from )
{
    std::vector<int> dist( atg.size(), -1 );
    std::vector<Config> queue{ from };
    dist.at( from ) = 0;
    for ( std::size_t head = 0; head < queue.size(); ++head )
    {
        const Config x = queue[head];
        for ( AutomatonSet u = atg.unstable( x ); u != 0; u &= u - 1 )
        {
            const Config y = x ^ ( u & ( ~u + 1 ) );
            if ( dist[y] < 0 )
            {
                dist[y] = dist[x] + 1;
                queue.push_back( y );
            }
        }
    }
    return dist;
}

std::optional<int> bfs_distance( const Atg& atg, Config from, Config to )
{
    if ( from == to )
        return 0;
    const int d = bfs_distances( atg, from ).at( to );
    if ( d < 0 )
        return std::nullopt;
    return d;
}

ShapeReport analyse_shape( const Atg& atg, const Condensation& cond, int diameter_limit )
{
    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    ShapeReport r;
    r.fixed_points = fixed_points( atg );
    r.unreachables = unreachables( atg );
    r.scc_count = cond.count();

    std::vector<bool> special( atg.size(), false );
    for ( Config x : r.fixed_points )
        special[x] = true;
    for ( Config x : r.unreachables )
        special[x] = true;

    std::uint32_t big = none;
    bool one_scc = true;
    for ( Config x = 0; x < atg.size() && one_scc; ++x )
    {
        if ( special[x] )
            continue;
        if ( big == none )
            big = cond.scc_of[x];
        else if ( cond.scc_of[x] != big )
            one_scc = false;
    }
    if ( big != none )
        r.big_scc_size = cond.sizes[big];

    bool edges_ok = true;
    if ( one_scc && big != none )
    {
        // Unreachables feed the big SCC; fixed points are entered from it.
        for ( Config u : r.unreachables )
        {
            if ( atg.is_fixed_point( u ) )
                continue;
            bool into_big = false;
            for ( AutomatonSet s = atg.unstable( u ); s != 0 && !into_big; s &= s - 1 )
                into_big = cond.scc_of[u ^ ( s & ( ~s + 1 ) )] == big;
            edges_ok = edges_ok && into_big;
        }
        for ( Config f : r.fixed_points )
        {
            if ( !atg.has_predecessor( f ) )
                continue;
            bool from_big = false;
            for ( AutomatonId i = 0; i < atg.n() && !from_big; ++i )
            {
                const Config y = f ^ singleton( i );
                from_big = bit( atg.unstable( y ), i ) && cond.scc_of[y] == big;
            }
            edges_ok = edges_ok && from_big;
        }
    }
    r.verdict = one_scc && edges_ok;

    if ( big != none && atg.n() <= diameter_limit )
    {
        int diameter = 0;
        std::vector<int> dist( atg.size() );
        std::vector<Config> queue;
        for ( Config s = 0; s < atg.size(); ++s )
        {
            if ( cond.scc_of[s] != big )
                continue;
            std::fill( dist.begin(), dist.end(), -1 );
            queue.assign( 1, s );
            dist[s] = 0;
            for ( std::size_t head = 0; head < queue.size(); ++head )
            {
                const Config x = queue[head];
                diameter = std::max( diameter, dist[x] );
                for ( AutomatonSet u = atg.unstable( x ); u != 0; u &= u - 1 )
                {
                    const Config y = x ^ ( u & ( ~u + 1 ) );
                    if ( dist[y] < 0 && cond.scc_of[y] == big )
                    {
                        dist[y] = dist[x] + 1;
                        queue.push_back( y );
                    }
                }
            }
        }
        r.big_scc_diameter = diameter;
    }
    return r;
}

ShapeReport check_theorem_shape( const Network& net, int limit, int diameter_limit )
{
    const Atg atg = build_atg( net, limit );
    const Condensation cond = condense( atg );
    ShapeReport r = analyse_shape( atg, cond, diameter_limit );
    if ( !is_strongly_connected( net ) )
        r.scope_note = "interaction graph is not strongly connected";
    else if ( !find_induced_badc( net ) )
        r.scope_note = "no induced double cycle of size greater than 3";
    else
        r.in_scope = true;
    return r;
}

std::string atg_to_dot( const Atg& atg )
{
    const int n = atg.n();
    std::string out = "digraph atg {\n";
    for ( Config x = 0; x < atg.size(); ++x )
        out += "  \"" + config_to_string( x, n ) + "\";\n";
    for ( Config x = 0; x < atg.size(); ++x )
    {
        std::map<Config, std::string> labels;
        for ( AutomatonId i = 0; i < n; ++i )
        {
            auto& label = labels[atg.successor( x, i )];
            if ( !label.empty() )
                label += ",";
            label += "{" + std::to_string( i + 1 ) + "}";
        }
        for ( const auto& [y, label] : labels )
            out += "  \"" + config_to_string( x, n ) + "\" -> \"" + config_to_string( y, n ) + "\" [label=\"" +
                   label + "\"];\n";
    }
    return out + "}\n";
}

std::string atg_to_json( const Atg& atg, const Condensation& cond )
{
    using nlohmann::ordered_json;
    const int n = atg.n();
    ordered_json doc;
    doc["n"] = n;
    ordered_json nodes = ordered_json::array();
    ordered_json edges = ordered_json::array();
    for ( Config x = 0; x < atg.size(); ++x )
    {
        nodes.push_back( config_to_string( x, n ) );
        for ( AutomatonId i = 0; i < n; ++i )
            edges.push_back( { { "from", config_to_string( x, n ) },
                               { "to", config_to_string( atg.successor( x, i ), n ) },
                               { "update", i + 1 } } );
    }
    std::vector<ordered_json> sccs( cond.count(), ordered_json::array() );
    for ( Config x = 0; x < atg.size(); ++x )
        sccs[cond.scc_of[x]].push_back( config_to_string( x, n ) );
    ordered_json scc_list = ordered_json::array();
    for ( std::size_t c = 0; c < cond.count(); ++c )
        scc_list.push_back( { { "id", c },
                              { "size", cond.sizes[c] },
                              { "terminal", static_cast<bool>( cond.terminal[c] ) },
                              { "successors", cond.dag[c] },
                              { "configurations", sccs[c] } } );
    auto strings = [n]( const std::vector<Config>& xs ) {
        ordered_json a = ordered_json::array();
        for ( Config x : xs )
            a.push_back( config_to_string( x, n ) );
        return a;
    };
    doc["nodes"] = std::move( nodes );
    doc["edges"] = std::move( edges );
    doc["sccs"] = std::move( scc_list );
    doc["fixed_points"] = strings( fixed_points( atg ) );
    doc["unreachables"] = strings( unreachables( atg ) );
    return doc.dump( 2 ) + "\n";
}

} // namespace xorban
