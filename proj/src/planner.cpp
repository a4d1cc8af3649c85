#include "xorban/planner.hpp"

#include "xorban/families.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace xorban
{

VerifyResult verify_plan( const Network& net, const UpdatePlan& plan )
{
    VerifyResult r;
    Config x = plan.start;
    for ( std::size_t s = 0; s < plan.steps.size(); ++s )
    {
        const AutomatonId i = plan.steps[s];
        if ( i < 0 || i >= net.size() )
        {
            r.divergence = s;
            return r;
        }
        x = apply_single( net, i, x );
        r.trace.push_back( x );
        if ( !r.divergence && s < plan.trace.size() && plan.trace[s] != x )
            r.divergence = s;
    }
    r.ok = x == plan.target;
    if ( !r.ok && !r.divergence )
        r.divergence = plan.steps.size();
    return r;
}

namespace
{

std::vector<AutomatonId> rotate_to( std::vector<AutomatonId> cycle, AutomatonId start )
{
    std::rotate( cycle.begin(), std::find( cycle.begin(), cycle.end(), start ), cycle.end() );
    return cycle;
}

// Predecessor mask of v inside the cycle (arc order).
AutomatonSet cycle_pred( const std::vector<AutomatonId>& cycle, AutomatonId v )
{
    const auto it = std::find( cycle.begin(), cycle.end(), v );
    const auto j = static_cast<std::size_t>( it - cycle.begin() );
    return singleton( cycle[( j + cycle.size() - 1 ) % cycle.size()] );
}

// Every induced double cycle, in enumeration order, filtered by `accept`.
template <typename Accept>
std::optional<InducedBadc> search_badc( const Network& net, Accept accept )
{
    const auto cycles = simple_cycles( net );
    std::vector<AutomatonSet> sets;
    for ( const auto& c : cycles )
        sets.push_back( make_set( c ) );

    std::optional<InducedBadc> best;
    for ( std::size_t a = 0; a < cycles.size(); ++a )
    {
        for ( std::size_t b = a + 1; b < cycles.size(); ++b )
        {
            const AutomatonSet shared = sets[a] & sets[b];
            if ( std::popcount( shared ) != 1 )
                continue;
            const AutomatonSet members = sets[a] | sets[b];
            bool induced = true;
            for ( AutomatonId v : set_members( members ) )
            {
                AutomatonSet preds = 0;
                if ( bit( sets[a], v ) )
                    preds |= cycle_pred( cycles[a], v );
                if ( bit( sets[b], v ) )
                    preds |= cycle_pred( cycles[b], v );
                if ( ( net.rule( v ).source_mask() & members ) != preds )
                {
                    induced = false;
                    break;
                }
            }
            if ( !induced )
                continue;

            const AutomatonId o = std::countr_zero( shared );
            InducedBadc cand;
            cand.center = o;
            cand.cycle1 = rotate_to( cycles[a], o );
            cand.cycle2 = rotate_to( cycles[b], o );
            if ( cand.cycle2.size() > cand.cycle1.size() )
                std::swap( cand.cycle1, cand.cycle2 );
            if ( !accept( cand ) )
                continue;
            if ( !best || cand.size() < best->size() )
                best = std::move( cand );
        }
    }
    return best;
}

// Applies single updates to a running configuration and records them. Every
// recorded step must change the configuration.
struct Runner
{
    const Network& net;
    Config x;
    std::vector<AutomatonId> steps;
    std::vector<Config> trace;

    bool update( AutomatonId v )
    {
        const Config y = apply_single( net, v, x );
        if ( y == x )
            return false;
        x = y;
        steps.push_back( v );
        trace.push_back( x );
        return true;
    }

    void must_update( AutomatonId v, const char* where )
    {
        if ( !update( v ) )
            throw DefectError( std::string( where ) + ": automaton " + std::to_string( v + 1 ) +
                               " was expected to be unstable" );
    }
};

bool any_unstable( const Network& net, AutomatonSet set, Config z )
{
    return ( unstable_set( net, z ) & set ) != 0;
}

// Some automaton of `set` can be the last one to change into z.
bool locally_reachable( const Network& net, AutomatonSet set, Config z )
{
    for ( AutomatonId v : set_members( set ) )
        if ( net.rule( v ).eval( z ^ singleton( v ) ) == bit( z, v ) )
            return true;
    return false;
}

// The double cycle seen with everything outside it frozen, conjugated into
// the positive BADC of the same sizes (automaton numbering as gen_badc).
class BadcFrame
{
public:
    BadcFrame( const Network& net, const InducedBadc& b, Config env )
        : _n1( static_cast<int>( b.cycle1.size() ) ), _n2( static_cast<int>( b.cycle2.size() ) )
    {
        _global.push_back( b.center );
        for ( std::size_t j = 1; j < b.cycle1.size(); ++j )
            _global.push_back( b.cycle1[j] );
        for ( std::size_t j = 1; j < b.cycle2.size(); ++j )
            _global.push_back( b.cycle2[j] );

        const AutomatonSet members = b.members();
        auto constant = [&]( AutomatonId v ) {
            const LocalRule& r = net.rule( v );
            return r.parity() != ( ( std::popcount( env & r.source_mask() & ~members ) & 1 ) != 0 );
        };
        auto cycle_parity = [&]( const std::vector<AutomatonId>& c ) {
            bool q = false;
            for ( std::size_t j = 1; j < c.size(); ++j )
                q = q != constant( c[j] );
            return q;
        };
        // Flip bits that cancel every effective constant: chosen at the center,
        // then propagated along both cycles.
        const bool s_o = constant( b.center ) != ( cycle_parity( b.cycle1 ) != cycle_parity( b.cycle2 ) );
        _flip = s_o ? 1U : 0U;
        for ( const auto* c : { &b.cycle1, &b.cycle2 } )
        {
            bool s = s_o;
            for ( std::size_t j = 1; j < c->size(); ++j )
            {
                s = s != constant( ( *c )[j] );
                if ( s )
                    _flip |= singleton( local( ( *c )[j] ) );
            }
        }
    }

    [[nodiscard]] int n1() const { return _n1; }
    [[nodiscard]] int n2() const { return _n2; }
    [[nodiscard]] AutomatonId global( int local_id ) const { return _global[static_cast<std::size_t>( local_id )]; }

    [[nodiscard]] Config to_local( Config x ) const
    {
        Config y = 0;
        for ( std::size_t k = 0; k < _global.size(); ++k )
            if ( bit( x, _global[k] ) )
                y |= singleton( static_cast<AutomatonId>( k ) );
        return y ^ _flip;
    }

private:
    [[nodiscard]] int local( AutomatonId g ) const
    {
        return static_cast<int>( std::find( _global.begin(), _global.end(), g ) - _global.begin() );
    }

    int _n1;
    int _n2;
    std::vector<AutomatonId> _global;
    Config _flip = 0;
};

std::vector<AutomatonId> bfs_steps( const Network& net, Config from, Config to )
{
    std::map<Config, std::pair<Config, AutomatonId>> parent;
    std::deque<Config> queue{ from };
    parent[from] = { from, -1 };
    while ( !queue.empty() )
    {
        const Config x = queue.front();
        queue.pop_front();
        if ( x == to )
            break;
        for ( AutomatonId i = 0; i < net.size(); ++i )
        {
            const Config y = apply_single( net, i, x );
            if ( y != x && !parent.contains( y ) )
            {
                parent[y] = { x, i };
                queue.push_back( y );
            }
        }
    }
    if ( !parent.contains( to ) )
        throw PlanError( "target not reachable" );
    std::vector<AutomatonId> steps;
    for ( Config x = to; x != from; x = parent[x].first )
        steps.push_back( parent[x].second );
    std::reverse( steps.begin(), steps.end() );
    return steps;
}

// Positive BADC of sizes (n1, n2) with n1 >= 3, numbered like gen_badc.
std::vector<AutomatonId> positive_badc_steps( int n1, int n2, Config y, Config ty )
{
    const Network net = gen_badc( n1, n2 ).network;
    const int n = net.size();
    Runner run{ net, y, {}, {} };

    std::vector<AutomatonId> c1{ 0 };
    std::vector<AutomatonId> c2{ 0 };
    for ( AutomatonId v = 1; v < n1; ++v )
        c1.push_back( v );
    for ( AutomatonId v = n1; v < n; ++v )
        c2.push_back( v );
    auto up = [&]( AutomatonId v ) { run.update( v ); };
    auto sweep = [&]( const std::vector<AutomatonId>& c, std::size_t from, std::size_t to ) {
        for ( std::size_t j = from; j < to; ++j )
            up( c[j] );
    };
    auto reverse_sweep = [&]( const std::vector<AutomatonId>& c, std::size_t hi, std::size_t lo ) {
        for ( std::size_t j = hi; j >= lo && j < c.size(); --j )
            up( c[j] );
    };

    // Step 1a: bring a 1 onto the last automaton of C1 and a 0 onto the last of C2.
    auto distance = [&]( AutomatonId v ) {
        if ( v < n1 )
            return n1 - 1 - v;
        return n1 + ( n - 1 - v );
    };
    AutomatonId closest = -1;
    for ( AutomatonId v = 0; v < n; ++v )
        if ( bit( run.x, v ) && ( closest < 0 || distance( v ) < distance( closest ) ) )
            closest = v;
    if ( closest < 0 )
        throw PlanError( "start configuration is stable" );
    if ( closest >= n1 )
    {
        sweep( c2, static_cast<std::size_t>( closest - n1 + 2 ), c2.size() );
        up( 0 );
        sweep( c1, 1, c1.size() );
    }
    else
        sweep( c1, static_cast<std::size_t>( closest + 1 ), c1.size() );
    if ( bit( run.x, c2.back() ) )
    {
        up( 0 );
        sweep( c2, 1, c2.size() );
    }

    // Step 1b/1c: alternate C1, then C2 while keeping C1 alternating.
    for ( int j = n1; j >= 2; --j )
    {
        sweep( c1, 0, static_cast<std::size_t>( j ) );
        sweep( c2, 1, c2.size() );
    }
    for ( int j = n2 - 1; j >= 2; --j )
    {
        sweep( c2, 0, static_cast<std::size_t>( j ) );
        reverse_sweep( c1, c1.size() - 1, 1 );
    }
    // Only the second automata of both cycles are stable now.
    up( 0 );
    for ( AutomatonId v = 1; v < n; ++v )
        if ( is_stable( net, v, run.x ) )
            throw DefectError( "badc planner: alternating configuration not reached" );

    // Step 2: pivot automaton that can be the last one to reach its target state.
    AutomatonId p = -1;
    for ( AutomatonId v = 0; v < n && p < 0; ++v )
        if ( net.rule( v ).eval( ty ^ singleton( v ) ) == bit( ty, v ) )
            p = v;
    if ( p < 0 )
        throw PlanError( "target configuration is unreachable" );

    if ( p != 0 && bit( run.x, 0 ) != bit( ty, 0 ) )
    {
        const bool in_c1 = p < n1;
        const auto& k = in_c1 ? c1 : c2;
        const auto& other = in_c1 ? c2 : c1;
        const auto j = static_cast<std::size_t>( std::find( k.begin(), k.end(), p ) - k.begin() );
        if ( other.size() >= 2 )
            reverse_sweep( other, other.size() - 1, 1 );
        if ( j >= 2 )
            reverse_sweep( k, j - 1, 1 );
        up( 0 );
        if ( bit( run.x, 0 ) != bit( ty, 0 ) )
            throw DefectError( "badc planner: center not set to its target state" );
    }
    for ( const auto* c : { &c1, &c2 } )
        for ( std::size_t j = c->size() - 1; j >= 1; --j )
        {
            const AutomatonId v = ( *c )[j];
            if ( v != p && bit( run.x, v ) != bit( ty, v ) )
                run.must_update( v, "badc planner" );
        }
    if ( bit( run.x, p ) != bit( ty, p ) )
        run.must_update( p, "badc planner" );
    if ( run.x != ty )
        throw DefectError( "badc planner: target not reached" );
    return run.steps;
}

// Drives the automata of b from their current states to those of `target`,
// everything outside b being frozen.
void plan_badc_within( Runner& run, const InducedBadc& b, Config target )
{
    const AutomatonSet members = b.members();
    if ( ( ( run.x ^ target ) & members ) == 0 )
        return;
    const BadcFrame frame( run.net, b, run.x );
    const Config y = frame.to_local( run.x );
    const Config ty = frame.to_local( target );

    std::vector<AutomatonId> local;
    if ( frame.n1() <= 2 )
        local = bfs_steps( gen_badc( frame.n1(), frame.n2() ).network, y, ty );
    else
        local = positive_badc_steps( frame.n1(), frame.n2(), y, ty );
    for ( AutomatonId v : local )
        run.must_update( frame.global( v ), "badc planner" );
    if ( ( ( run.x ^ target ) & members ) != 0 )
        throw DefectError( "badc planner: double cycle did not reach its target" );
}

UpdatePlan finish( const Runner& run, Config start, Config target )
{
    UpdatePlan plan{ start, target, run.steps, run.trace };
    if ( run.x != target )
        throw DefectError( "planner finished away from the target" );
    return plan;
}

// Walks instability along a path: the last unstable automaton is
// updated and the change is pushed forward to the end of the path.
std::optional<std::vector<AutomatonId>> walk( const Network& net, Config z, const std::vector<AutomatonId>& path )
{
    const AutomatonSet unstable = unstable_set( net, z );
    int last = -1;
    for ( std::size_t m = 0; m < path.size(); ++m )
        if ( bit( unstable, path[m] ) )
            last = static_cast<int>( m );
    if ( last < 0 )
        return std::nullopt;
    std::vector<AutomatonId> out;
    for ( std::size_t m = static_cast<std::size_t>( last ); m < path.size(); ++m )
    {
        const Config next = apply_single( net, path[m], z );
        if ( next == z )
            return std::nullopt;
        z = next;
        out.push_back( path[m] );
    }
    return out;
}

Config replay( const Network& net, Config z, const std::vector<AutomatonId>& steps )
{
    for ( AutomatonId v : steps )
        z = apply_single( net, v, z );
    return z;
}

// Calls visit(mask) for every subset of `items` of the given size, in
// lexicographic order of positions; stops when visit returns true.
template <typename Visit>
bool for_each_subset( const std::vector<AutomatonId>& items, int size, Visit visit )
{
    const int m = static_cast<int>( items.size() );
    if ( size > m )
        return false;
    std::vector<int> idx( static_cast<std::size_t>( size ) );
    for ( int k = 0; k < size; ++k )
        idx[static_cast<std::size_t>( k )] = k;
    while ( true )
    {
        AutomatonSet mask = 0;
        for ( int k : idx )
            mask |= singleton( items[static_cast<std::size_t>( k )] );
        if ( visit( mask ) )
            return true;
        int k = size - 1;
        while ( k >= 0 && idx[static_cast<std::size_t>( k )] == m - size + k )
            --k;
        if ( k < 0 )
            return false;
        ++idx[static_cast<std::size_t>( k )];
        for ( int r = k + 1; r < size; ++r )
            idx[static_cast<std::size_t>( r )] = idx[static_cast<std::size_t>( r - 1 )] + 1;
    }
}

struct Staging
{
    Config staged = 0;
    std::vector<AutomatonId> path; // pivot first, automaton of the double cycle last
};

// Configuration from which the target is reached by resetting a path from a
// pivot to the double cycle, when the target itself is unreachable for it.
std::optional<Staging> stage_target( const Network& net, const InducedBadc& b, Config target )
{
    const AutomatonSet members = b.members();
    for ( AutomatonId i = 0; i < net.size(); ++i )
    {
        if ( bit( members, i ) || net.rule( i ).eval( target ^ singleton( i ) ) != bit( target, i ) )
            continue;
        const auto path = shortest_path( net, i, members );
        if ( !path )
            continue;
        const std::size_t k = path->size() - 1;
        Config staged = target ^ singleton( ( *path )[k] );
        for ( std::size_t m = k; m >= 1; --m )
        {
            const AutomatonId v = ( *path )[m];
            if ( bit( staged, v ) == bit( target, v ) )
                continue;
            // State at the moment v is reset: target beyond v, staged up to v.
            Config at = target;
            for ( std::size_t r = 0; r <= m; ++r )
                at = with_bit( at, ( *path )[r], bit( staged, ( *path )[r] ) );
            if ( net.rule( v ).eval( at ) != bit( target, v ) )
                staged ^= singleton( ( *path )[m - 1] );
        }

        Config z = staged;
        bool ok = locally_reachable( net, members, staged );
        for ( std::size_t m = k + 1; m-- > 0 && ok; )
        {
            const AutomatonId v = ( *path )[m];
            if ( bit( z, v ) != bit( target, v ) )
            {
                z = apply_single( net, v, z );
                ok = bit( z, v ) == bit( target, v );
            }
        }
        if ( ok && z == target )
            return Staging{ staged, *path };
    }
    return std::nullopt;
}

} // namespace

std::optional<InducedBadc> find_induced_badc( const Network& net )
{
    return search_badc( net, []( const InducedBadc& b ) { return b.size() >= 4 && b.cycle1.size() >= 3; } );
}

std::optional<InducedBadc> badc_structure( const Network& net )
{
    const AutomatonSet all = full_set( net.size() );
    return search_badc( net, [all]( const InducedBadc& b ) { return b.members() == all; } );
}

UpdatePlan plan_badc( const Network& net, Config x, Config target )
{
    const auto b = badc_structure( net );
    if ( !b )
        throw PlanError( "network is not a double cycle" );
    if ( is_fixed_point( net, x ) )
        throw PlanError( "start configuration " + config_to_string( x, net.size() ) + " is stable" );
    if ( !has_predecessor( net, target ) )
        throw PlanError( "target configuration " + config_to_string( target, net.size() ) + " is unreachable" );
    Runner run{ net, x, {}, {} };
    plan_badc_within( run, *b, target );
    return finish( run, x, target );
}

Destabilization plan_destabilize( const Network& net, Config x, AutomatonId i, AutomatonId j )
{
    if ( is_stable( net, i, x ) )
        throw PlanError( "automaton " + std::to_string( i + 1 ) + " is stable" );
    if ( !is_stable( net, j, x ) )
        return { {}, x };
    const auto path = shortest_path( net, i, singleton( j ) );
    if ( !path )
        throw StructuralError( "no path from automaton " + std::to_string( i + 1 ) + " to automaton " +
                               std::to_string( j + 1 ) );
    std::vector<AutomatonId> prefix( path->begin(), path->end() - 1 );
    const auto steps = walk( net, x, prefix );
    if ( !steps )
        throw DefectError( "destabilization walk failed" );
    const Config result = replay( net, x, *steps );
    if ( is_stable( net, j, result ) )
        throw DefectError( "destabilization left automaton " + std::to_string( j + 1 ) + " stable" );
    return { *steps, result };
}

UpdatePlan plan_general( const Network& net, Config x, Config target )
{
    const int n = net.size();
    if ( !is_strongly_connected( net ) )
        throw PlanError( "interaction graph is not strongly connected" );
    const auto found = find_induced_badc( net );
    if ( !found )
        throw PlanError( "no induced double cycle of size greater than 3" );
    if ( is_fixed_point( net, x ) )
        throw PlanError( "start configuration " + config_to_string( x, n ) + " is stable" );
    if ( !has_predecessor( net, target ) )
        throw PlanError( "target configuration " + config_to_string( target, n ) + " is unreachable" );

    const InducedBadc& b = *found;
    const AutomatonSet members = b.members();
    if ( members == full_set( n ) )
        return plan_badc( net, x, target );

    Runner run{ net, x, {}, {} };

    // Make the double cycle unstable.
    if ( !any_unstable( net, members, run.x ) )
    {
        const AutomatonId u = std::countr_zero( unstable_set( net, run.x ) );
        const auto path = shortest_path( net, u, members );
        if ( !path )
            throw DefectError( "no path to the double cycle in a strongly connected network" );
        for ( AutomatonId v : plan_destabilize( net, run.x, u, path->back() ).steps )
            run.must_update( v, "destabilization" );
    }

    Config staged = target;
    std::vector<AutomatonId> setup;
    if ( !locally_reachable( net, members, target ) )
    {
        const auto s = stage_target( net, b, target );
        if ( !s )
            throw DefectError( "no staging configuration for the target" );
        staged = s->staged;
        setup = s->path;
    }

    // Breadth-first tree from the double cycle, lowest id first.
    std::vector<AutomatonId> parent( static_cast<std::size_t>( n ), -1 );
    std::vector<int> depth( static_cast<std::size_t>( n ), -1 );
    std::vector<AutomatonId> queue = set_members( members );
    for ( AutomatonId v : queue )
        depth[static_cast<std::size_t>( v )] = 0;
    const auto succ = successors( net );
    for ( std::size_t h = 0; h < queue.size(); ++h )
        for ( AutomatonId w : succ[static_cast<std::size_t>( queue[h] )] )
            if ( depth[static_cast<std::size_t>( w )] < 0 )
            {
                depth[static_cast<std::size_t>( w )] = depth[static_cast<std::size_t>( queue[h] )] + 1;
                parent[static_cast<std::size_t>( w )] = queue[h];
                queue.push_back( w );
            }
    std::vector<AutomatonId> order;
    for ( AutomatonId v = 0; v < n; ++v )
        if ( !bit( members, v ) )
            order.push_back( v );
    std::stable_sort( order.begin(), order.end(), [&]( AutomatonId a, AutomatonId c ) {
        return depth[static_cast<std::size_t>( a )] > depth[static_cast<std::size_t>( c )];
    } );

    const std::vector<AutomatonId> b_list = set_members( members );
    const int max_flips = b_list.size() <= 14 ? static_cast<int>( b_list.size() ) : 4;

    for ( AutomatonId w : order )
    {
        if ( bit( run.x, w ) == bit( staged, w ) )
            continue;
        std::vector<AutomatonId> path{ w };
        while ( parent[static_cast<std::size_t>( path.back() )] >= 0 )
            path.push_back( parent[static_cast<std::size_t>( path.back() )] );
        std::reverse( path.begin(), path.end() );

        auto works = [&]( Config z ) -> std::optional<std::vector<AutomatonId>> {
            auto steps = walk( net, z, path );
            if ( steps && any_unstable( net, members, replay( net, z, *steps ) ) )
                return steps;
            return std::nullopt;
        };

        auto steps = works( run.x );
        if ( !steps )
        {
            Config chosen = 0;
            for ( int d = 1; d <= max_flips && !steps; ++d )
                for_each_subset( b_list, d, [&]( AutomatonSet flips ) {
                    const Config z = run.x ^ flips;
                    if ( !locally_reachable( net, members, z ) )
                        return false;
                    steps = works( z );
                    chosen = z;
                    return steps.has_value();
                } );
            if ( !steps )
                throw DefectError( "cannot set automaton " + std::to_string( w + 1 ) +
                                   " while keeping the double cycle unstable" );
            plan_badc_within( run, b, chosen );
        }
        for ( AutomatonId v : *steps )
            run.must_update( v, "walk" );
        if ( bit( run.x, w ) != bit( staged, w ) || !any_unstable( net, members, run.x ) )
            throw DefectError( "walk to automaton " + std::to_string( w + 1 ) + " went wrong" );
    }

    if ( ( ( run.x ^ staged ) & ~members ) != 0 )
        throw DefectError( "automata outside the double cycle not set" );
    plan_badc_within( run, b, staged );
    for ( std::size_t m = setup.size(); m-- > 0; )
        if ( bit( run.x, setup[m] ) != bit( target, setup[m] ) )
            run.must_update( setup[m], "target setup" );
    return finish( run, x, target );
}

SynchronousWitness synchronous_unreachable_witness( const Network& net, Config x )
{
    const auto b = badc_structure( net );
    if ( !b )
        throw PlanError( "network is not a double cycle" );
    if ( has_predecessor( net, x ) )
        throw PlanError( "configuration " + config_to_string( x, net.size() ) + " is not unreachable" );
    // Updating C1 minus the center cannot work: the automaton after the
    // center would copy x_o, while unreachability forces it to differ. The
    // whole cycle is updated instead, each automaton taking over its
    // predecessor's value and the last one absorbing the center's rule.
    const auto& c1 = b->cycle1;
    const AutomatonSet w = make_set( c1 );
    Config y = x;
    for ( std::size_t j = 1; j < c1.size(); ++j )
        y = with_bit( y, c1[j - 1], bit( x, c1[j] ) != net.rule( c1[j] ).parity() );
    const AutomatonId last = c1.back();
    if ( net.rule( b->center ).eval( y ) != bit( x, b->center ) )
        y ^= singleton( last );
    SynchronousWitness out{ y, w };
    if ( !has_predecessor( net, out.predecessor ) || apply_update( net, w, out.predecessor ) != x )
        throw DefectError( "synchronous witness check failed" );
    return out;
}

} // namespace xorban
