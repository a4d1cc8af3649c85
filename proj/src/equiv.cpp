#include "xorban/equiv.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace xorban
{

namespace
{

AutomatonSet map_set( AutomatonSet s, const std::vector<AutomatonId>& perm )
{
    AutomatonSet out = 0;
    for ( AutomatonId i : set_members( s ) )
        out |= singleton( perm[static_cast<std::size_t>( i )] );
    return out;
}

bool parity_of( AutomatonSet s ) { return ( std::popcount( s ) & 1 ) != 0; }

// Solves rows[i] . f = rhs_i over GF(2); free variables are set to 0.
std::optional<AutomatonSet> solve_gf2( std::vector<AutomatonSet> rows, std::vector<bool> rhs )
{
    const std::size_t m = rows.size();
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for ( int col = 0; col < max_automata && rank < m; ++col )
    {
        std::size_t r = rank;
        while ( r < m && !bit( rows[r], col ) )
            ++r;
        if ( r == m )
            continue;
        std::swap( rows[r], rows[rank] );
        std::swap( rhs[r], rhs[rank] );
        for ( std::size_t k = 0; k < m; ++k )
            if ( k != rank && bit( rows[k], col ) )
            {
                rows[k] ^= rows[rank];
                rhs[k] = rhs[k] != rhs[rank];
            }
        pivot_col.push_back( col );
        ++rank;
    }
    for ( std::size_t k = rank; k < m; ++k )
        if ( rhs[k] )
            return std::nullopt;
    AutomatonSet f = 0;
    for ( std::size_t k = 0; k < rank; ++k )
        if ( rhs[k] )
            f |= singleton( pivot_col[k] );
    return f;
}

Network with_rule( const Network& net, AutomatonId i, LocalRule rule )
{
    std::vector<LocalRule> rules( net.rules().begin(), net.rules().end() );
    rules[static_cast<std::size_t>( i )] = std::move( rule );
    return net.has_repeated_sources() ? Network::with_repeated_sources( std::move( rules ) )
                                      : Network( std::move( rules ) );
}

// Indices of two distinct literals of `rule` with the given sources.
std::optional<std::pair<std::size_t, std::size_t>> literal_pair( const LocalRule& rule, AutomatonId a, AutomatonId b )
{
    const auto lits = rule.literals();
    for ( std::size_t p = 0; p < lits.size(); ++p )
        for ( std::size_t q = 0; q < lits.size(); ++q )
            if ( p != q && lits[p].source == a && lits[q].source == b )
                return std::pair{ p, q };
    return std::nullopt;
}

} // namespace

IsoWitness IsoWitness::identity( int n, AutomatonSet flips )
{
    IsoWitness w;
    w.perm.resize( static_cast<std::size_t>( n ) );
    std::iota( w.perm.begin(), w.perm.end(), 0 );
    w.flips = flips;
    return w;
}

Config IsoWitness::map( Config x ) const { return map_set( x ^ flips, perm ); }

IsoWitness IsoWitness::inverse() const
{
    IsoWitness w;
    w.perm.resize( perm.size() );
    for ( std::size_t i = 0; i < perm.size(); ++i )
        w.perm[static_cast<std::size_t>( perm[i] )] = static_cast<AutomatonId>( i );
    w.flips = map_set( flips, perm );
    return w;
}

IsoWitness IsoWitness::then( const IsoWitness& next ) const
{
    IsoWitness w;
    w.perm.resize( perm.size() );
    for ( std::size_t i = 0; i < perm.size(); ++i )
        w.perm[i] = next.perm[static_cast<std::size_t>( perm[i] )];
    w.flips = flips ^ map_set( next.flips, inverse().perm );
    return w;
}

bool check_witness( const Network& a, const Network& b, const IsoWitness& w )
{
    const int n = a.size();
    if ( b.size() != n || static_cast<int>( w.perm.size() ) != n || ( w.flips & ~full_set( n ) ) != 0 )
        return false;
    AutomatonSet image = 0;
    for ( AutomatonId p : w.perm )
    {
        if ( p < 0 || p >= n || bit( image, p ) )
            return false;
        image |= singleton( p );
    }
    for ( AutomatonId i = 0; i < n; ++i )
    {
        const LocalRule& ra = a.rule( i );
        const LocalRule& rb = b.rule( w.perm[static_cast<std::size_t>( i )] );
        if ( map_set( ra.source_mask(), w.perm ) != rb.source_mask() )
            return false;
        const bool lhs = rb.parity() != parity_of( ra.source_mask() & w.flips );
        const bool rhs = ra.parity() != bit( w.flips, i );
        if ( lhs != rhs )
            return false;
    }
    return true;
}

std::optional<IsoWitness> find_isomorphism( const Network& a, const Network& b )
{
    const int n = a.size();
    if ( b.size() != n )
        return std::nullopt;

    auto signature = [n]( const Network& net ) {
        std::vector<std::array<int, 3>> sig( static_cast<std::size_t>( n ) );
        std::vector<int> out_deg( static_cast<std::size_t>( n ), 0 );
        for ( AutomatonId i = 0; i < n; ++i )
            for ( AutomatonId s : set_members( net.rule( i ).source_mask() ) )
                ++out_deg[static_cast<std::size_t>( s )];
        for ( AutomatonId i = 0; i < n; ++i )
        {
            const Config m = net.rule( i ).source_mask();
            sig[static_cast<std::size_t>( i )] = { std::popcount( m ), out_deg[static_cast<std::size_t>( i )],
                                                   bit( m, i ) ? 1 : 0 };
        }
        return sig;
    };
    const auto sig_a = signature( a );
    const auto sig_b = signature( b );
    {
        auto sa = sig_a;
        auto sb = sig_b;
        std::sort( sa.begin(), sa.end() );
        std::sort( sb.begin(), sb.end() );
        if ( sa != sb )
            return std::nullopt;
    }

    // Undirected breadth-first order so each new automaton touches assigned ones.
    std::vector<AutomatonId> order;
    AutomatonSet placed = 0;
    for ( AutomatonId root = 0; root < n; ++root )
    {
        if ( bit( placed, root ) )
            continue;
        std::size_t head = order.size();
        order.push_back( root );
        placed |= singleton( root );
        for ( ; head < order.size(); ++head )
        {
            const AutomatonId v = order[head];
            AutomatonSet nb = a.rule( v ).source_mask();
            for ( AutomatonId u = 0; u < n; ++u )
                if ( bit( a.rule( u ).source_mask(), v ) )
                    nb |= singleton( u );
            for ( AutomatonId u : set_members( nb & ~placed ) )
            {
                placed |= singleton( u );
                order.push_back( u );
            }
        }
    }

    std::vector<AutomatonId> perm( static_cast<std::size_t>( n ), -1 );
    AutomatonSet used = 0;
    std::optional<IsoWitness> found;

    auto consistent = [&]( AutomatonId va, AutomatonId vb, std::size_t depth ) {
        for ( std::size_t k = 0; k < depth; ++k )
        {
            const AutomatonId ua = order[k];
            const AutomatonId ub = perm[static_cast<std::size_t>( ua )];
            if ( bit( a.rule( va ).source_mask(), ua ) != bit( b.rule( vb ).source_mask(), ub ) )
                return false;
            if ( bit( a.rule( ua ).source_mask(), va ) != bit( b.rule( ub ).source_mask(), vb ) )
                return false;
        }
        return true;
    };

    auto solve_flips = [&]() -> std::optional<AutomatonSet> {
        std::vector<AutomatonSet> rows;
        std::vector<bool> rhs;
        for ( AutomatonId i = 0; i < n; ++i )
        {
            const LocalRule& ra = a.rule( i );
            rows.push_back( singleton( i ) ^ ra.source_mask() );
            rhs.push_back( ra.parity() != b.rule( perm[static_cast<std::size_t>( i )] ).parity() );
        }
        return solve_gf2( std::move( rows ), std::move( rhs ) );
    };

    std::function<void( std::size_t )> extend = [&]( std::size_t depth ) {
        if ( found )
            return;
        if ( depth == order.size() )
        {
            if ( auto f = solve_flips() )
                found = IsoWitness{ perm, *f };
            return;
        }
        const AutomatonId va = order[depth];
        for ( AutomatonId vb = 0; vb < n && !found; ++vb )
        {
            if ( bit( used, vb ) || sig_a[static_cast<std::size_t>( va )] != sig_b[static_cast<std::size_t>( vb )] ||
                 !consistent( va, vb, depth ) )
                continue;
            perm[static_cast<std::size_t>( va )] = vb;
            used |= singleton( vb );
            extend( depth + 1 );
            used &= ~singleton( vb );
            perm[static_cast<std::size_t>( va )] = -1;
        }
    };
    extend( 0 );
    return found;
}

std::string_view to_string( RewriteKind k )
{
    switch ( k )
    {
    case RewriteKind::flip_pair: return "flip_pair";
    case RewriteKind::sign_swap: return "sign_swap";
    case RewriteKind::region_flip: return "region_flip";
    case RewriteKind::vertex_flip: return "vertex_flip";
    }
    return "?";
}

RewriteStep RewriteStep::flip_pair( AutomatonId rule, AutomatonId a, AutomatonId b )
{
    return { RewriteKind::flip_pair, rule, a, b, 0 };
}

RewriteStep RewriteStep::sign_swap( AutomatonId rule, AutomatonId a, AutomatonId b )
{
    return { RewriteKind::sign_swap, rule, a, b, 0 };
}

RewriteStep RewriteStep::region_flip( AutomatonSet s ) { return { RewriteKind::region_flip, -1, -1, -1, s }; }

RewriteStep RewriteStep::vertex_flip( AutomatonSet s ) { return { RewriteKind::vertex_flip, -1, -1, -1, s }; }

Rewritten rewrite( const Network& net, const RewriteStep& step )
{
    const int n = net.size();
    switch ( step.kind )
    {
    case RewriteKind::flip_pair:
    case RewriteKind::sign_swap: {
        if ( step.rule < 0 || step.rule >= n )
            throw RewriteError( "rewrite names a rule outside the network" );
        const LocalRule& r = net.rule( step.rule );
        const auto pair = literal_pair( r, step.first, step.second );
        if ( !pair )
            throw RewriteError( "rule " + std::to_string( step.rule + 1 ) + " has no literals on x" +
                                std::to_string( step.first + 1 ) + " and x" + std::to_string( step.second + 1 ) );
        std::vector<Literal> lits( r.literals().begin(), r.literals().end() );
        Literal& p = lits[pair->first];
        Literal& q = lits[pair->second];
        if ( step.kind == RewriteKind::flip_pair && !( p.negated && q.negated ) )
            throw RewriteError( "flip_pair needs two negative literals" );
        if ( step.kind == RewriteKind::sign_swap && p.negated == q.negated )
            throw RewriteError( "sign_swap needs one negative and one positive literal" );
        p.negated = !p.negated;
        q.negated = !q.negated;
        return { with_rule( net, step.rule, LocalRule( std::move( lits ) ) ), IsoWitness::identity( n ) };
    }
    case RewriteKind::region_flip: {
        Network out = flip( net, step.region );
        for ( AutomatonId i = 0; i < n; ++i )
            if ( net.rule( i ).size() == 1 && !( net.rule( i ) == out.rule( i ) ) )
                throw RewriteError( "region boundary cuts the nude arc into automaton " + std::to_string( i + 1 ) );
        return { std::move( out ), IsoWitness::identity( n, step.region ) };
    }
    case RewriteKind::vertex_flip:
        return { flip( net, step.region ), IsoWitness::identity( n, step.region ) };
    }
    throw RewriteError( "unknown rewrite" );
}

bool Normalized::all_positive() const
{
    for ( const LocalRule& r : network.rules() )
        if ( r.parity() )
            return false;
    return true;
}

Normalized normalize_signs( const Network& net )
{
    const int n = net.size();
    Normalized out{ net, {}, IsoWitness::identity( n ) };
    auto apply = [&out]( const RewriteStep& step ) {
        Rewritten r = rewrite( out.network, step );
        out.network = std::move( r.network );
        out.witness = out.witness.then( r.witness );
        out.steps.push_back( step );
    };

    if ( const AutomatonSet f0 = canonical_flip_set( net ); f0 != 0 )
        apply( RewriteStep::vertex_flip( f0 ) );

    // Flips that keep every nude arc positive are unions of root regions.
    const NudeRoots nr = nude_roots( out.network );
    struct Vec
    {
        Config v;
        AutomatonSet combo;
        int pivot;
    };
    std::vector<Vec> basis;
    for ( AutomatonId r : nr.roots )
    {
        AutomatonSet region = 0;
        for ( AutomatonId i = 0; i < n; ++i )
            if ( nr.head[static_cast<std::size_t>( i )] == r )
                region |= singleton( i );
        Config d = 0;
        for ( AutomatonId i = 0; i < n; ++i )
            if ( bit( region, i ) != parity_of( out.network.rule( i ).source_mask() & region ) )
                d |= singleton( i );
        Vec v{ d, region, 0 };
        for ( const Vec& b : basis )
            if ( bit( v.v, b.pivot ) )
            {
                v.v ^= b.v;
                v.combo ^= b.combo;
            }
        if ( v.v == 0 )
            continue;
        v.pivot = std::countr_zero( v.v );
        for ( Vec& b : basis )
            if ( bit( b.v, v.pivot ) )
            {
                b.v ^= v.v;
                b.combo ^= v.combo;
            }
        basis.push_back( v );
    }
    std::sort( basis.begin(), basis.end(), []( const Vec& x, const Vec& y ) { return x.pivot < y.pivot; } );
    Config parities = 0;
    for ( AutomatonId i = 0; i < n; ++i )
        if ( out.network.rule( i ).parity() )
            parities |= singleton( i );
    AutomatonSet s = 0;
    for ( const Vec& b : basis )
        if ( bit( parities, b.pivot ) )
        {
            parities ^= b.v;
            s ^= b.combo;
        }
    if ( s != 0 )
        apply( RewriteStep::vertex_flip( s ) );

    // Within each rule: cancel negations pairwise, then move a remaining one
    // onto the literal with the largest source.
    for ( AutomatonId i = 0; i < n; ++i )
    {
        while ( true )
        {
            const LocalRule& r = out.network.rule( i );
            std::vector<AutomatonId> neg;
            for ( const Literal& l : r.literals() )
                if ( l.negated )
                    neg.push_back( l.source );
            const AutomatonId largest = r.literals().back().source;
            if ( neg.size() >= 2 )
                apply( RewriteStep::flip_pair( i, neg[0], neg[1] ) );
            else if ( neg.size() == 1 && neg[0] != largest )
                apply( RewriteStep::sign_swap( i, neg[0], largest ) );
            else
                break;
        }
    }
    return out;
}

std::vector<Config> fixed_points_symbolic( const Network& net )
{
    const NudeRoots nr = nude_roots( net );
    const int k = static_cast<int>( nr.roots.size() );
    if ( k > 30 )
        throw LimitError( std::to_string( k ) + " roots: symbolic enumeration limited to 30" );
    const int n = net.size();
    std::vector<Config> out;
    for ( std::uint64_t u = 0; u < ( std::uint64_t{ 1 } << k ); ++u )
    {
        Config x = 0;
        for ( int r = 0; r < k; ++r )
            if ( ( u >> r ) & 1U )
                x |= singleton( nr.roots[static_cast<std::size_t>( r )] );
        for ( AutomatonId i = 0; i < n; ++i )
        {
            const auto idx = static_cast<std::size_t>( i );
            x = with_bit( x, i, bit( x, nr.head[idx] ) != nr.negative[idx] );
        }
        if ( is_fixed_point( net, x ) )
            out.push_back( x );
    }
    std::sort( out.begin(), out.end() );
    return out;
}

namespace
{

void check_structure( const Network& net, const FamilyLabeling& lab )
{
    const int n = net.size();
    std::vector<AutomatonSet> expected( static_cast<std::size_t>( n ), 0 );
    AutomatonSet covered = 0;
    for ( const auto& c : lab.cycles )
    {
        if ( c.empty() )
            throw ClassificationError( "labeling has an empty cycle" );
        for ( std::size_t j = 0; j < c.size(); ++j )
        {
            if ( c[j] < 0 || c[j] >= n )
                throw ClassificationError( "labeling names automata outside the network" );
            covered |= singleton( c[j] );
            expected[static_cast<std::size_t>( c[j] )] ^= singleton( c[( j + c.size() - 1 ) % c.size()] );
        }
    }
    if ( covered != full_set( n ) )
        throw ClassificationError( "labeling does not cover every automaton" );
    for ( AutomatonId i = 0; i < n; ++i )
        if ( net.rule( i ).source_mask() != expected[static_cast<std::size_t>( i )] )
            throw ClassificationError( "interaction graph does not match the labeling at automaton " +
                                       std::to_string( i + 1 ) );
}

enum class Shape
{
    flower,
    chain,
};

void check_shape( const FamilyLabeling& lab, Shape shape )
{
    const std::size_t m = lab.cycles.size();
    if ( m < 2 )
        throw ClassificationError( "at least two cycles are required" );
    std::vector<AutomatonSet> sets;
    for ( const auto& c : lab.cycles )
        sets.push_back( make_set( c ) );
    for ( std::size_t a = 0; a < m; ++a )
        for ( std::size_t b = a + 1; b < m; ++b )
        {
            const AutomatonSet shared = sets[a] & sets[b];
            if ( shape == Shape::flower )
            {
                if ( shared != singleton( lab.cycles[0][0] ) )
                    throw ClassificationError( "not a flower: petals must share exactly their first automaton" );
            }
            else if ( b == a + 1 )
            {
                if ( std::popcount( shared ) != 1 || lab.cycles[a][0] != std::countr_zero( shared ) )
                    throw ClassificationError( "not a chain: consecutive cycles must share the first automaton "
                                               "of the earlier one" );
            }
            else if ( shared != 0 )
                throw ClassificationError( "not a chain: non-consecutive cycles intersect" );
        }
}

// Fixed points predicted from the family structure.
std::vector<Config> predict_fixed_points( const Network& net, const FamilyLabeling& lab, Shape shape, bool& positive )
{
    const int n = net.size();
    const int m = static_cast<int>( lab.cycles.size() );
    const Normalized norm = normalize_signs( net );
    positive = norm.all_positive();
    const bool two_classes = shape == Shape::flower ? m % 2 == 1 : ( m - 1 ) % 3 == 0;
    if ( !positive && !two_classes )
        throw DefectError( "sign normalization left a single-class family negative" );
    if ( !positive )
        return {};

    // Positive representative: y = x xor flips.
    std::vector<Config> ys{ 0 };
    if ( shape == Shape::flower && m % 2 == 1 )
        ys.push_back( full_set( n ) );
    if ( shape == Shape::chain && two_classes )
    {
        const NudeRoots nr = nude_roots( norm.network );
        Config y = 0;
        for ( std::size_t k = 0; k < static_cast<std::size_t>( m - 1 ); ++k )
            if ( k % 3 != 1 )
                y |= singleton( lab.cycles[k][0] );
        for ( AutomatonId i = 0; i < n; ++i )
            y = with_bit( y, i, bit( y, nr.head[static_cast<std::size_t>( i )] ) );
        ys.push_back( y );
    }
    std::vector<Config> out;
    for ( Config y : ys )
        out.push_back( y ^ norm.witness.flips );
    std::sort( out.begin(), out.end() );
    return out;
}

Classification classify_as( const Network& net, const FamilyLabeling& lab, Shape shape )
{
    check_structure( net, lab );
    check_shape( lab, shape );
    Classification c;
    c.family = shape == Shape::chain ? "chain" : ( lab.cycles.size() == 2 ? "badc" : "flower" );
    bool positive = true;
    c.predicted_fixed_points = predict_fixed_points( net, lab, shape, positive );
    c.sign_class = positive ? SignClass::positive : SignClass::negative;
    bool reverse_positive = true;
    c.predicted_unreachables = predict_fixed_points( reverse( net ), lab, shape, reverse_positive );
    return c;
}

} // namespace

Classification classify_flower( const Network& net, const FamilyLabeling& labeling )
{
    return classify_as( net, labeling, Shape::flower );
}

Classification classify_chain( const Network& net, const FamilyLabeling& labeling )
{
    return classify_as( net, labeling, Shape::chain );
}

Classification classify( const Network& net, const FamilyLabeling& labeling )
{
    if ( labeling.kind == "flower" || labeling.kind == "badc" )
        return classify_flower( net, labeling );
    if ( labeling.kind == "chain" )
        return classify_chain( net, labeling );
    throw ClassificationError( "no classifier for family '" + labeling.kind + "'" );
}

std::optional<FamilyLabeling> detect_family( const Network& net )
{
    const int n = net.size();
    std::vector<std::vector<AutomatonId>> cycles;
    try
    {
        cycles = simple_cycles( net, 1000 );
    }
    catch ( const LimitError& )
    {
        return std::nullopt;
    }
    const std::size_t m = cycles.size();
    if ( m < 2 )
        return std::nullopt;

    std::vector<AutomatonSet> sets;
    for ( const auto& c : cycles )
        sets.push_back( make_set( c ) );
    FamilyLabeling probe;
    probe.cycles = cycles;
    try
    {
        check_structure( net, probe );
    }
    catch ( const ClassificationError& )
    {
        return std::nullopt;
    }

    auto rotate_to = []( std::vector<AutomatonId> c, AutomatonId start ) {
        std::rotate( c.begin(), std::find( c.begin(), c.end(), start ), c.end() );
        return c;
    };

    AutomatonSet common = full_set( n );
    for ( AutomatonSet s : sets )
        common &= s;
    bool flower = std::popcount( common ) == 1;
    for ( std::size_t a = 0; a < m && flower; ++a )
        for ( std::size_t b = a + 1; b < m && flower; ++b )
            flower = ( sets[a] & sets[b] ) == common;
    if ( flower )
    {
        FamilyLabeling lab;
        lab.kind = m == 2 ? "badc" : "flower";
        const AutomatonId o = std::countr_zero( common );
        for ( const auto& c : cycles )
            lab.cycles.push_back( rotate_to( c, o ) );
        std::stable_sort( lab.cycles.begin(), lab.cycles.end(),
                          []( const auto& x, const auto& y ) { return x.size() > y.size(); } );
        lab.intersections = { o };
        return lab;
    }

    // Chain: the intersection graph of the cycles is a path.
    std::vector<std::vector<std::size_t>> adj( m );
    for ( std::size_t a = 0; a < m; ++a )
        for ( std::size_t b = a + 1; b < m; ++b )
        {
            const int shared = std::popcount( sets[a] & sets[b] );
            if ( shared > 1 )
                return std::nullopt;
            if ( shared == 1 )
            {
                adj[a].push_back( b );
                adj[b].push_back( a );
            }
        }
    std::vector<std::size_t> ends;
    for ( std::size_t a = 0; a < m; ++a )
    {
        if ( adj[a].empty() || adj[a].size() > 2 )
            return std::nullopt;
        if ( adj[a].size() == 1 )
            ends.push_back( a );
    }
    if ( ends.size() != 2 )
        return std::nullopt;
    std::vector<std::size_t> seq{ ends[0] };
    while ( seq.size() < m )
    {
        const std::size_t cur = seq.back();
        std::optional<std::size_t> next;
        for ( std::size_t b : adj[cur] )
            if ( seq.size() < 2 || b != seq[seq.size() - 2] )
                next = b;
        if ( !next )
            return std::nullopt;
        seq.push_back( *next );
    }
    FamilyLabeling lab;
    lab.kind = "chain";
    for ( std::size_t k = 0; k + 1 < m; ++k )
    {
        const AutomatonId o = std::countr_zero( sets[seq[k]] & sets[seq[k + 1]] );
        lab.intersections.push_back( o );
        lab.cycles.push_back( rotate_to( cycles[seq[k]], o ) );
    }
    // Last cycle: its intersection sits at the last position.
    auto last = rotate_to( cycles[seq.back()], lab.intersections.back() );
    std::rotate( last.begin(), last.begin() + 1, last.end() );
    lab.cycles.push_back( std::move( last ) );
    try
    {
        check_shape( lab, Shape::chain );
    }
    catch ( const ClassificationError& )
    {
        return std::nullopt;
    }
    return lab;
}

} // namespace xorban
