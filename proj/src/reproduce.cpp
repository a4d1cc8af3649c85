#include "xorban/reproduce.hpp"

#include "xorban/equiv.hpp"
#include "xorban/error.hpp"
#include "xorban/planner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace xorban
{

namespace
{

bool in_scope( const Network& net )
{
    return is_strongly_connected( net ) && find_induced_badc( net ).has_value();
}

std::string join_configs( const std::vector<Config>& xs, int n )
{
    std::string out = "{";
    for ( std::size_t k = 0; k < xs.size(); ++k )
    {
        out += ( k ? "," : "" ) + config_to_string( xs[k], n );
    }
    return out + "}";
}

std::vector<Config> sorted( std::vector<Config> xs )
{
    std::sort( xs.begin(), xs.end() );
    return xs;
}

// ---------------------------------------------------------------------------
// Reference ATG edge lists, written in their own automaton numbering.

struct ReferenceEdge
{
    const char* from;
    int label;
    const char* to;
};

const std::vector<ReferenceEdge> badc12_edges = {
    { "00", 1, "00" }, { "00", 2, "00" }, { "01", 1, "11" }, { "01", 2, "00" },
    { "10", 2, "11" }, { "10", 1, "10" }, { "11", 1, "01" }, { "11", 2, "11" },
};

const std::vector<ReferenceEdge> badc22_edges = {
    { "000", 1, "000" }, { "000", 2, "000" }, { "000", 3, "000" }, { "001", 2, "011" },
    { "001", 3, "000" }, { "001", 1, "001" }, { "010", 3, "011" }, { "010", 2, "000" },
    { "010", 1, "110" }, { "011", 1, "111" }, { "011", 2, "011" }, { "011", 3, "011" },
    { "100", 1, "000" }, { "100", 2, "110" }, { "100", 3, "100" }, { "101", 1, "001" },
    { "101", 3, "100" }, { "101", 2, "101" }, { "110", 1, "110" }, { "110", 2, "110" },
    { "110", 3, "111" }, { "111", 1, "111" }, { "111", 3, "111" }, { "111", 2, "101" },
};

using EdgeSet = std::set<std::tuple<Config, AutomatonId, Config>>;

// perm[p] is our id for reference automaton p + 1.
EdgeSet reference_edge_set( const std::vector<ReferenceEdge>& edges, const std::vector<AutomatonId>& perm )
{
    const int n = static_cast<int>( perm.size() );
    auto relabel = [&]( const char* s ) {
        const Config given = config_from_string( s, n );
        Config x = 0;
        for ( int p = 0; p < n; ++p )
        {
            x = with_bit( x, perm[p], bit( given, p ) );
        }
        return x;
    };
    EdgeSet out;
    for ( const auto& e : edges )
    {
        out.emplace( relabel( e.from ), perm[e.label - 1], relabel( e.to ) );
    }
    return out;
}

EdgeSet atg_edge_set( const Atg& atg )
{
    EdgeSet out;
    for ( Config x = 0; x < atg.size(); ++x )
    {
        for ( AutomatonId i = 0; i < atg.n(); ++i )
        {
            out.emplace( x, i, atg.successor( x, i ) );
        }
    }
    return out;
}

CriterionResult check_fixtures( const ReproduceOptions& opt )
{
    CriterionResult r;
    const Atg a12 = build_atg( gen_badc( 1, 2 ).network, opt.limit_n );
    const Atg a22 = build_atg( gen_badc( 2, 2 ).network, opt.limit_n );
    const bool ok12 = atg_edge_set( a12 ) == reference_edge_set( badc12_edges, { 0, 1 } );
    // The reference list puts the center of the (2,2) double cycle at automaton 2.
    const bool ok22 = atg_edge_set( a22 ) == reference_edge_set( badc22_edges, { 1, 0, 2 } );
    r.pass = ok12 && ok22;
    r.measured = std::string( "(1,2) " ) + ( ok12 ? "equal" : "differs" ) + ", (2,2) " + ( ok22 ? "equal" : "differs" );
    r.expected = "both edge sets equal";
    return r;
}

// ---------------------------------------------------------------------------

CriterionResult check_shape( const ReproduceOptions& opt )
{
    CriterionResult r;
    const auto corpus = theorem_corpus( opt.corpus_seed );
    std::size_t good = 0;
    std::string first_bad;
    for ( const auto& e : corpus )
    {
        const ShapeReport s = check_theorem_shape( e.network, opt.limit_n, 0 );
        if ( s.in_scope && s.verdict )
        {
            ++good;
        }
        else if ( first_bad.empty() )
        {
            first_bad = e.name;
        }
    }
    r.pass = corpus.size() >= 50 && good == corpus.size();
    r.measured = std::to_string( good ) + "/" + std::to_string( corpus.size() ) + " nets match";
    if ( !first_bad.empty() )
    {
        r.measured += ", first failure " + first_bad;
    }
    r.expected = "all of >= 50 nets";
    return r;
}

// ---------------------------------------------------------------------------

CriterionResult check_planner( const ReproduceOptions& opt )
{
    CriterionResult r;
    std::size_t exhaustive = 0;
    std::size_t failures = 0;
    double worst_ratio = 0.0;
    for ( auto [n1, n2] : { std::pair{ 3, 3 }, std::pair{ 3, 4 } } )
    {
        const Network net = gen_badc( n1, n2 ).network;
        const Atg atg = build_atg( net, opt.limit_n );
        const auto n = static_cast<std::size_t>( net.size() );
        for ( Config x = 0; x < atg.size(); ++x )
        {
            if ( atg.is_fixed_point( x ) )
            {
                continue;
            }
            for ( Config t = 0; t < atg.size(); ++t )
            {
                if ( !atg.has_predecessor( t ) )
                {
                    continue;
                }
                ++exhaustive;
                try
                {
                    const UpdatePlan plan = plan_badc( net, x, t );
                    worst_ratio = std::max( worst_ratio, static_cast<double>( plan.steps.size() ) / static_cast<double>( n * n ) );
                    if ( !verify_plan( net, plan ).ok || plan.steps.size() > 4 * n * n )
                    {
                        ++failures;
                    }
                }
                catch ( const Error& )
                {
                    ++failures;
                }
            }
        }
    }

    std::vector<const CorpusEntry*> small;
    const auto corpus = theorem_corpus( opt.corpus_seed );
    for ( const auto& e : corpus )
    {
        if ( e.network.size() <= 10 )
        {
            small.push_back( &e );
        }
    }
    std::mt19937_64 rng( opt.corpus_seed );
    std::size_t sampled = 0;
    std::size_t sample_failures = 0;
    double general_ratio = 0.0;
    for ( ; sampled < 200 && !small.empty(); ++sampled )
    {
        const auto& e = *small[rng() % small.size()];
        const Atg atg = build_atg( e.network, opt.limit_n );
        Config x = 0;
        do
        {
            x = rng() % atg.size();
        } while ( atg.is_fixed_point( x ) );
        Config t = 0;
        do
        {
            t = rng() % atg.size();
        } while ( !atg.has_predecessor( t ) );
        try
        {
            const UpdatePlan plan = plan_general( e.network, x, t );
            const auto bfs = bfs_distance( atg, x, t );
            const auto n = static_cast<double>( e.network.size() );
            general_ratio = std::max( general_ratio, static_cast<double>( plan.steps.size() ) / ( n * n ) );
            if ( !verify_plan( e.network, plan ).ok || !bfs || plan.steps.size() < static_cast<std::size_t>( *bfs ) )
            {
                ++sample_failures;
            }
        }
        catch ( const Error& )
        {
            ++sample_failures;
        }
    }

    std::ostringstream m;
    m << std::fixed << std::setprecision( 3 ) << exhaustive << " BADC pairs, " << failures << " failures, max steps/n^2 "
      << worst_ratio << "; " << sampled << " sampled, " << sample_failures << " failures, max steps/n^2 " << general_ratio;
    r.measured = m.str();
    r.expected = "0 failures, steps <= 4n^2 on BADCs, steps >= BFS distance";
    r.pass = failures == 0 && sample_failures == 0 && sampled == 200 && exhaustive > 0;
    return r;
}

// ---------------------------------------------------------------------------

// Sets the intersections to `values` and lets every other automaton copy
// its single influencer until nothing changes.
Config propagate_from_intersections( const Network& net, const FamilyLabeling& lab, const std::vector<bool>& values )
{
    Config x = 0;
    AutomatonSet fixed = 0;
    for ( std::size_t k = 0; k < lab.intersections.size(); ++k )
    {
        x = with_bit( x, lab.intersections[k], values[k] );
        fixed |= singleton( lab.intersections[k] );
    }
    for ( int round = 0; round < net.size(); ++round )
    {
        for ( AutomatonId i = 0; i < net.size(); ++i )
        {
            if ( !bit( fixed, i ) )
            {
                x = with_bit( x, i, eval_local( net, i, x ) );
            }
        }
    }
    return x;
}

CriterionResult check_fixed_points( const ReproduceOptions& opt )
{
    CriterionResult r;
    struct Case
    {
        std::string name;
        Family family;
        std::function<std::vector<Config>( const Family& )> expected;
    };
    const auto zero = []( const Family& ) { return std::vector<Config>{ 0 }; };
    const auto none = []( const Family& ) { return std::vector<Config>{}; };
    const auto zero_one = []( const Family& f ) {
        return std::vector<Config>{ 0, full_set( f.network.size() ) };
    };
    const auto zero_101 = []( const Family& f ) {
        return sorted( { 0, propagate_from_intersections( f.network, f.labeling, { true, false, true } ) } );
    };
    std::vector<Case> cases;
    cases.push_back( { "flower(3,3)+", gen_flower( { 3, 3 } ), zero } );
    cases.push_back( { "flower(3,3,3)+", gen_flower( { 3, 3, 3 } ), zero_one } );
    cases.push_back( { "flower(3,3,3)-", gen_flower( { 3, 3, 3 }, SignClass::negative ), none } );
    cases.push_back( { "chain(3,3,3)+", gen_chain( { 3, 3, 3 } ), zero } );
    cases.push_back( { "chain(3,3,3,3)+", gen_chain( { 3, 3, 3, 3 } ), zero_101 } );
    cases.push_back( { "chain(3,3,3,3)-", gen_chain( { 3, 3, 3, 3 }, {}, SignClass::negative ), none } );

    std::ostringstream m;
    bool all = true;
    for ( const auto& c : cases )
    {
        const int n = c.family.network.size();
        const auto brute = fixed_points( build_atg( c.family.network, opt.limit_n ) );
        const auto symbolic = sorted( fixed_points_symbolic( c.family.network ) );
        const auto want = sorted( c.expected( c.family ) );
        const bool ok = brute == want && symbolic == want;
        all = all && ok;
        m << ( m.tellp() > 0 ? "; " : "" ) << c.name << " " << brute.size() << " " << join_configs( brute, n );
        if ( !ok )
        {
            m << " (symbolic " << join_configs( symbolic, n ) << ", expected " << join_configs( want, n ) << ")";
        }
    }
    r.pass = all;
    r.measured = m.str();
    r.expected = "1, 2 {0^7,1^7}, 0, 1, 2 {0^n,101 pattern}, 0";
    return r;
}

// ---------------------------------------------------------------------------

CriterionResult check_reverse( const ReproduceOptions& opt )
{
    CriterionResult r;
    std::size_t checked = 0;
    std::size_t bad = 0;
    for ( const auto& e : theorem_corpus( opt.corpus_seed ) )
    {
        if ( e.network.size() > 10 )
        {
            continue;
        }
        ++checked;
        const auto u = unreachables( build_atg( e.network, opt.limit_n ) );
        const auto f = fixed_points( build_atg( reverse( e.network ), opt.limit_n ) );
        bad += u == f ? 0 : 1;
    }
    r.pass = bad == 0 && checked > 0;
    r.measured = std::to_string( checked - bad ) + "/" + std::to_string( checked ) + " nets equal";
    r.expected = "all nets with n <= 10";
    return r;
}

// ---------------------------------------------------------------------------

bool atg_conjugate( const Network& a, const Network& b, const IsoWitness& w, int limit )
{
    const Atg ga = build_atg( a, limit );
    const Atg gb = build_atg( b, limit );
    for ( Config x = 0; x < ga.size(); ++x )
    {
        for ( AutomatonId i = 0; i < a.size(); ++i )
        {
            if ( w.map( ga.successor( x, i ) ) != gb.successor( w.map( x ), w.perm[i] ) )
            {
                return false;
            }
        }
    }
    return true;
}

CriterionResult check_isomorphism( const ReproduceOptions& opt )
{
    CriterionResult r;
    std::mt19937_64 rng( opt.corpus_seed ^ 0x5eedULL );
    std::size_t pairs = 0;
    std::size_t conjugacy = 0;
    std::size_t bad = 0;
    for ( const auto& e : theorem_corpus( opt.corpus_seed ) )
    {
        const Network& net = e.network;
        const int n = net.size();
        std::vector<Network> images{ dual( net ), canonical( net ) };
        for ( int k = 0; k < 20; ++k )
        {
            images.push_back( flip( net, rng() & full_set( n ) ) );
        }
        for ( const auto& img : images )
        {
            ++pairs;
            const auto w = find_isomorphism( net, img );
            if ( !w || !check_witness( net, img, *w ) )
            {
                ++bad;
                continue;
            }
            if ( n <= 8 )
            {
                ++conjugacy;
                bad += atg_conjugate( net, img, *w, opt.limit_n ) ? 0 : 1;
            }
        }
    }
    r.pass = bad == 0 && pairs > 0;
    r.measured = std::to_string( pairs ) + " pairs, " + std::to_string( conjugacy ) + " ATG conjugacy checks, " +
                 std::to_string( bad ) + " failures";
    r.expected = "0 failures";
    return r;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<CycleSpec>> all_sign_assignments( const std::vector<int>& sizes )
{
    int arcs = 0;
    for ( int s : sizes )
    {
        arcs += s;
    }
    std::vector<std::vector<CycleSpec>> out;
    for ( std::uint32_t mask = 0; mask < ( 1U << arcs ); ++mask )
    {
        std::vector<CycleSpec> specs;
        int k = 0;
        for ( int s : sizes )
        {
            CycleSpec c = CycleSpec::positive( s );
            for ( int j = 0; j < s; ++j, ++k )
            {
                c.arc_negated[j] = ( ( mask >> k ) & 1U ) != 0;
            }
            specs.push_back( std::move( c ) );
        }
        out.push_back( std::move( specs ) );
    }
    return out;
}

std::size_t count_classes( const std::vector<Network>& nets )
{
    std::vector<const Network*> reps;
    for ( const auto& net : nets )
    {
        const bool known = std::any_of( reps.begin(), reps.end(), [&]( const Network* rep ) {
            const auto w = find_isomorphism( *rep, net );
            return w && check_witness( *rep, net, *w );
        } );
        if ( !known )
        {
            reps.push_back( &net );
        }
    }
    return reps.size();
}

CriterionResult check_class_counts( const ReproduceOptions& )
{
    CriterionResult r;
    struct Case
    {
        std::string name;
        std::vector<int> sizes;
        bool chain;
        std::size_t expected;
    };
    const std::vector<Case> cases = {
        { "flower(2,2,2)", { 2, 2, 2 }, false, 2 },
        { "flower(2,2)", { 2, 2 }, false, 1 },
        { "chain(1,2,2,1)", { 1, 2, 2, 1 }, true, 2 },
        { "chain(1,2,1)", { 1, 2, 1 }, true, 1 },
    };
    std::ostringstream m;
    std::ostringstream want;
    bool all = true;
    for ( const auto& c : cases )
    {
        std::vector<Network> nets;
        for ( const auto& specs : all_sign_assignments( c.sizes ) )
        {
            nets.push_back( c.chain ? gen_chain( specs ).network : gen_flower( specs ).network );
        }
        const std::size_t got = count_classes( nets );
        all = all && got == c.expected;
        m << ( m.tellp() > 0 ? ", " : "" ) << c.name << " " << got << " of " << nets.size();
        want << ( want.tellp() > 0 ? ", " : "" ) << c.expected;
    }
    r.pass = all;
    r.measured = m.str();
    r.expected = want.str();
    return r;
}

// ---------------------------------------------------------------------------

CriterionResult check_synchronous( const ReproduceOptions& opt )
{
    CriterionResult r;
    const Family f = gen_badc( 3, 3 );
    const Network& net = f.network;
    const auto& c1 = f.labeling.cycles[0];
    const AutomatonSet w = make_set( c1 ) & ~singleton( c1[0] );
    const auto u = unreachables( build_atg( net, opt.limit_n ) );
    std::size_t literal = 0;
    std::size_t library = 0;
    for ( Config x : u )
    {
        const Config hat = x ^ w;
        literal += apply_update( net, w, hat ) == x && has_predecessor( net, hat ) ? 1 : 0;
        try
        {
            const auto s = synchronous_unreachable_witness( net, x );
            library += apply_update( net, s.update, s.predecessor ) == x && has_predecessor( net, s.predecessor ) ? 1 : 0;
        }
        catch ( const Error& )
        {
        }
    }
    r.pass = literal == u.size() && !u.empty();
    r.measured = std::to_string( literal ) + "/" + std::to_string( u.size() ) +
                 " unreachables reached by updating C1-{o} from x^(C1-{o}); " + std::to_string( library ) + "/" +
                 std::to_string( u.size() ) + " reached by the library witness, which updates all of C1";
    r.expected = "all unreachables reached by updating C1-{o}";
    return r;
}

// ---------------------------------------------------------------------------

CriterionResult check_tightness( const ReproduceOptions& opt )
{
    CriterionResult r;
    std::vector<int> d;
    for ( int k : { 3, 5, 7 } )
    {
        const Family f = gen_badc( k, k );
        const AutomatonId o = f.labeling.cycles[0][0];
        const bool xo = ( 2 * k ) % 2 != 0;
        Config start = singleton( o );
        Config target = with_bit( 0, o, xo );
        for ( const auto& cycle : f.labeling.cycles )
        {
            for ( std::size_t j = 1; j < cycle.size(); ++j )
            {
                target = with_bit( target, cycle[j], xo != ( j % 2 == 1 ) );
            }
        }
        const auto dist = bfs_distance( build_atg( f.network, opt.limit_n ), start, target );
        d.push_back( dist.value_or( -1 ) );
    }
    const double ratio = d[1] > 0 ? static_cast<double>( d[2] ) / d[1] : 0.0;
    std::ostringstream m;
    m << std::fixed << std::setprecision( 3 ) << "d(3,3)=" << d[0] << " d(5,5)=" << d[1] << " d(7,7)=" << d[2]
      << " ratio " << ratio;
    r.measured = m.str();
    r.expected = "strictly increasing, ratio > 1.8";
    r.pass = d[0] > 0 && d[0] < d[1] && d[1] < d[2] && ratio > 1.8;
    return r;
}

struct Criterion
{
    std::string id;
    std::string title;
    CriterionResult ( *run )( const ReproduceOptions& );
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all = {
        { "atg-fixtures", "ATGs of BADC(1,2) and BADC(2,2)", check_fixtures },
        { "theorem-shape", "unreachables -> one SCC -> fixed points", check_shape },
        { "planner", "plan soundness and length bounds", check_planner },
        { "fixed-points", "flower and chain fixed points", check_fixed_points },
        { "reverse-duality", "unreachables are fixed points of the reverse", check_reverse },
        { "isomorphism", "dual, canonical and flipped networks", check_isomorphism },
        { "class-counts", "isomorphism classes over sign assignments", check_class_counts },
        { "synchronous", "synchronous predecessors of unreachables", check_synchronous },
        { "tightness", "quadratic growth of BFS distances", check_tightness },
    };
    return all;
}

} // namespace

std::vector<CorpusEntry> theorem_corpus( std::uint64_t seed, int n_max )
{
    std::vector<CorpusEntry> out;
    auto add = [&]( std::string name, Family f ) {
        if ( f.network.size() <= n_max && in_scope( f.network ) )
        {
            out.push_back( { std::move( name ), std::move( f.network ), std::move( f.labeling ) } );
        }
    };
    const std::vector<std::pair<int, int>> badcs = {
        { 1, 3 }, { 1, 4 }, { 2, 3 }, { 3, 3 }, { 3, 4 }, { 2, 5 }, { 4, 4 }, { 3, 6 }, { 5, 5 }, { 1, 8 }, { 6, 6 },
    };
    for ( auto [n1, n2] : badcs )
    {
        for ( SignClass cls : { SignClass::positive, SignClass::negative, SignClass::mixed } )
        {
            std::ostringstream name;
            name << "badc(" << n1 << "," << n2 << ")" << to_string( cls );
            add( name.str(), gen_badc( n1, n2, cls ) );
        }
    }
    const std::vector<std::vector<int>> flowers = {
        { 3, 3, 3 }, { 3, 2, 2 }, { 4, 3, 2 }, { 1, 3, 3 }, { 3, 3, 2, 2 }, { 3, 3, 3, 3 }, { 4, 4, 4 },
    };
    for ( const auto& sizes : flowers )
    {
        for ( SignClass cls : { SignClass::positive, SignClass::negative } )
        {
            std::string name = "flower(";
            for ( std::size_t k = 0; k < sizes.size(); ++k )
            {
                name += ( k ? "," : "" ) + std::to_string( sizes[k] );
            }
            add( name + ")" + std::string( to_string( cls ) ), gen_flower( sizes, cls ) );
        }
    }
    struct ChainCase
    {
        std::vector<int> sizes;
        std::vector<int> offsets;
    };
    const std::vector<ChainCase> chains = {
        { { 3, 3, 3 }, {} },       { { 3, 3, 3, 3 }, {} },  { { 2, 3, 2 }, {} },
        { { 3, 4, 3 }, { 2, 3 } }, { { 3, 3, 3 }, { 2, 2 } }, { { 2, 4, 4, 2 }, { 3, 2, 1 } },
    };
    for ( const auto& c : chains )
    {
        for ( SignClass cls : { SignClass::positive, SignClass::negative } )
        {
            std::string name = "chain(";
            for ( std::size_t k = 0; k < c.sizes.size(); ++k )
            {
                name += ( k ? "," : "" ) + std::to_string( c.sizes[k] );
            }
            name += ")";
            if ( !c.offsets.empty() )
            {
                name += "@";
                for ( std::size_t k = 0; k < c.offsets.size(); ++k )
                {
                    name += ( k ? "," : "" ) + std::to_string( c.offsets[k] );
                }
            }
            add( name + std::string( to_string( cls ) ), gen_chain( c.sizes, c.offsets, cls ) );
        }
    }
    std::size_t cacti = 0;
    for ( std::uint64_t k = 0; k < 400 && cacti < 16; ++k )
    {
        const std::uint64_t s = seed * 1000003ULL + k;
        const std::size_t before = out.size();
        add( "cactus#" + std::to_string( s ), gen_random_cactus( s, n_max, 2 + static_cast<int>( k % 3 ) ) );
        cacti += out.size() - before;
    }
    return out;
}

const std::vector<std::string>& criterion_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for ( const auto& c : criteria() )
        {
            v.push_back( c.id );
        }
        return v;
    }();
    return ids;
}

CriterionResult run_criterion( const std::string& id, const ReproduceOptions& options )
{
    for ( const auto& c : criteria() )
    {
        if ( c.id == id )
        {
            const auto t0 = std::chrono::steady_clock::now();
            CriterionResult r = c.run( options );
            r.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
            r.id = c.id;
            r.title = c.title;
            return r;
        }
    }
    throw Error( "unknown criterion '" + id + "'" );
}

std::vector<CriterionResult> reproduce( const ReproduceOptions& options )
{
    std::vector<CriterionResult> out;
    for ( const auto& id : options.only.empty() ? criterion_ids() : options.only )
    {
        out.push_back( run_criterion( id, options ) );
    }
    return out;
}

std::string format_report( const std::vector<CriterionResult>& results )
{
    std::ostringstream out;
    std::size_t width = 0;
    for ( const auto& r : results )
    {
        width = std::max( width, r.id.size() );
    }
    std::size_t passed = 0;
    for ( const auto& r : results )
    {
        passed += r.pass ? 1 : 0;
        out << ( r.pass ? "PASS  " : "FAIL  " ) << std::left << std::setw( static_cast<int>( width ) ) << r.id << "  "
            << r.title << "\n      measured: " << r.measured << "\n      expected: " << r.expected << "  ("
            << std::fixed << std::setprecision( 2 ) << r.seconds << " s)\n";
    }
    out << passed << "/" << results.size() << " criteria passed\n";
    return out.str();
}

} // namespace xorban
