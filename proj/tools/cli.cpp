#include "cli.hpp"

#include "xorban/atg.hpp"
#include "xorban/equiv.hpp"
#include "xorban/error.hpp"
#include "xorban/planner.hpp"
#include "xorban/reproduce.hpp"
#include "xorban/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace xorban::cli
{

namespace
{

using nlohmann::json;

std::string format_set( AutomatonSet s )
{
    std::string out = "{";
    bool first = true;
    for ( AutomatonId i : set_members( s ) )
    {
        out += ( first ? "" : "," ) + std::to_string( i + 1 );
        first = false;
    }
    return out + "}";
}

void write_configs( std::ostream& out, const std::string& title, const std::vector<Config>& xs, int n )
{
    out << title << ": " << xs.size() << "\n";
    for ( Config x : xs )
    {
        out << "  " << config_to_string( x, n ) << "\n";
    }
}

FamilyLabeling load_labeling( const std::string& path )
{
    std::ifstream in( path );
    if ( !in )
    {
        throw Error( "cannot open labeling file '" + path + "'" );
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return labeling_from_json( buf.str() );
}

void check_limit( int limit )
{
    if ( limit < 1 || limit > max_atg_limit )
    {
        throw Error( "--limit-n must be between 1 and " + std::to_string( max_atg_limit ) );
    }
}

AutomatonSet parse_ids( const std::vector<int>& ids, int n )
{
    AutomatonSet s = 0;
    for ( int id : ids )
    {
        if ( id < 1 || id > n )
        {
            throw Error( "automaton " + std::to_string( id ) + " is out of range 1.." + std::to_string( n ) );
        }
        s |= singleton( id - 1 );
    }
    return s;
}

struct GenArgs
{
    std::string family;
    std::vector<int> sizes;
    std::vector<int> offsets;
    std::string sign_class = "positive";
    std::uint64_t seed = 1;
    int n_max = 12;
    int cycles = 3;
    std::string labeling;
};

void run_gen( const GenArgs& a, std::ostream& out )
{
    const SignClass cls = sign_class_from_string( a.sign_class );
    Family f;
    if ( a.family == "badc" )
    {
        if ( a.sizes.size() != 2 )
        {
            throw Error( "badc takes two cycle sizes" );
        }
        f = gen_badc( a.sizes[0], a.sizes[1], cls );
    }
    else if ( a.family == "flower" )
    {
        f = gen_flower( a.sizes, cls );
    }
    else if ( a.family == "chain" )
    {
        f = gen_chain( a.sizes, a.offsets, cls );
    }
    else if ( a.family == "cactus" )
    {
        f = gen_random_cactus( a.seed, a.n_max, a.cycles );
    }
    else
    {
        throw Error( "unknown family '" + a.family + "' (expected badc, flower, chain or cactus)" );
    }
    if ( !a.labeling.empty() )
    {
        std::ofstream file( a.labeling );
        if ( !file )
        {
            throw Error( "cannot write labeling file '" + a.labeling + "'" );
        }
        file << labeling_to_json( f.labeling ) << "\n";
    }
    out << emit_network( f.network );
}

void run_eval( const std::string& path, const std::string& config, const std::vector<int>& update, std::ostream& out )
{
    const Network net = load_network( path );
    const int n = net.size();
    const Config x = config_from_string( config, n );
    if ( !update.empty() )
    {
        out << config_to_string( apply_update( net, parse_ids( update, n ), x ), n ) << "\n";
        return;
    }
    Config fx = 0;
    for ( AutomatonId i = 0; i < n; ++i )
    {
        fx = with_bit( fx, i, eval_local( net, i, x ) );
    }
    out << "f(x): " << config_to_string( fx, n ) << "\n";
    out << "unstable: " << format_set( unstable_set( net, x ) ) << "\n";
    out << "fixed point: " << ( fx == x ? "yes" : "no" ) << "\n";
    out << "has predecessor: " << ( has_predecessor( net, x ) ? "yes" : "no" ) << "\n";
}

void run_atg( const std::string& path, bool dot, bool as_json, int limit, std::ostream& out )
{
    check_limit( limit );
    if ( dot && as_json )
    {
        throw Error( "--dot and --json are exclusive" );
    }
    const Network net = load_network( path );
    const Atg atg = build_atg( net, limit );
    if ( dot )
    {
        out << atg_to_dot( atg );
        return;
    }
    const Condensation cond = condense( atg );
    if ( as_json )
    {
        out << atg_to_json( atg, cond );
        return;
    }
    const int n = net.size();
    ShapeReport shape = analyse_shape( atg, cond );
    const bool scope = is_strongly_connected( net ) && find_induced_badc( net ).has_value();
    out << "automata: " << n << "\n";
    out << "configurations: " << atg.size() << "\n";
    write_configs( out, "fixed points", shape.fixed_points, n );
    write_configs( out, "unreachables", shape.unreachables, n );
    out << "sccs: " << shape.scc_count << "\n";
    out << "largest scc: " << shape.big_scc_size << "\n";
    if ( shape.big_scc_diameter )
    {
        out << "largest scc diameter: " << *shape.big_scc_diameter << "\n";
    }
    out << "theorem scope: " << ( scope ? "yes" : "no" ) << "\n";
    out << "unreachables -> one scc -> fixed points: " << ( shape.verdict ? "yes" : "no" ) << "\n";
}

struct PlanArgs
{
    std::string path;
    std::string start;
    std::string target;
    bool oracle = false;
    bool vec = false;
    std::string labeling;
    int limit = default_atg_limit;
};

void run_plan( const PlanArgs& a, std::ostream& out )
{
    check_limit( a.limit );
    const Network net = load_network( a.path );
    const int n = net.size();
    Config x = 0;
    Config t = 0;
    if ( a.vec )
    {
        if ( a.labeling.empty() )
        {
            throw Error( "--vec needs --labeling" );
        }
        const FamilyLabeling lab = load_labeling( a.labeling );
        x = parse_cycle_vector( a.start, lab );
        t = parse_cycle_vector( a.target, lab );
    }
    else
    {
        x = config_from_string( a.start, n );
        t = config_from_string( a.target, n );
    }
    const auto badc = badc_structure( net );
    const UpdatePlan plan = badc ? plan_badc( net, x, t ) : plan_general( net, x, t );
    const VerifyResult check = verify_plan( net, plan );
    if ( !check.ok )
    {
        throw DefectError( "plan does not replay to the target" );
    }
    out << "planner: " << ( badc ? "double cycle" : "general" ) << "\n";
    out << "steps:";
    for ( AutomatonId i : plan.steps )
    {
        out << " " << i + 1;
    }
    out << "\nlength: " << plan.steps.size() << "\n";
    out << "  start " << config_to_string( x, n ) << "\n";
    for ( std::size_t k = 0; k < plan.steps.size(); ++k )
    {
        out << "  " << plan.steps[k] + 1 << " -> " << config_to_string( check.trace[k], n ) << "\n";
    }
    out << "verified: yes\n";
    if ( a.oracle )
    {
        const Atg atg = build_atg( net, a.limit );
        const auto d = bfs_distance( atg, x, t );
        if ( !d || plan.steps.size() < static_cast<std::size_t>( *d ) )
        {
            throw DefectError( "plan is shorter than the breadth-first distance" );
        }
        out << "bfs distance: " << *d << "\n";
    }
}

void run_fixpoints( const std::string& path, bool oracle, int limit, std::ostream& out )
{
    check_limit( limit );
    const Network net = load_network( path );
    auto fps = fixed_points_symbolic( net );
    std::sort( fps.begin(), fps.end() );
    if ( oracle && fps != fixed_points( build_atg( net, limit ) ) )
    {
        throw DefectError( "symbolic fixed points differ from the ATG scan" );
    }
    write_configs( out, "fixed points", fps, net.size() );
}

void run_iso( const std::string& a_path, const std::string& b_path, std::ostream& out )
{
    const Network a = load_network( a_path );
    const Network b = load_network( b_path );
    const auto w = find_isomorphism( a, b );
    if ( !w )
    {
        out << "distinct\n";
        return;
    }
    if ( !check_witness( a, b, *w ) )
    {
        throw DefectError( "isomorphism witness does not check" );
    }
    out << "isomorphic\nperm:";
    for ( std::size_t i = 0; i < w->perm.size(); ++i )
    {
        out << " " << i + 1 << "->" << w->perm[i] + 1;
    }
    out << "\nflips: " << format_set( w->flips ) << "\n";
}

void run_classify( const std::string& path, const std::string& labeling, bool oracle, int limit, std::ostream& out )
{
    check_limit( limit );
    const Network net = load_network( path );
    const int n = net.size();
    std::optional<FamilyLabeling> lab;
    if ( !labeling.empty() )
    {
        lab = load_labeling( labeling );
    }
    else
    {
        lab = detect_family( net );
        if ( !lab )
        {
            throw ClassificationError( "network is neither a flower nor a cycle chain" );
        }
    }
    const Classification c = classify( net, *lab );
    if ( oracle )
    {
        const Atg atg = build_atg( net, limit );
        auto fp = c.predicted_fixed_points;
        auto un = c.predicted_unreachables;
        std::sort( fp.begin(), fp.end() );
        std::sort( un.begin(), un.end() );
        if ( fp != fixed_points( atg ) || un != unreachables( atg ) )
        {
            throw DefectError( "class predictions differ from the ATG" );
        }
    }
    out << "family: " << c.family << "\n";
    out << "cycles:";
    for ( const auto& cycle : lab->cycles )
    {
        out << " " << cycle.size();
    }
    out << "\nclass: " << to_string( c.sign_class ) << "\n";
    write_configs( out, "predicted fixed points", c.predicted_fixed_points, n );
    write_configs( out, "predicted unreachables", c.predicted_unreachables, n );
    if ( oracle )
    {
        out << "checked against the ATG: yes\n";
    }
}

void run_canon( const std::string& path, const std::string& form, std::ostream& out )
{
    const Network net = load_network( path );
    if ( form == "canonical" )
    {
        out << emit_network( canonical( net ) );
    }
    else if ( form == "dual" )
    {
        out << emit_network( dual( net ) );
    }
    else if ( form == "reverse" )
    {
        out << emit_network( reverse( net ) );
    }
    else if ( form == "normalized" )
    {
        const Normalized norm = normalize_signs( net );
        for ( const auto& step : norm.steps )
        {
            out << "# " << to_string( step.kind );
            if ( step.kind == RewriteKind::flip_pair || step.kind == RewriteKind::sign_swap )
            {
                out << " in rule " << step.rule + 1 << " on x" << step.first + 1 << ", x" << step.second + 1;
            }
            else
            {
                out << " " << format_set( step.region );
            }
            out << "\n";
        }
        out << emit_network( norm.network );
    }
    else
    {
        throw Error( "unknown form '" + form + "' (expected canonical, dual, reverse or normalized)" );
    }
}

int run_reproduce( const ReproduceOptions& options, std::ostream& out )
{
    check_limit( options.limit_n );
    for ( const auto& id : options.only )
    {
        const auto& ids = criterion_ids();
        if ( std::find( ids.begin(), ids.end(), id ) == ids.end() )
        {
            throw Error( "unknown criterion '" + id + "'" );
        }
    }
    const auto results = reproduce( options );
    out << format_report( results );
    const bool all = std::all_of( results.begin(), results.end(), []( const auto& r ) { return r.pass; } );
    return all ? 0 : 2;
}

} // namespace

std::string labeling_to_json( const FamilyLabeling& labeling )
{
    json cycles = json::array();
    for ( const auto& cycle : labeling.cycles )
    {
        json c = json::array();
        for ( AutomatonId id : cycle )
        {
            c.push_back( id + 1 );
        }
        cycles.push_back( c );
    }
    json inter = json::array();
    for ( AutomatonId id : labeling.intersections )
    {
        inter.push_back( id + 1 );
    }
    nlohmann::ordered_json j;
    j["kind"] = labeling.kind;
    j["cycles"] = cycles;
    j["intersections"] = inter;
    return j.dump();
}

FamilyLabeling labeling_from_json( const std::string& text )
{
    try
    {
        const json j = json::parse( text );
        FamilyLabeling out;
        out.kind = j.at( "kind" ).get<std::string>();
        for ( const auto& c : j.at( "cycles" ) )
        {
            std::vector<AutomatonId> cycle;
            for ( const auto& id : c )
            {
                const int v = id.get<int>();
                if ( v < 1 || v > max_automata )
                {
                    throw Error( "labeling id " + std::to_string( v ) + " out of range" );
                }
                cycle.push_back( v - 1 );
            }
            if ( cycle.empty() )
            {
                throw Error( "labeling has an empty cycle" );
            }
            out.cycles.push_back( std::move( cycle ) );
        }
        if ( j.contains( "intersections" ) )
        {
            for ( const auto& id : j.at( "intersections" ) )
            {
                out.intersections.push_back( id.get<int>() - 1 );
            }
        }
        return out;
    }
    catch ( const json::exception& e )
    {
        throw Error( std::string( "bad labeling: " ) + e.what() );
    }
}

int run( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Analysis of XOR Boolean automata networks" };
    app.require_subcommand( 1 );
    app.set_help_all_flag( "--help-all", "Help for every subcommand" );

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand( "gen", "Generate a network of a named family" );
    gen_cmd->add_option( "family", gen.family, "badc, flower, chain or cactus" )->required();
    gen_cmd->add_option( "sizes", gen.sizes, "Cycle sizes" );
    gen_cmd->add_option( "--class", gen.sign_class, "positive, negative or mixed" );
    gen_cmd->add_option( "--offsets", gen.offsets, "Chain offsets, 1-based positions in the next cycle" )->delimiter( ',' );
    gen_cmd->add_option( "--seed", gen.seed, "Seed for random cacti" );
    gen_cmd->add_option( "--n-max", gen.n_max, "Size bound for random cacti" );
    gen_cmd->add_option( "--cycles", gen.cycles, "Cycle count for random cacti" );
    gen_cmd->add_option( "--labeling", gen.labeling, "Write the cycle labeling (JSON) to this file" );

    std::string eval_net;
    std::string eval_x;
    std::vector<int> eval_update;
    auto* eval_cmd = app.add_subcommand( "eval", "Evaluate the local functions or apply an update" );
    eval_cmd->add_option( "network", eval_net )->required();
    eval_cmd->add_option( "config", eval_x )->required();
    eval_cmd->add_option( "--update", eval_update, "Automata updated together, e.g. 1,3" )->delimiter( ',' );

    std::string atg_net;
    bool atg_dot = false;
    bool atg_json = false;
    int atg_limit = default_atg_limit;
    auto* atg_cmd = app.add_subcommand( "atg", "Build the asynchronous transition graph" );
    atg_cmd->add_option( "network", atg_net )->required();
    atg_cmd->add_flag( "--dot", atg_dot, "Graphviz output" );
    atg_cmd->add_flag( "--json", atg_json, "JSON output" );
    atg_cmd->add_flag( "--report", "Text summary (default)" );
    atg_cmd->add_option( "--limit-n", atg_limit, "Largest network size to expand" );

    PlanArgs plan;
    auto* plan_cmd = app.add_subcommand( "plan", "Plan asynchronous updates between two configurations" );
    plan_cmd->add_option( "network", plan.path )->required();
    plan_cmd->add_option( "start", plan.start )->required();
    plan_cmd->add_option( "target", plan.target )->required();
    plan_cmd->add_flag( "--oracle", plan.oracle, "Compare with the breadth-first distance" );
    plan_cmd->add_flag( "--vec", plan.vec, "Configurations in cycle-vector notation" );
    plan_cmd->add_option( "--labeling", plan.labeling, "Cycle labeling (JSON) for --vec" );
    plan_cmd->add_option( "--limit-n", plan.limit, "Largest network size for --oracle" );

    std::string fp_net;
    bool fp_oracle = false;
    int fp_limit = default_atg_limit;
    auto* fp_cmd = app.add_subcommand( "fixpoints", "Fixed points from the nude-path structure" );
    fp_cmd->add_option( "network", fp_net )->required();
    fp_cmd->add_flag( "--oracle", fp_oracle, "Cross-check against the ATG" );
    fp_cmd->add_option( "--limit-n", fp_limit, "Largest network size for --oracle" );

    std::string iso_a;
    std::string iso_b;
    auto* iso_cmd = app.add_subcommand( "iso", "Search an isomorphism between two networks" );
    iso_cmd->add_option( "first", iso_a )->required();
    iso_cmd->add_option( "second", iso_b )->required();

    std::string cls_net;
    std::string cls_labeling;
    bool cls_oracle = false;
    int cls_limit = default_atg_limit;
    auto* cls_cmd = app.add_subcommand( "classify", "Detect the family and predict fixed points" );
    cls_cmd->add_option( "network", cls_net )->required();
    cls_cmd->add_option( "--labeling", cls_labeling, "Cycle labeling (JSON) instead of detection" );
    cls_cmd->add_flag( "--oracle", cls_oracle, "Cross-check against the ATG" );
    cls_cmd->add_option( "--limit-n", cls_limit, "Largest network size for --oracle" );

    std::string canon_net;
    std::string canon_form;
    auto* canon_cmd = app.add_subcommand( "canon", "Emit a transformed network" );
    canon_cmd->add_option( "network", canon_net )->required();
    canon_cmd->add_option( "--form", canon_form, "canonical, dual, reverse or normalized" )->required();

    ReproduceOptions repro;
    auto* repro_cmd = app.add_subcommand( "reproduce", "Run the reproduction checks" );
    repro_cmd->add_option( "--only", repro.only, "Criterion id, repeatable" );
    repro_cmd->add_option( "--corpus-seed", repro.corpus_seed, "Seed of the random cactus corpus" );
    repro_cmd->add_option( "--limit-n", repro.limit_n, "Largest network size to expand" );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e, out, err );
        return code == 0 ? 0 : 1;
    }

    try
    {
        if ( gen_cmd->parsed() )
            run_gen( gen, out );
        else if ( eval_cmd->parsed() )
            run_eval( eval_net, eval_x, eval_update, out );
        else if ( atg_cmd->parsed() )
            run_atg( atg_net, atg_dot, atg_json, atg_limit, out );
        else if ( plan_cmd->parsed() )
            run_plan( plan, out );
        else if ( fp_cmd->parsed() )
            run_fixpoints( fp_net, fp_oracle, fp_limit, out );
        else if ( iso_cmd->parsed() )
            run_iso( iso_a, iso_b, out );
        else if ( cls_cmd->parsed() )
            run_classify( cls_net, cls_labeling, cls_oracle, cls_limit, out );
        else if ( canon_cmd->parsed() )
            run_canon( canon_net, canon_form, out );
        else if ( repro_cmd->parsed() )
            return run_reproduce( repro, out );
        return 0;
    }
    catch ( const DefectError& e )
    {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    catch ( const Error& e )
    {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace xorban::cli
