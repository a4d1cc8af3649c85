#pragma once

#include "xorban/core.hpp"
#include "xorban/families.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xorban
{

// Renaming plus state negation: configuration x of A corresponds to the
// configuration of B that has bit perm[i] equal to x_i xor flips_i.
struct IsoWitness
{
    std::vector<AutomatonId> perm;
    AutomatonSet flips = 0;

    [[nodiscard]] static IsoWitness identity( int n, AutomatonSet flips = 0 );
    [[nodiscard]] Config map( Config x ) const;
    [[nodiscard]] IsoWitness inverse() const;
    // this, then `next`.
    [[nodiscard]] IsoWitness then( const IsoWitness& next ) const;
};

[[nodiscard]] bool check_witness( const Network& a, const Network& b, const IsoWitness& w );
[[nodiscard]] std::optional<IsoWitness> find_isomorphism( const Network& a, const Network& b );

enum class RewriteKind
{
    flip_pair,
    sign_swap,
    region_flip,
    vertex_flip,
};

[[nodiscard]] std::string_view to_string( RewriteKind k );

struct RewriteStep
{
    RewriteKind kind = RewriteKind::vertex_flip;
    // flip_pair / sign_swap: the rule and the two literal sources involved.
    AutomatonId rule = -1;
    AutomatonId first = -1;
    AutomatonId second = -1;
    // region_flip / vertex_flip: the flipped automata.
    AutomatonSet region = 0;

    [[nodiscard]] static RewriteStep flip_pair( AutomatonId rule, AutomatonId a, AutomatonId b );
    [[nodiscard]] static RewriteStep sign_swap( AutomatonId rule, AutomatonId a, AutomatonId b );
    [[nodiscard]] static RewriteStep region_flip( AutomatonSet s );
    [[nodiscard]] static RewriteStep vertex_flip( AutomatonSet s );
};

struct Rewritten
{
    Network network;
    IsoWitness witness;
};

// Throws RewriteError when the step does not match the network.
[[nodiscard]] Rewritten rewrite( const Network& net, const RewriteStep& step );

struct Normalized
{
    Network network;
    std::vector<RewriteStep> steps;
    // Maps the input onto the normalized network.
    IsoWitness witness;
    [[nodiscard]] bool all_positive() const;
};

// Canonical representative of the vertex-flip orbit: the lexicographically
// smallest vector of rule parities, each odd rule negating its
// largest-source literal.
[[nodiscard]] Normalized normalize_signs( const Network& net );

struct Classification
{
    std::string family;
    SignClass sign_class = SignClass::positive;
    std::vector<Config> predicted_fixed_points;
    std::vector<Config> predicted_unreachables;
};

[[nodiscard]] Classification classify_flower( const Network& net, const FamilyLabeling& labeling );
[[nodiscard]] Classification classify_chain( const Network& net, const FamilyLabeling& labeling );

// Flower (kind "badc" when m = 2) or chain labeling recovered from the
// interaction graph, if the network has one of these shapes.
[[nodiscard]] std::optional<FamilyLabeling> detect_family( const Network& net );
[[nodiscard]] Classification classify( const Network& net, const FamilyLabeling& labeling );

// Fixed points from the root assignments propagated along nude paths.
[[nodiscard]] std::vector<Config> fixed_points_symbolic( const Network& net );

} // namespace xorban
