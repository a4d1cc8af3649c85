#pragma once

#include "xorban/error.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xorban
{

// Automata are numbered 0..n-1 internally. Text formats and the CLI use
// 1..n; the conversion happens only at the I/O boundary.
using AutomatonId = int;

// A configuration packs the state of automaton k into bit k. The same
// representation doubles as a set of automata (update sets, flip sets).
using Config = std::uint64_t;
using AutomatonSet = std::uint64_t;

inline constexpr int max_automata = 64;

[[nodiscard]] constexpr bool bit( Config x, AutomatonId i ) { return ( ( x >> i ) & 1U ) != 0; }
[[nodiscard]] constexpr Config singleton( AutomatonId i ) { return Config{ 1 } << i; }
[[nodiscard]] constexpr Config full_set( int n ) { return n >= 64 ? ~Config{ 0 } : ( Config{ 1 } << n ) - 1; }
[[nodiscard]] constexpr Config with_bit( Config x, AutomatonId i, bool v )
{
    return v ? ( x | singleton( i ) ) : ( x & ~singleton( i ) );
}

// '0'/'1' string, character k is automaton k.
[[nodiscard]] std::string config_to_string( Config x, int n );
[[nodiscard]] Config config_from_string( std::string_view text, int n );

[[nodiscard]] std::vector<AutomatonId> set_members( AutomatonSet s );
[[nodiscard]] AutomatonSet make_set( std::span<const AutomatonId> ids );

struct Literal
{
    AutomatonId source = 0;
    bool negated = false;

    auto operator<=>( const Literal& ) const = default;
};

// One XOR local function: the exclusive or of its literals.
class LocalRule
{
public:
    LocalRule() = default;
    explicit LocalRule( std::vector<Literal> literals );

    [[nodiscard]] std::span<const Literal> literals() const { return _literals; }
    [[nodiscard]] std::size_t size() const { return _literals.size(); }

    // XOR of the source bits (repeated sources cancel, matching the semantics).
    [[nodiscard]] Config source_mask() const { return _mask; }
    // Parity of negated literals: the constant term of the XOR.
    [[nodiscard]] bool parity() const { return _parity; }
    [[nodiscard]] bool eval( Config x ) const
    {
        return ( ( std::popcount( x & _mask ) & 1 ) != 0 ) != _parity;
    }
    [[nodiscard]] bool has_source( AutomatonId s ) const;

    // Flip the sign of every literal sourced at s.
    [[nodiscard]] LocalRule flip_source( AutomatonId s ) const;
    // Negate the function by flipping the literal with the smallest source.
    [[nodiscard]] LocalRule negate() const;

    bool operator==( const LocalRule& other ) const { return _literals == other._literals; }

private:
    void refresh();

    std::vector<Literal> _literals;
    Config _mask = 0;
    bool _parity = false;
};

class Network
{
public:
    Network() = default;

    // Rejects empty rules, out-of-range sources and repeated sources.
    explicit Network( std::vector<LocalRule> rules );

    // Contraction may fold two paths onto the same head; only that
    // construction keeps repeated sources.
    [[nodiscard]] static Network with_repeated_sources( std::vector<LocalRule> rules );

    [[nodiscard]] int size() const { return static_cast<int>( _rules.size() ); }
    [[nodiscard]] const LocalRule& rule( AutomatonId i ) const;
    [[nodiscard]] std::span<const LocalRule> rules() const { return _rules; }
    [[nodiscard]] bool has_repeated_sources() const { return _repeated; }

    bool operator==( const Network& other ) const { return _rules == other._rules; }

private:
    struct unchecked_tag
    {
    };
    Network( std::vector<LocalRule> rules, unchecked_tag );

    std::vector<LocalRule> _rules;
    bool _repeated = false;
};

// Function-level equality: same source parities and constants per rule.
[[nodiscard]] bool same_truth_tables( const Network& a, const Network& b );

[[nodiscard]] bool eval_local( const Network& net, AutomatonId i, Config x );
[[nodiscard]] Config apply_update( const Network& net, AutomatonSet w, Config x );
[[nodiscard]] Config apply_single( const Network& net, AutomatonId i, Config x );
[[nodiscard]] bool is_stable( const Network& net, AutomatonId i, Config x );
[[nodiscard]] bool is_fixed_point( const Network& net, Config x );
[[nodiscard]] AutomatonSet unstable_set( const Network& net, Config x );
// True iff x has an incoming non-loop asynchronous arc from some neighbour.
[[nodiscard]] bool has_predecessor( const Network& net, Config x );

[[nodiscard]] std::vector<AutomatonId> influencers( const Network& net, AutomatonId j );
[[nodiscard]] std::vector<std::vector<AutomatonId>> successors( const Network& net );
[[nodiscard]] bool is_strongly_connected( const Network& net );

// Shortest path in the interaction graph from `from` to any automaton of
// `targets`, lowest-id tie-break. Returns the automata in order, both ends
// included, or nothing when no target is reachable.
[[nodiscard]] std::optional<std::vector<AutomatonId>> shortest_path( const Network& net, AutomatonId from,
                                                                     AutomatonSet targets );

struct NudePath
{
    std::vector<AutomatonId> automata; // head first, the queried automaton last
    bool negative = false;             // parity of negated literals along the path

    [[nodiscard]] int length() const { return static_cast<int>( automata.size() ) - 1; }
    [[nodiscard]] AutomatonId head() const { return automata.front(); }
};

// Longest backward chain of single-influencer automata ending at i. Inside a
// pure cycle the walk stops before revisiting an automaton.
[[nodiscard]] NudePath maximal_nude_path( const Network& net, AutomatonId i );
[[nodiscard]] bool is_maximal_nude_path( const Network& net, const NudePath& path );

// Every automaton's value in a fixed point is forced by a "root": an automaton
// whose maximal nude path has length 0, or the lowest id of a cycle made only
// of single-influencer automata. head[i]/negative[i] give the root feeding i and
// the sign of the nude path from it (roots map to themselves, positive).
struct NudeRoots
{
    std::vector<AutomatonId> roots;
    std::vector<AutomatonId> head;
    std::vector<bool> negative;
};
[[nodiscard]] NudeRoots nude_roots( const Network& net );

[[nodiscard]] Network dual( const Network& net );
[[nodiscard]] Network reverse( const Network& net );
[[nodiscard]] Network flip( const Network& net, AutomatonSet s );
[[nodiscard]] Network canonical( const Network& net );
// The flip set used by canonical(): automata whose nude path from their root is negative.
[[nodiscard]] AutomatonSet canonical_flip_set( const Network& net );

struct Contraction
{
    Network network;
    std::vector<AutomatonId> kept; // new id -> original id
};
[[nodiscard]] Contraction contraction( const Network& net );

} // namespace xorban
