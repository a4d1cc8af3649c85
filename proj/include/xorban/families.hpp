#pragma once

#include "xorban/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xorban
{

enum class SignClass
{
    positive,
    negative,
    mixed,
};

[[nodiscard]] std::string_view to_string( SignClass c );
[[nodiscard]] SignClass sign_class_from_string( std::string_view s );

// One cycle of a cycle-built network. arc_negated[j] is the sign of the arc
// entering position j (position 0 is entered from the last position).
struct CycleSpec
{
    int length = 0;
    std::vector<bool> arc_negated;

    [[nodiscard]] static CycleSpec positive( int length );
};

// cycles[k][j] is the automaton at position j of cycle k (both 0-based here;
// the JSON sidecar and the cycle-vector notation are 1-based like the ids).
struct FamilyLabeling
{
    std::string kind;
    std::vector<std::vector<AutomatonId>> cycles;
    std::vector<AutomatonId> intersections;

    [[nodiscard]] AutomatonId at( int cycle, int position ) const;
    [[nodiscard]] std::optional<std::pair<int, int>> position_of( AutomatonId id ) const;
    [[nodiscard]] int size() const;
};

struct Family
{
    Network network;
    FamilyLabeling labeling;
};

// Builds the network whose rule for every automaton XORs the predecessors it
// has in each cycle that contains it.
[[nodiscard]] Network network_from_cycles( int n, const std::vector<std::vector<AutomatonId>>& cycles,
                                           const std::vector<CycleSpec>& specs );

[[nodiscard]] Family gen_badc( int n1, int n2, SignClass cls = SignClass::positive );
[[nodiscard]] Family gen_badc( const CycleSpec& c1, const CycleSpec& c2 );

[[nodiscard]] Family gen_flower( const std::vector<int>& sizes, SignClass cls = SignClass::positive );
[[nodiscard]] Family gen_flower( const std::vector<int>& sizes, const std::vector<bool>& center_negated );
[[nodiscard]] Family gen_flower( const std::vector<CycleSpec>& petals );

// offsets[k] is the position (1-based) of o_k inside cycle k+1; empty means
// the default, the last position of the next cycle.
[[nodiscard]] Family gen_chain( const std::vector<int>& sizes, const std::vector<int>& offsets = {},
                                SignClass cls = SignClass::positive );
[[nodiscard]] Family gen_chain( const std::vector<CycleSpec>& cycles, const std::vector<int>& offsets = {} );

[[nodiscard]] Family gen_random_cactus( std::uint64_t seed, int n_max, int cycle_count );

// Simple cycles in arc order, each starting at its smallest automaton.
// Throws LimitError past `limit` cycles.
[[nodiscard]] std::vector<std::vector<AutomatonId>> simple_cycles( const Network& net, std::size_t limit = 100000 );
[[nodiscard]] bool is_cactus( const Network& net );

// Parses "(0000,0001)": one bit string per cycle of the labeling. Shared
// automata must agree across cycles.
[[nodiscard]] Config parse_cycle_vector( std::string_view text, const FamilyLabeling& labeling );
[[nodiscard]] std::string format_cycle_vector( Config x, const FamilyLabeling& labeling );

} // namespace xorban
