#pragma once

#include "xorban/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xorban
{

inline constexpr int default_atg_limit = 24;
// Hard ceiling for --limit-n: one 32-bit mask per configuration.
inline constexpr int max_atg_limit = 30;

// Asynchronous transition graph. Instead of the 2^n x n successor table we
// keep, per configuration, the set of unstable automata: the successor of x
// on {i} is x with bit i flipped when i is unstable, x itself otherwise.
class Atg
{
public:
    Atg() = default;
    Atg( int n, std::vector<std::uint32_t> unstable ) : _n( n ), _unstable( std::move( unstable ) ) {}

    [[nodiscard]] int n() const { return _n; }
    [[nodiscard]] std::size_t size() const { return _unstable.size(); }
    [[nodiscard]] AutomatonSet unstable( Config x ) const { return _unstable[x]; }
    [[nodiscard]] Config successor( Config x, AutomatonId i ) const
    {
        return bit( _unstable[x], i ) ? x ^ singleton( i ) : x;
    }
    [[nodiscard]] bool is_fixed_point( Config x ) const { return _unstable[x] == 0; }
    // Some neighbour x^i has i unstable, i.e. an incoming arc other than a loop.
    [[nodiscard]] bool has_predecessor( Config x ) const;

    bool operator==( const Atg& ) const = default;

private:
    int _n = 0;
    std::vector<std::uint32_t> _unstable;
};

// workers = 0 picks the hardware concurrency.
[[nodiscard]] Atg build_atg( const Network& net, int limit = default_atg_limit, unsigned workers = 0 );

struct Condensation
{
    std::vector<std::uint32_t> scc_of; // configuration -> SCC id
    std::vector<std::uint64_t> sizes;
    std::vector<std::vector<std::uint32_t>> dag; // sorted, without self arcs
    std::vector<bool> terminal;

    [[nodiscard]] std::size_t count() const { return sizes.size(); }
};

[[nodiscard]] Condensation condense( const Atg& atg );

[[nodiscard]] std::vector<Config> fixed_points( const Atg& atg );
[[nodiscard]] std::vector<Config> unreachables( const Atg& atg );
[[nodiscard]] std::vector<std::uint32_t> attractors( const Condensation& cond );
// Transient configuration whose SCC contains more than one configuration.
[[nodiscard]] bool is_reversible_transient( const Condensation& cond, Config x );

[[nodiscard]] std::optional<int> bfs_distance( const Atg& atg, Config from, Config to );
// Distances from `from` to every configuration, -1 where unreachable.
[[nodiscard]] std::vector<int> bfs_distances( const Atg& atg, Config from );

struct ShapeReport
{
    bool in_scope = false;
    std::string scope_note;
    std::vector<Config> fixed_points;
    std::vector<Config> unreachables;
    std::uint64_t big_scc_size = 0;
    std::size_t scc_count = 0;
    bool verdict = false;
    std::optional<int> big_scc_diameter;
};

// Shape check on an already built graph, without the scope test.
[[nodiscard]] ShapeReport analyse_shape( const Atg& atg, const Condensation& cond, int diameter_limit = 10 );
[[nodiscard]] ShapeReport check_theorem_shape( const Network& net, int limit = default_atg_limit,
                                               int diameter_limit = 10 );

[[nodiscard]] std::string atg_to_dot( const Atg& atg );
[[nodiscard]] std::string atg_to_json( const Atg& atg, const Condensation& cond );

} // namespace xorban
