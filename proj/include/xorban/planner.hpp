#pragma once

#include "xorban/core.hpp"

#include <optional>
#include <vector>

namespace xorban
{

struct UpdatePlan
{
    Config start = 0;
    Config target = 0;
    std::vector<AutomatonId> steps;
    // Configuration after each step, as computed by the planner.
    std::vector<Config> trace;
};

struct VerifyResult
{
    bool ok = false;
    std::vector<Config> trace;
    // First step whose outcome differs from the planner's recorded trace, or
    // steps.size() when the replay ends away from the target.
    std::optional<std::size_t> divergence;
};

[[nodiscard]] VerifyResult verify_plan( const Network& net, const UpdatePlan& plan );

// Two cycles sharing only `center`; each cycle lists its automata in arc
// order starting at the center. cycle1 is the longer one.
struct InducedBadc
{
    std::vector<AutomatonId> cycle1;
    std::vector<AutomatonId> cycle2;
    AutomatonId center = 0;

    [[nodiscard]] int size() const { return static_cast<int>( cycle1.size() + cycle2.size() ) - 1; }
    [[nodiscard]] AutomatonSet members() const { return make_set( cycle1 ) | make_set( cycle2 ); }
};

// Smallest induced double cycle with size >= 4 and a cycle of length >= 3.
[[nodiscard]] std::optional<InducedBadc> find_induced_badc( const Network& net );
// The double-cycle structure of a network that is itself a BADC (any size).
[[nodiscard]] std::optional<InducedBadc> badc_structure( const Network& net );

// `net` must be a BADC. Throws PlanError when x is stable or the target is
// unreachable.
[[nodiscard]] UpdatePlan plan_badc( const Network& net, Config x, Config target );

struct Destabilization
{
    std::vector<AutomatonId> steps;
    Config result = 0;
};

// Updates along a shortest path i -> j so that j ends up unstable.
[[nodiscard]] Destabilization plan_destabilize( const Network& net, Config x, AutomatonId i, AutomatonId j );

[[nodiscard]] UpdatePlan plan_general( const Network& net, Config x, Config target );

struct SynchronousWitness
{
    Config predecessor = 0;
    AutomatonSet update = 0;
};

// For an unreachable x of a BADC: a configuration that is not unreachable
// and a synchronous update set leading from it to x.
[[nodiscard]] SynchronousWitness synchronous_unreachable_witness( const Network& net, Config x );

} // namespace xorban
