#pragma once

#include "xorban/atg.hpp"
#include "xorban/core.hpp"
#include "xorban/families.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace xorban
{

struct CorpusEntry
{
    std::string name;
    Network network;
    FamilyLabeling labeling;
};

// Strongly connected networks with an induced double cycle of size >= 4 and
// at most `n_max` automata: fixed families plus seeded random cacti.
[[nodiscard]] std::vector<CorpusEntry> theorem_corpus( std::uint64_t seed, int n_max = 12 );

struct ReproduceOptions
{
    std::uint64_t corpus_seed = 1;
    // Criterion ids to run; empty runs all of them.
    std::vector<std::string> only;
    int limit_n = default_atg_limit;
};

struct CriterionResult
{
    std::string id;
    std::string title;
    bool pass = false;
    std::string measured;
    std::string expected;
    double seconds = 0.0;
};

[[nodiscard]] const std::vector<std::string>& criterion_ids();
// Throws Error for an unknown id.
[[nodiscard]] CriterionResult run_criterion( const std::string& id, const ReproduceOptions& options );
[[nodiscard]] std::vector<CriterionResult> reproduce( const ReproduceOptions& options );
[[nodiscard]] std::string format_report( const std::vector<CriterionResult>& results );

} // namespace xorban
