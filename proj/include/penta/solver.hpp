#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "penta/core.hpp"
#include "penta/feasibility.hpp"

namespace penta::solver {

struct SearchConfig {
    double time_budget = 120.0;                   // seconds
    long long node_budget = 4'000'000'000LL;      // cycle placements
    std::uint64_t seed = 0;                       // 0 = natural vertex order
    enum class Mode { exact, strategy_first } mode = Mode::strategy_first;
    bool symmetry_breaking = true;
    int shift = 0;    // global shift of seeded t-indices, 0..2
    bool diagonal_pass = false;  // secondary type-2 seeding (Strategy step-3 style)
    int workers = 1;  // >1: parallel top-level branches, nondeterministic pick
};

enum class SolveStatus {
    solved,
    infeasible,        // necessary conditions fail
    space_exhausted,   // full search space explored, no decomposition
    budget_exhausted,  // time or node budget hit first
};

const char* status_name(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::space_exhausted;
    std::optional<Decomposition> dec;            // set iff solved (verified)
    feasibility::ConditionReport conditions;     // set iff infeasible
    long long nodes = 0;
    double seconds = 0.0;
    long long seeded_cycles = 0;
};

// Full pipeline: conditions, optional strategy seeding (with exact-mode
// fallback), exact search. Searches the sorted triple internally and maps
// the result back to the positional input. Single-worker runs are
// reproducible for a fixed config.
SolveResult solve(const Triplet& tr, const SearchConfig& cfg);

// Type-1 cycles (R_i, S_j, T_{j+3(i-1)}, S_{j+2}, T_{j+3(i-1)+1}) for
// j=1..s, i=1..min(r-4, c1/s), s- and t-indices wrapped into range and
// t-indices offset by shift. Requires r <= s <= t. Returns nullopt when the
// emitted cycles are not edge-disjoint (seed rejected); an empty vector
// when the i-range is empty.
std::optional<std::vector<FiveCycle>> strategy_seed(const Triplet& tr, int shift = 0);

struct ResidualTargets {
    CycleCounts remaining;         // (c1',c2',c3') after the partial
    bool feasible = false;         // residuals >= 0 and block budgets consistent
    bool lemma_applicable = false; // r and t odd
    bool lemma_ok = false;         // c1' == c3' (mod s), when applicable
};
ResidualTargets residual_targets(const Triplet& tr, const std::vector<FiveCycle>& partial);

// Completes an edge-disjoint partial assignment to an exact cover, or
// reports exhaustion. Branches on the lexicographically smallest uncovered
// edge (vertex order R1..Rr, S1..Ss, T1..Tt).
SolveResult exact_search(const Triplet& tr, const std::vector<FiveCycle>& partial,
                         const SearchConfig& cfg);

}  // namespace penta::solver
