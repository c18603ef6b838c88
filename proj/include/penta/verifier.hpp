#pragma once

#include <string>
#include <vector>

#include "penta/core.hpp"

namespace penta::verifier {

// Outcome of exact edge-multiset verification. failures carry witnesses
// ("duplicate edge S1-T2 ...", "missing edge ...", "cycle #3 invalid ...").
struct VerificationReport {
    bool valid = false;
    bool cycles_ok = false;   // every cycle passes FiveCycle invariants + index bounds
    bool cover_ok = false;    // edge multiset equals E(K_{r,s,t}) exactly
    bool counts_ok = false;   // observed per-type counts match the counting formulas
    CycleCounts observed;
    std::vector<std::string> failures;

    std::string str() const;
};

// Checks (a) cycle validity, (b) exact edge cover, (c) observed type counts
// against the counting formulas. On success marks dec verified; any failure
// clears the flag. This is the only way the flag gets set.
VerificationReport verify(Decomposition& dec);

// Read-only variant for callers holding a const decomposition.
VerificationReport check(const Decomposition& dec);

// Tallies cycle_type over the list; throws Error("validation") on an
// invalid cycle.
CycleCounts observed_counts(const Decomposition& dec);

}  // namespace penta::verifier
