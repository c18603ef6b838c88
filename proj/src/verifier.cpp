#include "penta/verifier.hpp"

#include <algorithm>

#include "penta/feasibility.hpp"

namespace penta {

// Grants verifier.cpp access to Decomposition::verified_.
struct VerifierAccess {
    static void set(Decomposition& dec, bool v) { dec.verified_ = v; }
};

}  // namespace penta

namespace penta::verifier {

std::string VerificationReport::str() const {
    if (valid) return "valid, counts " + observed.str();
    std::string out = "invalid";
    for (const auto& f : failures) out += "\n  " + f;
    return out;
}

CycleCounts observed_counts(const Decomposition& dec) {
    CycleCounts c;
    for (const FiveCycle& cy : dec.cycles) {
        switch (cycle_type(cy)) {
            case 1: c.c1++; break;
            case 2: c.c2++; break;
            default: c.c3++; break;
        }
    }
    return c;
}

// Edge accounting is deliberately self-contained: a dense per-block count
// matrix, no shared code with the solver's bitset bookkeeping.
VerificationReport check(const Decomposition& dec) {
    VerificationReport rep;
    const Triplet& tr = dec.triplet;
    if (!tr.positive()) {
        rep.failures.push_back("triplet " + tr.str() + " has nonpositive part");
        return rep;
    }

    rep.cycles_ok = true;
    for (size_t i = 0; i < dec.cycles.size(); ++i) {
        const FiveCycle& cy = dec.cycles[i];
        try {
            cy.validate();
        } catch (const Error& e) {
            rep.cycles_ok = false;
            rep.failures.push_back("cycle #" + std::to_string(i + 1) + " invalid: " + e.what());
            continue;
        }
        for (const Vertex& v : cy.v)
            if (v.index > tr.size(v.part)) {
                rep.cycles_ok = false;
                rep.failures.push_back("cycle #" + std::to_string(i + 1) + " vertex " +
                                       v.str() + " exceeds part size " +
                                       std::to_string(tr.size(v.part)));
            }
    }
    if (!rep.cycles_ok) return rep;

    // counts[block][i][j], blocks RS / RT / ST with 1-based (i,j).
    auto block_of = [](Part a, Part b) {
        if (a == Part::R) return b == Part::S ? 0 : 1;
        return 2;  // S-T
    };
    int dims[3][2] = {{tr.r, tr.s}, {tr.r, tr.t}, {tr.s, tr.t}};
    std::vector<std::vector<int>> counts[3];
    for (int b = 0; b < 3; ++b)
        counts[b].assign(dims[b][0] + 1, std::vector<int>(dims[b][1] + 1, 0));

    bool duplicate = false;
    for (size_t i = 0; i < dec.cycles.size(); ++i) {
        for (const Edge& e : dec.cycles[i].edges()) {
            int b = block_of(e.a.part, e.b.part);
            int& cnt = counts[b][e.a.index][e.b.index];
            if (++cnt == 2) {
                duplicate = true;
                rep.failures.push_back("duplicate edge " + e.str() + " (second use in cycle #" +
                                       std::to_string(i + 1) + ")");
            }
        }
    }

    long long missing = 0;
    std::string first_missing;
    for (int b = 0; b < 3; ++b)
        for (int i = 1; i <= dims[b][0]; ++i)
            for (int j = 1; j <= dims[b][1]; ++j)
                if (counts[b][i][j] == 0) {
                    ++missing;
                    if (first_missing.empty()) {
                        Part pa = b == 2 ? Part::S : Part::R;
                        Part pb = b == 0 ? Part::S : Part::T;
                        first_missing = Edge(Vertex{pa, i}, Vertex{pb, j}).str();
                    }
                }
    if (missing > 0)
        rep.failures.push_back(std::to_string(missing) + " missing edge(s), first " +
                               first_missing);
    rep.cover_ok = !duplicate && missing == 0;
    if (!rep.cover_ok) return rep;

    // Cross-check: with (a)+(b) established, per-type counts are forced by
    // the edge-counting identities; a mismatch would indicate a defect here.
    rep.observed = observed_counts(dec);
    CycleCounts expected = feasibility::cycle_counts(tr);
    rep.counts_ok = rep.observed == expected;
    if (!rep.counts_ok)
        rep.failures.push_back("observed counts " + rep.observed.str() +
                               " != expected " + expected.str());
    rep.valid = rep.cycles_ok && rep.cover_ok && rep.counts_ok;
    return rep;
}

VerificationReport verify(Decomposition& dec) {
    VerificationReport rep = check(dec);
    VerifierAccess::set(dec, rep.valid);
    return rep;
}

}  // namespace penta::verifier
