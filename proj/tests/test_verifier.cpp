#include <set>

#include "doctest.h"
#include "penta/verifier.hpp"

using namespace penta;

namespace {

FiveCycle cyc(const char* a, const char* b, const char* c, const char* d, const char* e) {
    return FiveCycle{{parse_vertex(a), parse_vertex(b), parse_vertex(c), parse_vertex(d),
                      parse_vertex(e)}};
}

// The hand-checkable K_{1,3,3} decomposition used throughout the tests.
Decomposition k133() {
    return Decomposition(Triplet{1, 3, 3},
                         {cyc("R1", "S1", "T1", "S2", "T2"), cyc("R1", "S2", "T3", "S3", "T1"),
                          cyc("R1", "S3", "T2", "S1", "T3")});
}

}  // namespace

TEST_CASE("K_{1,3,3} verifies; edge multiset equals the full edge set") {
    Decomposition dec = k133();

    // independent oracle: the union of cycle edges must equal all 15 edges
    std::set<Edge> got;
    for (const FiveCycle& c : dec.cycles)
        for (const Edge& e : c.edges()) CHECK(got.insert(e).second);
    std::set<Edge> want;
    for (int j = 1; j <= 3; ++j) {
        want.insert(Edge(Vertex{Part::R, 1}, Vertex{Part::S, j}));
        want.insert(Edge(Vertex{Part::R, 1}, Vertex{Part::T, j}));
        for (int k = 1; k <= 3; ++k)
            want.insert(Edge(Vertex{Part::S, j}, Vertex{Part::T, k}));
    }
    CHECK(got == want);

    auto rep = verifier::verify(dec);
    CHECK(rep.valid);
    CHECK(rep.observed == CycleCounts{3, 0, 0});
    CHECK(dec.verified());
}

TEST_CASE("duplicate and missing edges are reported with witnesses") {
    Decomposition dec = k133();
    dec.cycles[2] = dec.cycles[0];  // one cycle twice, one gone
    auto rep = verifier::verify(dec);
    CHECK(!rep.valid);
    CHECK(!dec.verified());
    bool has_dup = false;
    for (const auto& f : rep.failures)
        if (f.find("duplicate edge") != std::string::npos) has_dup = true;
    CHECK(has_dup);
}

TEST_CASE("empty cycle list reports all edges missing") {
    Decomposition dec(Triplet{1, 3, 3}, {});
    auto rep = verifier::verify(dec);
    CHECK(!rep.valid);
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures[0].find("15 missing edge") != std::string::npos);
}

TEST_CASE("out-of-range vertices are a triplet mismatch") {
    Decomposition dec = k133();
    dec.triplet = Triplet{1, 3, 2};  // T2/T3 now exceed the part
    auto rep = verifier::verify(dec);
    CHECK(!rep.valid);
    bool named = false;
    for (const auto& f : rep.failures)
        if (f.find("exceeds part size") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("invalid cycles are rejected before edge accounting") {
    Decomposition dec = k133();
    dec.cycles.push_back(cyc("R1", "S1", "T1", "S1", "T2"));  // repeated edge inside
    auto rep = verifier::verify(dec);
    CHECK(!rep.valid);
    CHECK(!rep.cycles_ok);
}

TEST_CASE("observed_counts tallies cycle types") {
    CHECK(verifier::observed_counts(k133()) == CycleCounts{3, 0, 0});
    Decomposition one(Triplet{2, 2, 1}, {cyc("R1", "S1", "R2", "S2", "T1")});
    CHECK(verifier::observed_counts(one) == CycleCounts{0, 0, 1});
}

TEST_CASE("the verified flag is cleared by mutation") {
    Decomposition dec = k133();
    verifier::verify(dec);
    CHECK(dec.verified());
    dec.invalidate();
    CHECK(!dec.verified());
}
