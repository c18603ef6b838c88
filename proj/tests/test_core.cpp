#include <algorithm>
#include <set>

#include "doctest.h"
#include "penta/core.hpp"

using namespace penta;

namespace {

FiveCycle cyc(const char* a, const char* b, const char* c, const char* d, const char* e) {
    return FiveCycle{{parse_vertex(a), parse_vertex(b), parse_vertex(c), parse_vertex(d),
                      parse_vertex(e)}};
}

}  // namespace

TEST_CASE("canonicalize picks the smallest vertex and direction") {
    FiveCycle in = cyc("S2", "T1", "R1", "S1", "T2");
    FiveCycle want = cyc("R1", "S1", "T2", "S2", "T1");
    CHECK(canonicalize(in) == want);
}

TEST_CASE("canonicalize is idempotent and rotation/direction invariant") {
    FiveCycle base = cyc("R1", "S1", "T1", "S2", "T2");
    FiveCycle canon = canonicalize(base);
    CHECK(canonicalize(canon) == canon);

    // all rotations and both directions land on the same canonical form
    for (int rot = 0; rot < 5; ++rot) {
        FiveCycle fwd, bwd;
        for (int i = 0; i < 5; ++i) {
            fwd.v[i] = base.v[(rot + i) % 5];
            bwd.v[i] = base.v[(rot + 5 - i) % 5];
        }
        CHECK(canonicalize(fwd) == canon);
        CHECK(canonicalize(bwd) == canon);
    }
}

TEST_CASE("cycle validation rejects malformed cycles") {
    CHECK_THROWS_AS(cyc("R1", "R2", "S1", "T1", "S2").validate(), Error);
    // T1-S1 ... S1 repeated around T1 duplicates the edge S1-T1
    CHECK_THROWS_AS(cyc("R1", "S1", "T1", "S1", "T2").validate(), Error);
    FiveCycle zero_index{{Vertex{Part::R, 0}, Vertex{Part::S, 1}, Vertex{Part::T, 1},
                          Vertex{Part::S, 2}, Vertex{Part::T, 2}}};
    CHECK_THROWS_AS(zero_index.validate(), Error);
    CHECK(cyc("R1", "S1", "T1", "S2", "T2").is_valid());
}

TEST_CASE("cycle_type matches the one-vertex part") {
    CHECK(cycle_type(cyc("R1", "S1", "T1", "S2", "T2")) == 1);
    CHECK(cycle_type(cyc("R1", "T1", "R2", "S1", "T2")) == 2);
    CHECK(cycle_type(cyc("R1", "S1", "R2", "S2", "T1")) == 3);
}

TEST_CASE("every valid cycle has exactly one singleton part and 5 distinct edges") {
    std::vector<FiveCycle> samples = {
        cyc("R1", "S1", "T1", "S2", "T2"), cyc("R2", "T3", "R1", "S1", "T2"),
        cyc("R1", "S2", "R2", "S1", "T4"), cyc("S3", "T1", "S1", "R1", "T2"),
    };
    for (const FiveCycle& c : samples) {
        int singles = 0;
        int count[3] = {0, 0, 0};
        for (const Vertex& v : c.v) count[static_cast<int>(v.part)]++;
        for (int p = 0; p < 3; ++p)
            if (count[p] == 1) singles++;
        CHECK(singles == 1);
        auto edge_array = c.edges();
        std::set<Edge> es(edge_array.begin(), edge_array.end());
        CHECK(es.size() == 5);
        for (const Edge& e : es) CHECK(e.a.part != e.b.part);
    }
}

TEST_CASE("triplet sorting and edge counts") {
    Triplet tr{9, 3, 5};
    CHECK(tr.sorted() == Triplet{3, 5, 9});
    CHECK(tr.edge_count() == 27 + 45 + 15);
    CHECK(Triplet{1, 3, 3}.edge_count() == 15);
}

TEST_CASE("latin squares") {
    for (int n : {1, 2, 3, 5, 8}) {
        CHECK(LatinSquare::cyclic(n).is_latin());
        LatinSquare d = LatinSquare::diagonal_first(n);
        CHECK(d.is_latin());
        for (int i = 1; i <= n; ++i) CHECK(d.at(i, i) == 1);
    }
    LatinSquare bad{2, {1, 2, 1, 2}};
    CHECK(!bad.is_latin());
}

TEST_CASE("permute_parts relabels and preserves cycle structure") {
    Decomposition dec(Triplet{1, 3, 3}, {canonicalize(cyc("R1", "S1", "T1", "S2", "T2"))});
    Decomposition out = permute_parts(dec, {1, 2, 0});  // sizes (3,3,1)
    CHECK(out.triplet == Triplet{3, 3, 1});
    CHECK(out.cycles.size() == 1);
    CHECK(cycle_type(out.cycles[0]) == 3);  // the singleton part moved to T

    // round trip via the inverse permutation restores the original
    Decomposition back = permute_parts(out, {2, 0, 1});
    CHECK(back.triplet == dec.triplet);
    CHECK(back.canonical_cycles() == dec.canonical_cycles());
}

TEST_CASE("vertex token parsing") {
    CHECK(parse_vertex("R1") == Vertex{Part::R, 1});
    CHECK(parse_vertex("T12") == Vertex{Part::T, 12});
    CHECK_THROWS_AS(parse_vertex("X1"), Error);
    CHECK_THROWS_AS(parse_vertex("R"), Error);
    CHECK_THROWS_AS(parse_vertex("R0"), Error);
    CHECK_THROWS_AS(parse_vertex("R1x"), Error);
}
