#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "penta/feasibility.hpp"

using namespace penta;
using namespace penta::feasibility;

TEST_CASE("necessary conditions on known triples") {
    CHECK(check_conditions(Triplet{1, 3, 3}).satisfied());
    CHECK(check_conditions(Triplet{9, 19, 23}).satisfied());

    auto rep = check_conditions(Triplet{1, 5, 5});
    CHECK(!rep.satisfied());
    CHECK(rep.divisibility_ok);
    CHECK(rep.parity_ok);
    CHECK(!rep.bound_ok);
    CHECK(rep.bound_lhs == 30);
    CHECK(rep.bound_rhs == 20);
}

TEST_CASE("cycle counts: spot values") {
    CHECK(cycle_counts(Triplet{8, 8, 6}) == CycleCounts{8, 8, 16});
    CHECK(cycle_counts(Triplet{1, 3, 3}) == CycleCounts{3, 0, 0});
    CHECK(cycle_counts(Triplet{9, 13, 19}) == CycleCounts{70, 32, 5});
    // edge total matches: 5 * 107 = 535
    CHECK(5 * cycle_counts(Triplet{9, 13, 19}).total() == Triplet{9, 13, 19}.edge_count());
    CHECK_THROWS_AS(cycle_counts(Triplet{1, 5, 5}), Error);
}

TEST_CASE("cycle counts: exhaustive identity up to 120") {
    for (int r = 1; r <= 120; ++r)
        for (int s = r; s <= 120; ++s)
            for (int t = s; t <= 120; ++t) {
                Triplet tr{r, s, t};
                if (!check_conditions(tr).satisfied()) continue;
                CycleCounts c = cycle_counts(tr);
                REQUIRE(c.c1 >= 0);
                REQUIRE(c.c2 >= 0);
                REQUIRE(c.c3 >= 0);
                REQUIRE(5 * c.total() == tr.edge_count());
                // the formulas are exact divisions
                long long R = r, S = s, T = t;
                REQUIRE((4 * S * T - R * T - R * S) % 10 == 0);
            }
}

TEST_CASE("mod-5 residue classes") {
    CHECK(residue_class(Triplet{1, 3, 3}).member);
    CHECK(residue_class(Triplet{1, 3, 3}).residues == std::array<int, 3>{1, 3, 3});
    CHECK(residue_class(Triplet{2, 2, 4}).member);
    CHECK(!residue_class(Triplet{1, 2, 4}).member);

    // brute force over all 125 residue triples == the 25-element table
    std::set<std::array<int, 3>> brute;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                if ((a * b + a * c + b * c) % 5 == 0) brute.insert({a, b, c});
    std::set<std::array<int, 3>> table(admissible_mod5_list().begin(),
                                       admissible_mod5_list().end());
    CHECK(brute == table);
    CHECK(table.size() == 25);
}

TEST_CASE("mod-10 residue classes for all-odd triples") {
    CHECK(odd_residue_class_mod10(Triplet{11, 13, 23}).member);
    CHECK(odd_residue_class_mod10(Triplet{11, 13, 23}).residues ==
          std::array<int, 3>{1, 3, 3});
    CHECK(odd_residue_class_mod10(Triplet{9, 19, 23}).member);
    CHECK(odd_residue_class_mod10(Triplet{9, 19, 23}).residues ==
          std::array<int, 3>{3, 9, 9});
    CHECK(!odd_residue_class_mod10(Triplet{3, 7, 11}).member);
    CHECK_THROWS_AS(odd_residue_class_mod10(Triplet{2, 2, 4}), Error);

    // brute force over odd residues == the 9-element table
    std::set<std::array<int, 3>> brute;
    for (int a = 1; a < 10; a += 2)
        for (int b = 1; b < 10; b += 2)
            for (int c = 1; c < 10; c += 2)
                if ((a * b + a * c + b * c) % 5 == 0) {
                    std::array<int, 3> key{a, b, c};
                    std::sort(key.begin(), key.end());
                    brute.insert(key);
                }
    std::set<std::array<int, 3>> table(admissible_mod10_odd_list().begin(),
                                       admissible_mod10_odd_list().end());
    CHECK(brute == table);
    CHECK(table.size() == 9);
}

TEST_CASE("primitivity rules") {
    CHECK(is_primitive(Triplet{1, 3, 3}));
    CHECK(is_primitive(Triplet{2, 6, 6}));        // gcd 2, listed primitive
    CHECK(!is_primitive(Triplet{6, 18, 18}));     // 3 * (2,6,6)
    CHECK(!is_primitive(Triplet{2, 6, 6}, true)); // strict rule: 2 * (1,3,3)
    CHECK(is_primitive(Triplet{4, 10, 10}));
    CHECK(is_primitive(Triplet{4, 10, 10}, true)); // (2,5,5) fails parity
    CHECK_THROWS_AS(is_primitive(Triplet{1, 5, 5}), Error);
}

TEST_CASE("feasible closure") {
    CHECK(feasible_closure(Triplet{1, 3, 3}, 1, 0) == Triplet{1, 3, 3});
    CHECK(feasible_closure(Triplet{1, 3, 3}, 1, 2) == Triplet{11, 13, 13});
    CHECK(feasible_closure(Triplet{2, 2, 4}, 3, 2) == Triplet{16, 16, 22});

    // property: closure outputs always satisfy the conditions
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> da(1, 50), dn(0, 50);
    std::vector<Triplet> seeds{{1, 3, 3}, {2, 2, 4}, {5, 5, 5}, {9, 13, 19}, {6, 12, 16}};
    for (int it = 0; it < 300; ++it) {
        Triplet base = seeds[it % seeds.size()];
        Triplet out = feasible_closure(base, da(rng), dn(rng));
        CHECK(check_conditions(out).satisfied());
    }
}

TEST_CASE("generator matrices") {
    CHECK(generate_family(1, 1, 1, 0) == Triplet{5, 5, 5});
    CHECK(generate_family(1, 0, 0, 1) == Triplet{5, 5, 5});
    CHECK(generate_family(2, 1, 1, 1) == Triplet{22, 12, 24});

    std::mt19937 rng(20240602);
    std::uniform_int_distribution<int> d(0, 50);
    for (int it = 0; it < 400; ++it) {
        int a = d(rng), b = d(rng), c = d(rng);
        if (a + b + c == 0) a = 1;
        Triplet out = generate_family(it % 4 + 1, a, b, c);
        CHECK(check_conditions(out).satisfied());
    }
}

TEST_CASE("representation r=m+4n+10p1, s=t=3m+2n+10p") {
    auto rep = represent_triple(Triplet{7, 11, 11});
    REQUIRE(rep.has_value());
    CHECK(rep->m == 3);
    CHECK(rep->n == 1);
    CHECK(rep->p1 == 0);
    CHECK(rep->p2 == 0);
    CHECK(rep->p3 == 0);
    CHECK(!rep->degenerate);

    auto deg = represent_triple(Triplet{1, 3, 3});
    REQUIRE(deg.has_value());
    CHECK(deg->degenerate);  // only n=0 solutions exist
    CHECK(deg->m == 1);
    CHECK(deg->n == 0);

    auto deg2 = represent_triple(Triplet{2, 2, 4});
    REQUIRE(deg2.has_value());
    CHECK(deg2->degenerate);  // only m=0 solutions exist

    // Some condition-satisfying triples have no representation at all,
    // even with m,n >= 0 (the two 3m+2n parts must agree mod 10):
    // these return the diagnostic nullopt.
    CHECK(!represent_triple(Triplet{4, 10, 10}).has_value());
    CHECK(!represent_triple(Triplet{10, 10, 12}).has_value());
    CHECK(!represent_triple(Triplet{3, 5, 5}).has_value());

    // reconstruction identity wherever a representation exists
    int found = 0, missing = 0;
    for (const auto& e : enumerate_triples(40, false)) {
        auto r = represent_triple(e.tr);
        if (!r) {
            ++missing;
            continue;
        }
        ++found;
        int parts[3] = {e.tr.r, e.tr.s, e.tr.t};
        CHECK(parts[r->perm[0]] == r->m + 4 * r->n + 10 * r->p1);
        CHECK(parts[r->perm[1]] == 3 * r->m + 2 * r->n + 10 * r->p2);
        CHECK(parts[r->perm[2]] == 3 * r->m + 2 * r->n + 10 * r->p3);
    }
    CHECK(found > missing);  // the bulk of triples are representable
}

TEST_CASE("eq1 solve for K_{r,r,s}") {
    CHECK(eq1_solve(Triplet{8, 8, 6}) == std::make_pair(2LL, 1LL));
    CHECK(eq1_solve(Triplet{3, 3, 1}) == std::make_pair(1LL, 0LL));
    CHECK(!eq1_solve(Triplet{15, 15, 11}).has_value());
    CHECK_THROWS_AS(eq1_solve(Triplet{1, 2, 3}), Error);
}

TEST_CASE("enumeration") {
    CHECK(enumerate_triples(2, false).empty());

    auto prim4 = enumerate_triples(4, true);
    auto has = [&](Triplet tr) {
        for (const auto& e : prim4)
            if (e.tr == tr) return true;
        return false;
    };
    CHECK(has(Triplet{1, 3, 3}));
    CHECK(has(Triplet{2, 2, 4}));

    auto prim25 = enumerate_triples(25, true);
    std::vector<Triplet> nine;
    for (const auto& e : prim25)
        if (e.tr.r == 9) nine.push_back(e.tr);
    for (Triplet want : {Triplet{9, 9, 13}, Triplet{9, 13, 19}, Triplet{9, 17, 17},
                         Triplet{9, 19, 23}, Triplet{9, 25, 25}})
        CHECK(std::find(nine.begin(), nine.end(), want) != nine.end());

    // lexicographic order, sorted triples, all condition-satisfying, all in
    // the mod-5 table
    auto all = enumerate_triples(60, false);
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].tr < all[i].tr);
    for (const auto& e : all) {
        CHECK(e.tr.sorted() == e.tr);
        CHECK(e.report.satisfied());
        CHECK(e.residue.member);
        if ((e.tr.r & 1) && (e.tr.s & 1) && (e.tr.t & 1))
            CHECK(odd_residue_class_mod10(e.tr).member);
    }
}

TEST_CASE("lemma c1 == c3 (mod s) for all-odd triples") {
    for (const auto& e : enumerate_triples(120, false)) {
        if (!((e.tr.r & 1) && (e.tr.s & 1) && (e.tr.t & 1))) continue;
        long long diff = e.counts.c1 - e.counts.c3;
        CHECK(((diff % e.tr.s) + e.tr.s) % e.tr.s == 0);
    }
}
