#pragma once

#include <array>
#include <optional>
#include <vector>

#include "penta/core.hpp"

namespace penta::feasibility {

// Evaluation of the three necessary conditions:
//   5 | rs+rt+st,   r == s == t (mod 2),   largest*(sum of others) <= 4*(their product).
// The bound is checked on the sorted triple with integer cross-multiplication.
struct ConditionReport {
    bool divisibility_ok = false;
    bool parity_ok = false;
    bool bound_ok = false;
    long long edge_sum = 0;   // rs+rt+st
    int parity[3] = {0, 0, 0};
    long long bound_lhs = 0;  // c*(a+b) for sorted (a,b,c)
    long long bound_rhs = 0;  // 4*a*b

    bool satisfied() const { return divisibility_ok && parity_ok && bound_ok; }
    std::string str() const;
};

ConditionReport check_conditions(const Triplet& tr);

// c1=(4st-rt-rs)/10, c2=(-st+4rt-rs)/10, c3=(-st-rt+4rs)/10.
// Throws Error("feasibility") when the conditions fail (division need not
// be exact then).
CycleCounts cycle_counts(const Triplet& tr);

// Residues mod 5, sorted, plus membership in the 25-triple admissible list.
struct ResidueClass {
    std::array<int, 3> residues{};  // sorted
    bool member = false;
};
ResidueClass residue_class(const Triplet& tr);

// The 25 admissible ordered residue triples mod 5 (permutation-closed).
const std::vector<std::array<int, 3>>& admissible_mod5_list();

// All-odd triples: sorted residues mod 10 against the 9 admissible classes.
// Throws Error("domain") unless r,s,t are all odd.
struct OddResidueClass {
    std::array<int, 3> residues{};  // sorted
    bool member = false;
};
OddResidueClass odd_residue_class_mod10(const Triplet& tr);

const std::vector<std::array<int, 3>>& admissible_mod10_odd_list();

// Default rule: condition-satisfying and gcd(r,s,t) in {1,2,5}.
// strict=true instead rejects any triple that is d*(r',s',t') for d>1 with
// (r',s',t') condition-satisfying; the two rules differ e.g. on (2,6,6).
bool is_primitive(const Triplet& tr, bool strict = false);

// (ar+5n, as+5n, at+5n); the result is checked to satisfy the conditions.
Triplet feasible_closure(const Triplet& tr, long long a, long long n);

// The four generator matrices; returns M*(a,b,c), condition-checked.
Triplet generate_family(int matrix_id, long long a, long long b, long long c);
const std::array<std::array<std::array<int, 3>, 3>, 4>& family_matrices();

// Representation r=m+4n+10p1, s=3m+2n+10p2, t=3m+2n+10p3 over some
// permutation of parts. degenerate flags m==0 or n==0 solutions, accepted
// when no solution with m,n >= 1 exists.
struct Representation {
    long long m = 0, n = 0;
    long long p1 = 0, p2 = 0, p3 = 0;
    std::array<int, 3> perm{};  // perm[0] = index of the m+4n+10p1 part
    bool degenerate = false;
};
std::optional<Representation> represent_triple(const Triplet& tr);

// For the K_{r,r,s} shape: r=3m+2n, t=m+4n in integers >= 0.
// Throws Error("domain") when no two parts are equal.
std::optional<std::pair<long long, long long>> eq1_solve(const Triplet& tr);

struct EnumEntry {
    Triplet tr;
    ConditionReport report;
    CycleCounts counts;
    ResidueClass residue;
    bool primitive = false;
};

// All sorted triples r <= s <= t <= max_part satisfying the conditions, in
// lexicographic order; optionally only primitives (default rule).
std::vector<EnumEntry> enumerate_triples(int max_part, bool primitive_only);

}  // namespace penta::feasibility
