#include "penta/feasibility.hpp"

#include <algorithm>
#include <numeric>

namespace penta::feasibility {

std::string ConditionReport::str() const {
    std::string out;
    out += "edge-sum=" + std::to_string(edge_sum) +
           (divisibility_ok ? " (div by 5)" : " (NOT div by 5)");
    out += "; parity=" + std::to_string(parity[0]) + std::to_string(parity[1]) +
           std::to_string(parity[2]) + (parity_ok ? " (equal)" : " (mixed)");
    out += "; bound " + std::to_string(bound_lhs) +
           (bound_ok ? " <= " : " > ") + std::to_string(bound_rhs);
    return out;
}

ConditionReport check_conditions(const Triplet& tr) {
    if (!tr.positive()) throw Error("domain", "part sizes must be positive");
    ConditionReport rep;
    rep.edge_sum = tr.edge_count();
    rep.divisibility_ok = rep.edge_sum % 5 == 0;
    rep.parity[0] = tr.r & 1;
    rep.parity[1] = tr.s & 1;
    rep.parity[2] = tr.t & 1;
    rep.parity_ok = rep.parity[0] == rep.parity[1] && rep.parity[1] == rep.parity[2];
    Triplet so = tr.sorted();
    long long a = so.r, b = so.s, c = so.t;
    rep.bound_lhs = c * (a + b);
    rep.bound_rhs = 4 * a * b;
    rep.bound_ok = rep.bound_lhs <= rep.bound_rhs;
    return rep;
}

CycleCounts cycle_counts(const Triplet& tr) {
    ConditionReport rep = check_conditions(tr);
    if (!rep.satisfied())
        throw Error("feasibility", tr.str() + " fails the necessary conditions: " + rep.str());
    long long r = tr.r, s = tr.s, t = tr.t;
    CycleCounts c;
    c.c1 = (4 * s * t - r * t - r * s) / 10;
    c.c2 = (-s * t + 4 * r * t - r * s) / 10;
    c.c3 = (-s * t - r * t + 4 * r * s) / 10;
    return c;
}

const std::vector<std::array<int, 3>>& admissible_mod5_list() {
    static const std::vector<std::array<int, 3>> list = {
        {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 0, 4},
        {0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {0, 4, 0}, {1, 0, 0},
        {2, 0, 0}, {3, 0, 0}, {4, 0, 0}, {1, 1, 2}, {1, 2, 1},
        {2, 1, 1}, {1, 3, 3}, {3, 1, 3}, {3, 3, 1}, {2, 2, 4},
        {2, 4, 2}, {4, 2, 2}, {3, 4, 4}, {4, 3, 4}, {4, 4, 3}};
    return list;
}

ResidueClass residue_class(const Triplet& tr) {
    ResidueClass rc;
    rc.residues = {tr.r % 5, tr.s % 5, tr.t % 5};
    std::array<int, 3> ordered = {tr.r % 5, tr.s % 5, tr.t % 5};
    std::sort(rc.residues.begin(), rc.residues.end());
    const auto& list = admissible_mod5_list();
    rc.member = std::find(list.begin(), list.end(), ordered) != list.end();
    return rc;
}

const std::vector<std::array<int, 3>>& admissible_mod10_odd_list() {
    // Sorted forms of (1,1,7),(1,3,3),(3,9,9),(7,7,9),(1,5,5),(3,5,5),
    // (5,5,5),(7,5,5),(9,5,5).
    static const std::vector<std::array<int, 3>> list = {
        {1, 1, 7}, {1, 3, 3}, {1, 5, 5}, {3, 5, 5}, {3, 9, 9},
        {5, 5, 5}, {5, 5, 7}, {5, 5, 9}, {7, 7, 9}};
    return list;
}

OddResidueClass odd_residue_class_mod10(const Triplet& tr) {
    if (!(tr.r & 1) || !(tr.s & 1) || !(tr.t & 1))
        throw Error("domain", tr.str() + " is not all-odd");
    OddResidueClass rc;
    rc.residues = {tr.r % 10, tr.s % 10, tr.t % 10};
    std::sort(rc.residues.begin(), rc.residues.end());
    const auto& list = admissible_mod10_odd_list();
    rc.member = std::find(list.begin(), list.end(), rc.residues) != list.end();
    return rc;
}

bool is_primitive(const Triplet& tr, bool strict) {
    ConditionReport rep = check_conditions(tr);
    if (!rep.satisfied())
        throw Error("feasibility", tr.str() + " fails the necessary conditions");
    int g = std::gcd(std::gcd(tr.r, tr.s), tr.t);
    if (!strict) return g == 1 || g == 2 || g == 5;
    for (int d = 2; d <= g; ++d) {
        if (g % d != 0) continue;
        Triplet reduced{tr.r / d, tr.s / d, tr.t / d};
        if (check_conditions(reduced).satisfied()) return false;
    }
    return true;
}

Triplet feasible_closure(const Triplet& tr, long long a, long long n) {
    if (a < 1 || n < 0) throw Error("domain", "need a >= 1 and n >= 0");
    if (!check_conditions(tr).satisfied())
        throw Error("feasibility", tr.str() + " fails the necessary conditions");
    Triplet out{static_cast<int>(a * tr.r + 5 * n), static_cast<int>(a * tr.s + 5 * n),
                static_cast<int>(a * tr.t + 5 * n)};
    if (!check_conditions(out).satisfied())
        throw Error("paper-deviation",
                    "closure " + out.str() + " of " + tr.str() + " fails the conditions");
    return out;
}

const std::array<std::array<std::array<int, 3>, 3>, 4>& family_matrices() {
    static const std::array<std::array<std::array<int, 3>, 3>, 4> m = {{
        {{{3, 2, 5}, {3, 2, 5}, {1, 4, 5}}},
        {{{3, 2, 17}, {3, 2, 7}, {1, 4, 19}}},
        {{{5, 10, 20}, {3, 4, 30}, {5, 10, 40}}},
        {{{5, 10, 15}, {3, 4, 11}, {5, 10, 25}}},
    }};
    return m;
}

Triplet generate_family(int matrix_id, long long a, long long b, long long c) {
    if (matrix_id < 1 || matrix_id > 4)
        throw Error("domain", "matrix id must be 1..4");
    if (a < 0 || b < 0 || c < 0 || (a == 0 && b == 0 && c == 0))
        throw Error("domain", "coefficients must be nonnegative, not all zero");
    const auto& M = family_matrices()[matrix_id - 1];
    auto row = [&](int i) {
        return static_cast<int>(M[i][0] * a + M[i][1] * b + M[i][2] * c);
    };
    Triplet out{row(0), row(1), row(2)};
    if (!check_conditions(out).satisfied())
        throw Error("paper-deviation",
                    "family matrix " + std::to_string(matrix_id) + " output " + out.str() +
                        " fails the conditions");
    return out;
}

namespace {

// One pass of the representation search with lower bounds on m and n.
std::optional<Representation> represent_pass(const Triplet& tr, long long lo) {
    int parts[3] = {tr.r, tr.s, tr.t};
    for (int x = 0; x < 3; ++x) {
        std::array<int, 3> perm{x, -1, -1};
        int k = 1;
        for (int i = 0; i < 3; ++i)
            if (i != x) perm[k++] = i;
        long long X = parts[x];
        long long Y = parts[perm[1]], Z = parts[perm[2]];
        for (long long m = lo; m <= X; ++m) {
            for (long long n = lo; m + 4 * n <= X; ++n) {
                long long rem1 = X - m - 4 * n;
                if (rem1 % 10 != 0) continue;
                long long base = 3 * m + 2 * n;
                long long rem2 = Y - base, rem3 = Z - base;
                if (rem2 < 0 || rem3 < 0 || rem2 % 10 != 0 || rem3 % 10 != 0) continue;
                Representation rep;
                rep.m = m;
                rep.n = n;
                rep.p1 = rem1 / 10;
                rep.p2 = rem2 / 10;
                rep.p3 = rem3 / 10;
                rep.perm = perm;
                rep.degenerate = (m == 0 || n == 0);
                return rep;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Representation> represent_triple(const Triplet& tr) {
    if (!check_conditions(tr).satisfied())
        throw Error("feasibility", tr.str() + " fails the necessary conditions");
    if (auto rep = represent_pass(tr, 1)) return rep;
    return represent_pass(tr, 0);  // degenerate fallback, flagged
}

std::optional<std::pair<long long, long long>> eq1_solve(const Triplet& tr) {
    long long rr, tt;
    if (tr.r == tr.s) {
        rr = tr.r;
        tt = tr.t;
    } else if (tr.r == tr.t) {
        rr = tr.r;
        tt = tr.s;
    } else if (tr.s == tr.t) {
        rr = tr.s;
        tt = tr.r;
    } else {
        throw Error("domain", tr.str() + " has no two equal parts");
    }
    // rr = 3m+2n, tt = m+4n; determinant 10.
    long long m10 = 4 * rr - 2 * tt;
    long long n10 = 3 * tt - rr;
    if (m10 < 0 || n10 < 0 || m10 % 10 != 0 || n10 % 10 != 0) return std::nullopt;
    return std::make_pair(m10 / 10, n10 / 10);
}

std::vector<EnumEntry> enumerate_triples(int max_part, bool primitive_only) {
    if (max_part < 1) throw Error("domain", "max_part must be >= 1");
    std::vector<EnumEntry> out;
    for (int r = 1; r <= max_part; ++r)
        for (int s = r; s <= max_part; ++s)
            for (int t = s; t <= max_part; ++t) {
                Triplet tr{r, s, t};
                ConditionReport rep = check_conditions(tr);
                if (!rep.satisfied()) continue;
                bool prim = is_primitive(tr);
                if (primitive_only && !prim) continue;
                EnumEntry e;
                e.tr = tr;
                e.report = rep;
                e.counts = cycle_counts(tr);
                e.residue = residue_class(tr);
                e.primitive = prim;
                out.push_back(e);
            }
    return out;
}

}  // namespace penta::feasibility
