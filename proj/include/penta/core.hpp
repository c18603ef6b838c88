#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace penta {

// Library error with a stable machine-readable code ("validation",
// "feasibility", "domain", "format", "store", "missing-base",
// "hypothesis", "io", "paper-deviation", "budget").
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

// The three vertex parts of a complete tripartite graph. Order R < S < T
// is used for vertex comparisons and canonical cycle forms.
enum class Part : std::uint8_t { R = 0, S = 1, T = 2 };

char part_letter(Part p);

// Part sizes (r,s,t). Order is significant: constructions address parts
// positionally.
struct Triplet {
    int r = 0;
    int s = 0;
    int t = 0;

    auto operator<=>(const Triplet&) const = default;

    int size(Part p) const { return p == Part::R ? r : p == Part::S ? s : t; }
    int max_part() const { return r > s ? (r > t ? r : t) : (s > t ? s : t); }
    long long edge_count() const {
        long long R = r, S = s, T = t;
        return R * S + R * T + S * T;
    }
    // Nondecreasing view (a,b,c) with a <= b <= c.
    Triplet sorted() const;
    bool positive() const { return r >= 1 && s >= 1 && t >= 1; }
    std::string str() const;  // "K_{r,s,t}"
};

// One vertex, 1-based within its part.
struct Vertex {
    Part part = Part::R;
    int index = 0;

    auto operator<=>(const Vertex&) const = default;
    std::string str() const;  // "R1", "S2", ...
};

// Unordered inter-part edge, stored with a < b.
struct Edge {
    Vertex a, b;

    Edge() = default;
    Edge(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}
    auto operator<=>(const Edge&) const = default;
    std::string str() const;  // "R1-S2"
};

// An ordered 5-cycle over the three parts, interpreted cyclically.
// Valid cycles have no two cyclically adjacent vertices in one part and
// five pairwise distinct induced edges (which forces five distinct
// vertices and a part multiset with exactly one singleton part).
struct FiveCycle {
    std::array<Vertex, 5> v{};

    auto operator<=>(const FiveCycle&) const = default;

    std::array<Edge, 5> edges() const;
    // Throws Error("validation") naming the offending edge or vertex.
    void validate() const;
    bool is_valid() const;
    std::string str() const;  // "(R1,S1,T1,S2,T2)"
};

// Canonical rotation/direction: starts at the smallest vertex and proceeds
// toward its smaller neighbor. Two cycles with equal edge sets canonicalize
// identically; the map is idempotent.
FiveCycle canonicalize(const FiveCycle& c);

// 1, 2 or 3: the part contributing exactly one vertex (R, S, T resp.).
int cycle_type(const FiveCycle& c);

// Cycle-type multiplicities (c1,c2,c3).
struct CycleCounts {
    long long c1 = 0;
    long long c2 = 0;
    long long c3 = 0;

    auto operator<=>(const CycleCounts&) const = default;
    long long total() const { return c1 + c2 + c3; }
    std::string str() const;  // "(c1,c2,c3)"
};

// A claimed 5-cycle decomposition of K_{r,s,t}. The verified flag is
// settable only through verifier::verify (see VerifierAccess).
class Decomposition {
public:
    Triplet triplet;
    std::vector<FiveCycle> cycles;

    Decomposition() = default;
    Decomposition(Triplet tr, std::vector<FiveCycle> cs)
        : triplet(tr), cycles(std::move(cs)) {}

    bool verified() const { return verified_; }
    // Any mutation invalidates prior verification.
    void invalidate() { verified_ = false; }

    // Cycles in canonical form, sorted; the stable order used for files,
    // digests and rendering.
    std::vector<FiveCycle> canonical_cycles() const;

private:
    bool verified_ = false;
    friend struct VerifierAccess;
};

// n x n array over symbols 1..n, each exactly once per row and column.
struct LatinSquare {
    int n = 0;
    std::vector<int> cells;  // row-major

    int at(int i, int j) const { return cells[(i - 1) * n + (j - 1)]; }  // 1-based
    bool is_latin() const;

    // L(i,j) = ((i+j-2) mod n) + 1.
    static LatinSquare cyclic(int n);
    // L(i,j) = ((j-i) mod n) + 1; symbol 1 fills the diagonal.
    static LatinSquare diagonal_first(int n);
};

// Relabels parts: position i of the result takes part mapping[i] of dec
// (mapping is a permutation of {0,1,2}). Cycles are re-canonicalized; the
// result is unverified.
Decomposition permute_parts(const Decomposition& dec, const std::array<int, 3>& mapping);

// Parsing helpers shared by the store format and the CLI.
Vertex parse_vertex(const std::string& token);  // "R1" -> Vertex

}  // namespace penta
