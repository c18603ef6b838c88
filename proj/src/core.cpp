#include "penta/core.hpp"

#include <algorithm>
#include <cctype>

namespace penta {

char part_letter(Part p) {
    switch (p) {
        case Part::R: return 'R';
        case Part::S: return 'S';
        default: return 'T';
    }
}

Triplet Triplet::sorted() const {
    std::array<int, 3> a{r, s, t};
    std::sort(a.begin(), a.end());
    return Triplet{a[0], a[1], a[2]};
}

std::string Triplet::str() const {
    return "K_{" + std::to_string(r) + "," + std::to_string(s) + "," +
           std::to_string(t) + "}";
}

std::string Vertex::str() const {
    return std::string(1, part_letter(part)) + std::to_string(index);
}

std::string Edge::str() const { return a.str() + "-" + b.str(); }

std::array<Edge, 5> FiveCycle::edges() const {
    std::array<Edge, 5> e;
    for (int i = 0; i < 5; ++i) e[i] = Edge(v[i], v[(i + 1) % 5]);
    return e;
}

void FiveCycle::validate() const {
    for (const Vertex& x : v)
        if (x.index < 1)
            throw Error("validation", "vertex index must be >= 1, got " + x.str());
    for (int i = 0; i < 5; ++i) {
        const Vertex& a = v[i];
        const Vertex& b = v[(i + 1) % 5];
        if (a.part == b.part)
            throw Error("validation",
                        "intra-part edge " + a.str() + "-" + b.str() + " in " + str());
    }
    auto e = edges();
    std::sort(e.begin(), e.end());
    for (int i = 1; i < 5; ++i)
        if (e[i] == e[i - 1])
            throw Error("validation", "repeated edge " + e[i].str() + " in " + str());
}

bool FiveCycle::is_valid() const {
    try {
        validate();
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::string FiveCycle::str() const {
    std::string out = "(";
    for (int i = 0; i < 5; ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out + ")";
}

FiveCycle canonicalize(const FiveCycle& c) {
    c.validate();
    int start = 0;
    for (int i = 1; i < 5; ++i)
        if (c.v[i] < c.v[start]) start = i;
    const Vertex& fwd = c.v[(start + 1) % 5];
    const Vertex& bwd = c.v[(start + 4) % 5];
    int dir = fwd < bwd ? 1 : -1;
    FiveCycle out;
    for (int i = 0; i < 5; ++i) out.v[i] = c.v[((start + dir * i) % 5 + 5) % 5];
    return out;
}

int cycle_type(const FiveCycle& c) {
    c.validate();
    int count[3] = {0, 0, 0};
    for (const Vertex& x : c.v) count[static_cast<int>(x.part)]++;
    // A valid cycle always has pattern (1,2,2) across parts.
    if (count[0] == 1 && count[1] == 2 && count[2] == 2) return 1;
    if (count[0] == 2 && count[1] == 1 && count[2] == 2) return 2;
    if (count[0] == 2 && count[1] == 2 && count[2] == 1) return 3;
    throw Error("validation", "impossible part multiset in " + c.str());
}

std::string CycleCounts::str() const {
    return "(" + std::to_string(c1) + "," + std::to_string(c2) + "," +
           std::to_string(c3) + ")";
}

std::vector<FiveCycle> Decomposition::canonical_cycles() const {
    std::vector<FiveCycle> out;
    out.reserve(cycles.size());
    for (const FiveCycle& c : cycles) out.push_back(canonicalize(c));
    std::sort(out.begin(), out.end());
    return out;
}

bool LatinSquare::is_latin() const {
    if (n < 1 || cells.size() != static_cast<size_t>(n) * n) return false;
    for (int i = 1; i <= n; ++i) {
        std::vector<bool> row(n + 1, false), col(n + 1, false);
        for (int j = 1; j <= n; ++j) {
            int a = at(i, j), b = at(j, i);
            if (a < 1 || a > n || b < 1 || b > n) return false;
            if (row[a] || col[b]) return false;
            row[a] = col[b] = true;
        }
    }
    return true;
}

LatinSquare LatinSquare::cyclic(int n) {
    LatinSquare L{n, std::vector<int>(static_cast<size_t>(n) * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) L.cells[(i - 1) * n + (j - 1)] = (i + j - 2) % n + 1;
    return L;
}

LatinSquare LatinSquare::diagonal_first(int n) {
    LatinSquare L{n, std::vector<int>(static_cast<size_t>(n) * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            L.cells[(i - 1) * n + (j - 1)] = ((j - i) % n + n) % n + 1;
    return L;
}

Decomposition permute_parts(const Decomposition& dec, const std::array<int, 3>& mapping) {
    std::array<bool, 3> seen{false, false, false};
    for (int m : mapping) {
        if (m < 0 || m > 2 || seen[m])
            throw Error("domain", "mapping must be a permutation of {0,1,2}");
        seen[m] = true;
    }
    // new_part[p] = position that old part p moves to
    std::array<Part, 3> new_part{};
    for (int i = 0; i < 3; ++i) new_part[mapping[i]] = static_cast<Part>(i);

    std::array<int, 3> old_sizes{dec.triplet.r, dec.triplet.s, dec.triplet.t};
    Triplet tr{old_sizes[mapping[0]], old_sizes[mapping[1]], old_sizes[mapping[2]]};
    std::vector<FiveCycle> cycles;
    cycles.reserve(dec.cycles.size());
    for (const FiveCycle& c : dec.cycles) {
        FiveCycle out = c;
        for (Vertex& v : out.v) v.part = new_part[static_cast<int>(v.part)];
        cycles.push_back(canonicalize(out));
    }
    return Decomposition(tr, std::move(cycles));
}

Vertex parse_vertex(const std::string& token) {
    if (token.size() < 2)
        throw Error("format", "bad vertex token '" + token + "'");
    Part p;
    switch (token[0]) {
        case 'R': p = Part::R; break;
        case 'S': p = Part::S; break;
        case 'T': p = Part::T; break;
        default: throw Error("format", "bad vertex token '" + token + "'");
    }
    for (size_t i = 1; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw Error("format", "bad vertex token '" + token + "'");
    int idx = 0;
    try {
        idx = std::stoi(token.substr(1));
    } catch (const std::exception&) {
        throw Error("format", "bad vertex token '" + token + "'");
    }
    if (idx < 1) throw Error("format", "bad vertex token '" + token + "'");
    return Vertex{p, idx};
}

}  // namespace penta
