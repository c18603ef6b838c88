#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "penta/core.hpp"

namespace penta::composer {

// Resolves a verified decomposition for the exact positional triplet, or
// nullopt. Implementations typically consult the store (with permutation
// remapping) and may fall back to the solver under a caller-set budget.
using Supplier = std::function<std::optional<Decomposition>(const Triplet&)>;

// Wraps a supplier, recording every triplet it was asked for (the bases a
// construction actually consumed).
Supplier recording_supplier(const Supplier& inner, std::vector<Triplet>& consumed);

// Triangles (i, j, ((i+j-2) mod n)+1) for i,j in 1..n; covers each index
// pair in each of the three coordinate roles exactly once.
std::vector<std::array<int, 3>> triangle_decomposition(int n);

// K_{nr,ns,nt} from n^2 re-indexed copies of dec along the triangle
// decomposition. Requires dec verified; output is verified.
Decomposition scale(const Decomposition& dec, int n);

// Mixing: cell (i,j) of L supplies K_{r_i, s_j, t_{L(i,j)}}; the re-indexed
// union decomposes K_{sum r, sum s, sum t}. Concatenation is row-major by
// (i,j). Output is verified.
Decomposition mix(const std::vector<int>& blocks_r, const std::vector<int>& blocks_s,
                  const std::vector<int>& blocks_t, const LatinSquare& L,
                  const Supplier& supplier);

// K_{r+np, s+np, t+np} from dec (r <= s <= t) and bases K_{r,p,p},
// K_{s,p,p}, K_{t,p,p}, K_{p,p,p}: an (n+1)-block mixing instance with the
// t-symbol on the diagonal and p elsewhere. Requires 5 | p, p == r (mod 2)
// and t/2 <= p <= 3r; a violated hypothesis is refused by name.
Decomposition extend_p(const Decomposition& dec, int p, int n_steps,
                       const Supplier& supplier);

// K_{a+10k, 2b+5k, 2c+5k}: rows (c,c,5k), columns (b,b,5k), symbols
// (a,5k,5k), a-symbol on the diagonal.
Decomposition combine_10k(int a, int b, int c, int k, const Supplier& supplier);

// K_{a+10k, b+c+5k, 15k}: rows (a,5k,5k), columns (b,c,5k), all symbols 5k.
Decomposition combine_15k(int a, int b, int c, int k, const Supplier& supplier);

// Deterministic split of total into `parts` values from `allowed`
// (nondecreasing result, largest element minimized first); nullopt when
// impossible.
std::optional<std::vector<int>> sum_split(
    long long total, int parts,
    const std::vector<int>& allowed = {11, 13, 15, 17, 19, 25});

// The 15/25-block constructions: splits s,t into m blocks from {15,25} and
// r into m blocks from {11,13,15,17,19,25}, then mixes with an m x m Latin
// square. m odd is chosen smallest-first; requires all parts odd and the
// necessary conditions.
Decomposition build_459_4510(const Triplet& tr, const Supplier& supplier);

}  // namespace penta::composer
