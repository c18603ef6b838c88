#include "penta/composer.hpp"

#include <algorithm>
#include <numeric>

#include "penta/feasibility.hpp"
#include "penta/verifier.hpp"

namespace penta::composer {

namespace {

Decomposition verified_or_throw(Decomposition dec, const std::string& what) {
    auto rep = verifier::verify(dec);
    if (!rep.valid)
        throw Error("paper-deviation", what + " failed verification: " + rep.str());
    return dec;
}

Decomposition fetch(const Supplier& supplier, const Triplet& cell) {
    auto dec = supplier(cell);
    if (!dec)
        throw Error("missing-base", "no verified decomposition of " + cell.str());
    if (!dec->verified() || dec->triplet != cell)
        throw Error("missing-base",
                    "supplier returned a wrong or unverified decomposition for " + cell.str());
    return *std::move(dec);
}

std::vector<int> prefix_offsets(const std::vector<int>& blocks) {
    std::vector<int> off(blocks.size() + 1, 0);
    for (size_t i = 0; i < blocks.size(); ++i) off[i + 1] = off[i] + blocks[i];
    return off;
}

}  // namespace

Supplier recording_supplier(const Supplier& inner, std::vector<Triplet>& consumed) {
    return [inner, &consumed](const Triplet& tr) {
        auto dec = inner(tr);
        if (dec && std::find(consumed.begin(), consumed.end(), tr) == consumed.end())
            consumed.push_back(tr);
        return dec;
    };
}

std::vector<std::array<int, 3>> triangle_decomposition(int n) {
    if (n < 1) throw Error("domain", "n must be >= 1");
    std::vector<std::array<int, 3>> out;
    out.reserve(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.push_back({i, j, (i + j - 2) % n + 1});
    return out;
}

Decomposition scale(const Decomposition& dec, int n) {
    if (!dec.verified())
        throw Error("validation", "scale requires a verified decomposition");
    if (n < 1) throw Error("domain", "scale factor must be >= 1");
    const Triplet& tr = dec.triplet;
    Decomposition out(Triplet{n * tr.r, n * tr.s, n * tr.t}, {});
    out.cycles.reserve(static_cast<size_t>(n) * n * dec.cycles.size());
    for (const auto& [i, j, k] : triangle_decomposition(n)) {
        int off[3] = {(i - 1) * tr.r, (j - 1) * tr.s, (k - 1) * tr.t};
        for (const FiveCycle& cy : dec.cycles) {
            FiveCycle moved = cy;
            for (Vertex& v : moved.v) v.index += off[static_cast<int>(v.part)];
            out.cycles.push_back(canonicalize(moved));
        }
    }
    return verified_or_throw(std::move(out), "scale of " + tr.str());
}

Decomposition mix(const std::vector<int>& blocks_r, const std::vector<int>& blocks_s,
                  const std::vector<int>& blocks_t, const LatinSquare& L,
                  const Supplier& supplier) {
    size_t n = static_cast<size_t>(L.n);
    if (n < 1) throw Error("domain", "mix needs at least one block");
    if (!L.is_latin()) throw Error("validation", "mix label square is not Latin");
    if (blocks_r.size() != n || blocks_s.size() != n || blocks_t.size() != n)
        throw Error("domain", "block size vectors must match the Latin square order");
    for (const auto* blocks : {&blocks_r, &blocks_s, &blocks_t})
        for (int b : *blocks)
            if (b < 1) throw Error("domain", "block sizes must be positive");

    auto Roff = prefix_offsets(blocks_r);
    auto Soff = prefix_offsets(blocks_s);
    auto Toff = prefix_offsets(blocks_t);
    Decomposition out(Triplet{Roff.back(), Soff.back(), Toff.back()}, {});
    for (int i = 1; i <= L.n; ++i)
        for (int j = 1; j <= L.n; ++j) {
            int k = L.at(i, j);
            Triplet cell{blocks_r[i - 1], blocks_s[j - 1], blocks_t[k - 1]};
            Decomposition part = fetch(supplier, cell);
            int off[3] = {Roff[i - 1], Soff[j - 1], Toff[k - 1]};
            for (const FiveCycle& cy : part.cycles) {
                FiveCycle moved = cy;
                for (Vertex& v : moved.v) v.index += off[static_cast<int>(v.part)];
                out.cycles.push_back(canonicalize(moved));
            }
        }
    return verified_or_throw(std::move(out), "mix");
}

Decomposition extend_p(const Decomposition& dec, int p, int n_steps,
                       const Supplier& supplier) {
    if (!dec.verified())
        throw Error("validation", "extend requires a verified decomposition");
    const Triplet& tr = dec.triplet;
    if (tr != tr.sorted())
        throw Error("hypothesis", "extend requires r <= s <= t, got " + tr.str());
    if (n_steps < 1) throw Error("domain", "steps must be >= 1");
    if (p < 1 || p % 5 != 0)
        throw Error("hypothesis", "p=" + std::to_string(p) + " is not a positive multiple of 5");
    if ((p - tr.r) % 2 != 0)
        throw Error("hypothesis", "p=" + std::to_string(p) + " has parity different from r=" +
                                      std::to_string(tr.r));
    if (tr.t > 2 * p)
        throw Error("hypothesis", "t/2 <= p fails: t=" + std::to_string(tr.t) + ", p=" +
                                      std::to_string(p));
    if (p > 3 * tr.r)
        throw Error("hypothesis",
                    "p <= 3r fails: p=" + std::to_string(p) + ", r=" + std::to_string(tr.r));

    int n = n_steps + 1;
    std::vector<int> br(n, p), bs(n, p), bt(n, p);
    br[0] = tr.r;
    bs[0] = tr.s;
    bt[0] = tr.t;
    // Symbol 1 (the t-block) on the diagonal, p elsewhere.
    LatinSquare L = LatinSquare::diagonal_first(n);
    Supplier with_base = [&](const Triplet& cell) -> std::optional<Decomposition> {
        if (cell == tr) return dec;
        return supplier(cell);
    };
    return mix(br, bs, bt, L, with_base);
}

Decomposition combine_10k(int a, int b, int c, int k, const Supplier& supplier) {
    if (a < 1 || b < 1 || c < 1 || k < 1)
        throw Error("domain", "a, b, c, k must be positive");
    std::vector<int> rows{c, c, 5 * k};
    std::vector<int> cols{b, b, 5 * k};
    std::vector<int> syms{a, 5 * k, 5 * k};
    Decomposition raw = mix(rows, cols, syms, LatinSquare::diagonal_first(3), supplier);
    // The block table is transposed relative to the stated result order.
    Decomposition out = permute_parts(raw, {2, 1, 0});
    return verified_or_throw(std::move(out), "combine_10k");
}

Decomposition combine_15k(int a, int b, int c, int k, const Supplier& supplier) {
    if (a < 1 || b < 1 || c < 1 || k < 1)
        throw Error("domain", "a, b, c, k must be positive");
    std::vector<int> rows{a, 5 * k, 5 * k};
    std::vector<int> cols{b, c, 5 * k};
    std::vector<int> syms{5 * k, 5 * k, 5 * k};
    return mix(rows, cols, syms, LatinSquare::cyclic(3), supplier);
}

std::optional<std::vector<int>> sum_split(long long total, int parts,
                                          const std::vector<int>& allowed) {
    if (parts < 1) throw Error("domain", "parts must be >= 1");
    std::vector<int> vals = allowed;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.empty() || vals.front() < 1) throw Error("domain", "allowed values must be positive");

    // Nonincreasing choice order, smallest candidates first: the first
    // complete tuple minimizes the largest element, then the next, etc.
    std::vector<int> acc;
    auto go = [&](auto&& self, long long rem, int left, int cap) -> bool {
        if (left == 0) return rem == 0;
        for (int v : vals) {
            if (v > cap) break;
            long long rest = rem - v;
            if (rest < static_cast<long long>(left - 1) * vals.front()) continue;
            if (rest > static_cast<long long>(left - 1) * v) continue;
            acc.push_back(v);
            if (self(self, rest, left - 1, v)) return true;
            acc.pop_back();
        }
        return false;
    };
    if (!go(go, total, parts, vals.back())) return std::nullopt;
    std::reverse(acc.begin(), acc.end());
    return acc;
}

Decomposition build_459_4510(const Triplet& tr, const Supplier& supplier) {
    if (!(tr.r & 1) || !(tr.s & 1) || !(tr.t & 1))
        throw Error("hypothesis", tr.str() + " is not all-odd");
    if (!feasibility::check_conditions(tr).satisfied())
        throw Error("feasibility", tr.str() + " fails the necessary conditions");

    const std::vector<int> r_allowed{11, 13, 15, 17, 19, 25};
    const std::vector<int> st_allowed{15, 25};
    int parts[3] = {tr.r, tr.s, tr.t};
    for (int x = 0; x < 3; ++x) {
        std::array<int, 3> perm{x, -1, -1};
        int idx = 1;
        for (int i = 0; i < 3; ++i)
            if (i != x) perm[idx++] = i;
        long long rr = parts[perm[0]], ss = parts[perm[1]], tt = parts[perm[2]];
        for (int m = 1; 11LL * m <= rr; m += 2) {
            if (rr > 25LL * m) continue;
            if (ss < 15LL * m || ss > 25LL * m || tt < 15LL * m || tt > 25LL * m) continue;
            auto rsplit = sum_split(rr, m, r_allowed);
            auto ssplit = sum_split(ss, m, st_allowed);
            auto tsplit = sum_split(tt, m, st_allowed);
            if (!rsplit || !ssplit || !tsplit) continue;
            Decomposition mixed =
                mix(*rsplit, *ssplit, *tsplit, LatinSquare::cyclic(m), supplier);
            std::array<int, 3> mapping{};
            for (int i = 0; i < 3; ++i) mapping[perm[i]] = i;
            Decomposition out = permute_parts(mixed, mapping);
            return verified_or_throw(std::move(out), "block construction for " + tr.str());
        }
    }
    throw Error("hypothesis", tr.str() + " does not match the 15/25-block constructions");
}

}  // namespace penta::composer
