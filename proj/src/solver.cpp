#include "penta/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "penta/verifier.hpp"

namespace penta::solver {

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::solved: return "solved";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::space_exhausted: return "exhausted";
        default: return "budget-exhausted";
    }
}

namespace {

using Clock = std::chrono::steady_clock;

// Search state over global vertex ids 0..N-1 (R block, then S, then T) and
// edge ids in lexicographic (u,v) order, which makes "smallest uncovered
// edge" fill the GAM matrix row by row.
struct Ctx {
    Triplet tr;
    int N = 0, M = 0;
    std::array<int, 3> off{};            // global start of each part
    std::vector<int> part_of;            // global -> 0,1,2
    std::vector<int> eid;                // N*N, -1 within a part
    std::vector<std::pair<int, int>> everts;  // eid -> (u,v), u < v

    std::vector<int> order;              // candidate scan order of global ids

    std::vector<std::uint64_t> cov;      // covered-edge bitset
    int covered_cnt = 0;
    std::vector<int> cdeg;               // covered-degree per global vertex
    std::array<long long, 4> resid{};    // residual count per type 1..3
    std::vector<std::array<int, 5>> placed;

    long long nodes = 0;
    long long node_budget = 0;
    Clock::time_point deadline;
    bool budget_hit = false;
    bool symmetry = true;
    std::atomic<bool>* stop = nullptr;

    int edge_id(int a, int b) const { return eid[a * N + b]; }
    bool covered(int e) const { return (cov[e >> 6] >> (e & 63)) & 1; }
    void cover(int e) { cov[e >> 6] |= 1ull << (e & 63); }
    void uncover(int e) { cov[e >> 6] &= ~(1ull << (e & 63)); }

    int first_uncovered() const {
        for (size_t w = 0; w < cov.size(); ++w) {
            std::uint64_t inv = ~cov[w];
            if (w + 1 == cov.size() && (M & 63)) inv &= (1ull << (M & 63)) - 1;
            if (inv) return static_cast<int>(w * 64) + std::countr_zero(inv);
        }
        return -1;
    }
};

Ctx make_ctx(const Triplet& tr, const SearchConfig& cfg) {
    Ctx c;
    c.tr = tr;
    c.N = tr.r + tr.s + tr.t;
    c.off = {0, tr.r, tr.r + tr.s};
    c.part_of.resize(c.N);
    for (int g = 0; g < c.N; ++g) c.part_of[g] = g < tr.r ? 0 : g < tr.r + tr.s ? 1 : 2;
    c.eid.assign(static_cast<size_t>(c.N) * c.N, -1);
    for (int u = 0; u < c.N; ++u)
        for (int v = u + 1; v < c.N; ++v) {
            if (c.part_of[u] == c.part_of[v]) continue;
            int e = c.M++;
            c.eid[u * c.N + v] = c.eid[v * c.N + u] = e;
            c.everts.emplace_back(u, v);
        }
    c.cov.assign((c.M + 63) / 64, 0);
    c.cdeg.assign(c.N, 0);
    CycleCounts cnt = feasibility::cycle_counts(tr);
    c.resid = {0, cnt.c1, cnt.c2, cnt.c3};

    c.order.resize(c.N);
    for (int g = 0; g < c.N; ++g) c.order[g] = g;
    if (cfg.seed != 0) {
        std::mt19937_64 rng(cfg.seed);
        for (int p = 0; p < 3; ++p) {
            int lo = c.off[p];
            int hi = p == 2 ? c.N : c.off[p + 1];
            std::shuffle(c.order.begin() + lo, c.order.begin() + hi, rng);
        }
    }

    c.node_budget = cfg.node_budget;
    c.symmetry = cfg.symmetry_breaking;
    return c;
}

int type_of(const Ctx& c, const std::array<int, 5>& cyc) {
    int cnt[3] = {0, 0, 0};
    for (int g : cyc) cnt[c.part_of[g]]++;
    if (cnt[0] == 1) return 1;
    if (cnt[1] == 1) return 2;
    return 3;
}

// Untouched vertices within a part are interchangeable: a candidate may
// introduce fresh vertices only as the lowest-indexed untouched ones of its
// part, in order of first occurrence along the cycle.
bool symmetry_ok(const Ctx& c, const std::array<int, 5>& cyc) {
    for (int p = 0; p < 3; ++p) {
        int fresh[3];
        int k = 0;
        for (int g : cyc)
            if (c.part_of[g] == p && c.cdeg[g] == 0) fresh[k++] = g;
        if (k == 0) continue;
        int lo = c.off[p];
        int hi = p == 2 ? c.N : c.off[p + 1];
        int expect = lo;
        for (int i = 0; i < k; ++i) {
            while (expect < hi && c.cdeg[expect] != 0) ++expect;
            if (expect >= hi || fresh[i] != expect) return false;
            ++expect;
        }
    }
    return true;
}

void place(Ctx& c, const std::array<int, 5>& cyc, int type) {
    for (int i = 0; i < 5; ++i) {
        int a = cyc[i], b = cyc[(i + 1) % 5];
        c.cover(c.edge_id(a, b));
        c.cdeg[a]++;
        c.cdeg[b]++;
    }
    c.covered_cnt += 5;
    c.resid[type]--;
    c.placed.push_back(cyc);
}

void unplace(Ctx& c, const std::array<int, 5>& cyc, int type) {
    for (int i = 0; i < 5; ++i) {
        int a = cyc[i], b = cyc[(i + 1) % 5];
        c.uncover(c.edge_id(a, b));
        c.cdeg[a]--;
        c.cdeg[b]--;
    }
    c.covered_cnt -= 5;
    c.resid[type]++;
    c.placed.pop_back();
}

// Enumerates 5-cycles (u,v,a,b,w) through the given edge whose five edges
// are all uncovered, respecting residual type counts and symmetry breaking.
// Each undirected cycle through (u,v) appears exactly once. f returns true
// to stop early.
template <class F>
bool for_each_candidate(Ctx& c, int e, F&& f) {
    auto [u, v] = c.everts[e];
    int pu = c.part_of[u], pv = c.part_of[v];
    for (int a : c.order) {
        if (c.part_of[a] == pv || a == u) continue;
        int e1 = c.edge_id(v, a);
        if (c.covered(e1)) continue;
        int pa = c.part_of[a];
        for (int b : c.order) {
            if (c.part_of[b] == pa || b == u || b == v) continue;
            int e2 = c.edge_id(a, b);
            if (c.covered(e2)) continue;
            int pb = c.part_of[b];
            for (int w : c.order) {
                if (c.part_of[w] == pb || c.part_of[w] == pu) continue;
                if (w == u || w == v || w == a || w == b) continue;
                if (c.covered(c.edge_id(b, w)) || c.covered(c.edge_id(w, u))) continue;
                std::array<int, 5> cyc{u, v, a, b, w};
                int type = type_of(c, cyc);
                if (c.resid[type] <= 0) continue;
                if (c.symmetry && !symmetry_ok(c, cyc)) continue;
                if (f(cyc, type)) return true;
            }
        }
    }
    return false;
}

bool out_of_budget(Ctx& c) {
    if (c.budget_hit) return true;
    if (c.nodes >= c.node_budget) {
        c.budget_hit = true;
        return true;
    }
    if ((c.nodes & 0xFFF) == 0) {
        if (Clock::now() >= c.deadline) {
            c.budget_hit = true;
            return true;
        }
        if (c.stop && c.stop->load(std::memory_order_relaxed)) {
            c.budget_hit = true;  // treated as an external cutoff
            return true;
        }
    }
    return false;
}

bool dfs(Ctx& c) {
    if (c.covered_cnt == c.M) return true;
    int e = c.first_uncovered();
    return for_each_candidate(c, e, [&](const std::array<int, 5>& cyc, int type) {
        c.nodes++;
        if (out_of_budget(c)) return true;  // unwind; budget_hit set
        place(c, cyc, type);
        if (dfs(c)) return true;
        unplace(c, cyc, type);
        return c.budget_hit;
    }) && !c.budget_hit;
}

FiveCycle to_cycle(const Ctx& c, const std::array<int, 5>& cyc) {
    FiveCycle out;
    for (int i = 0; i < 5; ++i) {
        int g = cyc[i];
        int p = c.part_of[g];
        out.v[i] = Vertex{static_cast<Part>(p), g - c.off[p] + 1};
    }
    return out;
}

std::array<int, 5> from_cycle(const Ctx& c, const FiveCycle& cy) {
    std::array<int, 5> out{};
    for (int i = 0; i < 5; ++i)
        out[i] = c.off[static_cast<int>(cy.v[i].part)] + cy.v[i].index - 1;
    return out;
}

// Applies an edge-disjoint partial; throws Error("validation") on overlap
// or out-of-range vertices.
void apply_partial(Ctx& c, const std::vector<FiveCycle>& partial) {
    for (const FiveCycle& cy : partial) {
        cy.validate();
        for (const Vertex& v : cy.v)
            if (v.index > c.tr.size(v.part))
                throw Error("validation",
                            "partial vertex " + v.str() + " exceeds part size");
        std::array<int, 5> g = from_cycle(c, cy);
        for (int i = 0; i < 5; ++i)
            if (c.covered(c.edge_id(g[i], g[(i + 1) % 5])))
                throw Error("validation", "partial assignment repeats edge in " + cy.str());
        place(c, g, type_of(c, g));
    }
}

SolveResult run_search(const Triplet& tr, const std::vector<FiveCycle>& partial,
                       const SearchConfig& cfg) {
    auto t0 = Clock::now();
    SolveResult res;
    res.conditions = feasibility::check_conditions(tr);
    if (!res.conditions.satisfied()) {
        res.status = SolveStatus::infeasible;
        return res;
    }

    Ctx base = make_ctx(tr, cfg);
    base.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(cfg.time_budget));
    apply_partial(base, partial);
    if (base.resid[1] < 0 || base.resid[2] < 0 || base.resid[3] < 0) {
        // The partial overuses some cycle type; no exact completion exists.
        res.status = SolveStatus::space_exhausted;
        res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return res;
    }

    auto finish = [&](Ctx& c, bool found) {
        res.nodes += c.nodes;
        if (found) {
            std::vector<FiveCycle> cycles;
            cycles.reserve(c.placed.size());
            for (const auto& g : c.placed) cycles.push_back(canonicalize(to_cycle(c, g)));
            std::sort(cycles.begin(), cycles.end());
            Decomposition dec(tr, std::move(cycles));
            auto rep = verifier::verify(dec);
            if (!rep.valid)
                throw Error("paper-deviation",
                            "search produced an unverifiable decomposition: " + rep.str());
            res.dec = std::move(dec);
            res.status = SolveStatus::solved;
        }
    };

    int workers = std::max(1, cfg.workers);
    if (base.covered_cnt == base.M) {
        finish(base, true);
    } else if (workers == 1) {
        bool found = dfs(base);
        finish(base, found);
        if (!found)
            res.status = base.budget_hit ? SolveStatus::budget_exhausted
                                         : SolveStatus::space_exhausted;
    } else {
        // Split the top-level candidate list round-robin across workers.
        // Correct but not deterministic in which solution wins.
        std::vector<std::pair<std::array<int, 5>, int>> roots;
        for_each_candidate(base, base.first_uncovered(),
                           [&](const std::array<int, 5>& cyc, int type) {
                               roots.emplace_back(cyc, type);
                               return false;
                           });
        std::atomic<bool> found{false};
        std::atomic<bool> any_budget_hit{false};
        std::atomic<long long> total_nodes{0};
        std::mutex result_mu;
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w]() {
                Ctx local = base;
                local.stop = &found;
                local.node_budget = cfg.node_budget / workers;
                for (size_t i = w; i < roots.size() && !found.load(); i += workers) {
                    local.nodes++;
                    if (out_of_budget(local)) break;
                    place(local, roots[i].first, roots[i].second);
                    if (dfs(local)) {
                        if (!found.exchange(true)) {
                            std::lock_guard<std::mutex> lk(result_mu);
                            finish(local, true);
                        }
                        break;
                    }
                    unplace(local, roots[i].first, roots[i].second);
                    if (local.budget_hit) break;
                }
                if (local.budget_hit && !found.load()) any_budget_hit = true;
                total_nodes += local.nodes;
            });
        }
        for (auto& th : threads) th.join();
        res.nodes = total_nodes.load();
        if (!found.load())
            res.status = any_budget_hit ? SolveStatus::budget_exhausted
                                        : SolveStatus::space_exhausted;
    }

    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

}  // namespace

namespace {

// Secondary pass in the style of Strategy step 3: type-2 cycles
// (S_j, R_a, T_{2j}, R_b, T_{2j+1}) over successive unused R pairs, one
// diagonal sweep per pair. Greedy: cycles that would overlap are skipped,
// so the result is always edge-disjoint. At least 4 R columns stay free.
void diagonal_seed(const Triplet& tr, std::vector<FiveCycle>& seed, long long c2_left) {
    std::set<Edge> used;
    int max_r_used = 0;
    for (const FiveCycle& cy : seed) {
        for (const Edge& e : cy.edges()) used.insert(e);
        for (const Vertex& v : cy.v)
            if (v.part == Part::R) max_r_used = std::max(max_r_used, v.index);
    }
    auto tmod = [&](long long x) { return static_cast<int>((x - 1) % tr.t + 1); };
    for (int a = max_r_used + 1; a + 1 <= tr.r - 4 && c2_left > 0; a += 2) {
        int b = a + 1;
        for (int j = 1; j <= tr.s && c2_left > 0; ++j) {
            FiveCycle cy{{Vertex{Part::S, j}, Vertex{Part::R, a},
                          Vertex{Part::T, tmod(2 * j)}, Vertex{Part::R, b},
                          Vertex{Part::T, tmod(2 * j + 1)}}};
            if (!cy.is_valid()) continue;
            auto es = cy.edges();
            bool clash = false;
            for (const Edge& e : es)
                if (used.count(e)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            for (const Edge& e : es) used.insert(e);
            seed.push_back(canonicalize(cy));
            --c2_left;
        }
    }
}

}  // namespace

std::optional<std::vector<FiveCycle>> strategy_seed(const Triplet& tr, int shift) {
    Triplet so = tr.sorted();
    if (tr != so) throw Error("domain", "strategy seeding requires r <= s <= t");
    if (shift < 0 || shift > 2) throw Error("domain", "shift must be 0..2");
    CycleCounts cnt = feasibility::cycle_counts(tr);

    long long imax = std::min<long long>(tr.r - 4, cnt.c1 / tr.s);
    std::vector<FiveCycle> cycles;
    if (imax < 1) return cycles;

    auto smod = [&](long long x) { return static_cast<int>((x - 1) % tr.s + 1); };
    std::set<Edge> used;
    for (long long i = 1; i <= imax; ++i) {
        // Index wraparound can make a column collide with earlier ones. A
        // column's t-vertices may be shifted by a small constant; when no
        // offset fits, the whole column is left empty (columns are filled
        // entirely or not at all, which keeps c1' == c1 (mod s)).
        bool placed = false;
        for (int extra = 0; extra <= 2 && !placed; ++extra) {
            auto tmod = [&](long long x) {
                return static_cast<int>((x - 1 + shift + extra) % tr.t + 1);
            };
            std::vector<FiveCycle> column;
            std::set<Edge> column_used;
            bool ok = true;
            for (long long j = 1; j <= tr.s && ok; ++j) {
                FiveCycle cy{{Vertex{Part::R, static_cast<int>(i)},
                              Vertex{Part::S, smod(j)},
                              Vertex{Part::T, tmod(j + 3 * (i - 1))},
                              Vertex{Part::S, smod(j + 2)},
                              Vertex{Part::T, tmod(j + 3 * (i - 1) + 1)}}};
                if (!cy.is_valid()) {
                    ok = false;
                    break;
                }
                for (const Edge& e : cy.edges())
                    if (used.count(e) || !column_used.insert(e).second) {
                        ok = false;
                        break;
                    }
                if (ok) column.push_back(canonicalize(cy));
            }
            if (!ok) continue;
            used.insert(column_used.begin(), column_used.end());
            for (FiveCycle& cy : column) cycles.push_back(std::move(cy));
            placed = true;
        }
    }
    if (cycles.empty() && imax >= 1) return std::nullopt;  // seed rejected outright
    return cycles;
}

ResidualTargets residual_targets(const Triplet& tr, const std::vector<FiveCycle>& partial) {
    ResidualTargets out;
    CycleCounts total = feasibility::cycle_counts(tr);
    CycleCounts used;
    long long block_used[3] = {0, 0, 0};  // RS, RT, ST edges covered
    for (const FiveCycle& cy : partial) {
        switch (cycle_type(cy)) {
            case 1: used.c1++; break;
            case 2: used.c2++; break;
            default: used.c3++; break;
        }
        for (const Edge& e : cy.edges()) {
            if (e.a.part == Part::R)
                block_used[e.b.part == Part::S ? 0 : 1]++;
            else
                block_used[2]++;
        }
    }
    out.remaining = {total.c1 - used.c1, total.c2 - used.c2, total.c3 - used.c3};
    const auto& c = out.remaining;
    long long rs = static_cast<long long>(tr.r) * tr.s - block_used[0];
    long long rt = static_cast<long long>(tr.r) * tr.t - block_used[1];
    long long st = static_cast<long long>(tr.s) * tr.t - block_used[2];
    out.feasible = c.c1 >= 0 && c.c2 >= 0 && c.c3 >= 0 &&
                   3 * c.c1 + c.c2 + c.c3 == st && c.c1 + 3 * c.c2 + c.c3 == rt &&
                   c.c1 + c.c2 + 3 * c.c3 == rs;
    out.lemma_applicable = (tr.r & 1) && (tr.t & 1);
    if (out.lemma_applicable)
        out.lemma_ok = ((c.c1 - c.c3) % tr.s + tr.s) % tr.s == 0;
    return out;
}

SolveResult exact_search(const Triplet& tr, const std::vector<FiveCycle>& partial,
                         const SearchConfig& cfg) {
    return run_search(tr, partial, cfg);
}

SolveResult solve(const Triplet& tr, const SearchConfig& cfg) {
    if (!tr.positive()) throw Error("domain", "part sizes must be positive");
    if (cfg.time_budget <= 0 || cfg.node_budget <= 0)
        throw Error("domain", "budgets must be positive");

    SolveResult res;
    res.conditions = feasibility::check_conditions(tr);
    if (!res.conditions.satisfied()) {
        res.status = SolveStatus::infeasible;
        return res;
    }

    // Search the sorted triple; map the solution back to the input order.
    Triplet so = tr.sorted();
    std::array<int, 3> sizes{tr.r, tr.s, tr.t};
    std::array<int, 3> sorted_from{-1, -1, -1};  // sorted position -> input part
    std::array<int, 3> ss{so.r, so.s, so.t};
    std::array<bool, 3> taken{false, false, false};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!taken[j] && sizes[j] == ss[i]) {
                sorted_from[i] = j;
                taken[j] = true;
                break;
            }

    auto t0 = Clock::now();
    std::vector<FiveCycle> seed;
    if (cfg.mode == SearchConfig::Mode::strategy_first) {
        if (auto s = strategy_seed(so, cfg.shift)) {
            ResidualTargets rt = residual_targets(so, *s);
            if (rt.feasible && (!rt.lemma_applicable || rt.lemma_ok))
                seed = std::move(*s);
        }
        // overlap or inconsistency: fall back to exact mode from empty
        if (cfg.diagonal_pass) {
            diagonal_seed(so, seed, residual_targets(so, seed).remaining.c2);
            if (!residual_targets(so, seed).feasible) seed.clear();
        }
    }

    SolveResult inner = run_search(so, seed, cfg);
    if (!seed.empty() && inner.status == SolveStatus::space_exhausted) {
        // Seeded subtree exhausted; only the unseeded search can prove
        // nonexistence. Retry with the remaining time budget.
        SearchConfig rest = cfg;
        rest.time_budget =
            cfg.time_budget - std::chrono::duration<double>(Clock::now() - t0).count();
        if (rest.time_budget <= 0) {
            inner.status = SolveStatus::budget_exhausted;
        } else {
            long long used = inner.nodes;
            rest.node_budget = std::max<long long>(1, cfg.node_budget - used);
            SolveResult retry = run_search(so, {}, rest);
            retry.nodes += used;
            inner = std::move(retry);
        }
        seed.clear();
    }
    inner.seeded_cycles = static_cast<long long>(seed.size());

    if (inner.status == SolveStatus::solved && tr != so) {
        // sorted position i holds input part sorted_from[i]; invert to get,
        // per input position, which sorted part to take.
        std::array<int, 3> mapping{};
        for (int i = 0; i < 3; ++i) mapping[sorted_from[i]] = i;
        Decomposition mapped = permute_parts(*inner.dec, mapping);
        auto rep = verifier::verify(mapped);
        if (!rep.valid)
            throw Error("paper-deviation", "part remap broke verification: " + rep.str());
        inner.dec = std::move(mapped);
    }
    inner.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return inner;
}

}  // namespace penta::solver
