// Command-line surface for the 5-cycle decomposition toolkit. Every
// subcommand is a thin adapter over the library; no combinatorial logic
// lives here.
//
// Exit codes: 0 success/valid, 1 negative result, 2 usage error,
// 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "penta/composer.hpp"
#include "penta/core.hpp"
#include "penta/feasibility.hpp"
#include "penta/render.hpp"
#include "penta/solver.hpp"
#include "penta/store.hpp"
#include "penta/verifier.hpp"

using namespace penta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int g_exit = kExitOk;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Decomposition load_decomposition(const std::string& path) {
    store::StoreEntry entry = store::parse_entry(read_file(path), path);
    return entry.dec;
}

void emit(const Decomposition& dec, const store::Provenance& prov,
          const std::string& out_path, bool to_store) {
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("io", "cannot write " + out_path);
        out << store::serialize(dec, prov);
    }
    if (to_store) {
        store::Store st;
        st.put(dec, prov);
    }
}

// Latin square + block sizes file:
//   n, then n rows of n symbols, then lines "R r1..rn", "S ...", "T ...".
struct MixSpec {
    LatinSquare L;
    std::vector<int> br, bs, bt;
};

MixSpec parse_mix_spec(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw Error("format", path + ": empty Latin square file");
    MixSpec spec;
    size_t at = 0;
    std::istringstream first(lines[at++]);
    if (!(first >> spec.L.n) || spec.L.n < 1)
        throw Error("format", path + ": expected the order n on the first line");
    int n = spec.L.n;
    if (lines.size() != static_cast<size_t>(n) + 4)
        throw Error("format", path + ": expected n rows plus R/S/T block size lines");
    for (int i = 0; i < n; ++i) {
        std::istringstream row(lines[at++]);
        for (int j = 0; j < n; ++j) {
            int v;
            if (!(row >> v)) throw Error("format", path + ": short Latin square row");
            spec.L.cells.push_back(v);
        }
    }
    if (!spec.L.is_latin()) throw Error("validation", path + ": square is not Latin");
    for (auto [tag, vec] : std::initializer_list<std::pair<const char*, std::vector<int>*>>{
             {"R", &spec.br}, {"S", &spec.bs}, {"T", &spec.bt}}) {
        std::istringstream row(lines[at++]);
        std::string head;
        row >> head;
        if (head != tag)
            throw Error("format", path + ": expected '" + std::string(tag) + "' block line");
        for (int j = 0; j < n; ++j) {
            int v;
            if (!(row >> v) || v < 1)
                throw Error("format", path + ": bad block size in " + std::string(tag) + " line");
            vec->push_back(v);
        }
    }
    return spec;
}

composer::Supplier pool_supplier(std::vector<Decomposition> pool, composer::Supplier fallback) {
    auto shared = std::make_shared<std::vector<Decomposition>>(std::move(pool));
    return [shared, fallback](const Triplet& tr) -> std::optional<Decomposition> {
        for (const Decomposition& d : *shared)
            if (d.triplet == tr) return d;
        // permuted pool entries serve too, like the store's lookup
        for (const Decomposition& d : *shared) {
            std::array<int, 3> from{d.triplet.r, d.triplet.s, d.triplet.t};
            std::array<int, 3> want{tr.r, tr.s, tr.t};
            std::array<int, 3> mapping{};
            std::array<bool, 3> used{false, false, false};
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                ok = false;
                for (int j = 0; j < 3; ++j)
                    if (!used[j] && from[j] == want[i]) {
                        mapping[i] = j;
                        used[j] = true;
                        ok = true;
                        break;
                    }
            }
            if (!ok) continue;
            Decomposition remapped = permute_parts(d, mapping);
            if (verifier::verify(remapped).valid) return remapped;
        }
        return fallback ? fallback(tr) : std::nullopt;
    };
}

std::string counts_str(const CycleCounts& c) {
    return std::to_string(c.c1) + " " + std::to_string(c.c2) + " " + std::to_string(c.c3);
}

void print_solve_result(const Triplet& tr, const solver::SolveResult& res) {
    switch (res.status) {
        case solver::SolveStatus::solved:
            std::cout << "solved " << tr.str() << " cycles=" << res.dec->cycles.size()
                      << " seeded=" << res.seeded_cycles << " nodes=" << res.nodes
                      << " seconds=" << res.seconds << "\n";
            break;
        case solver::SolveStatus::infeasible:
            std::cout << "infeasible " << tr.str() << ": " << res.conditions.str() << "\n";
            g_exit = kExitNegative;
            break;
        case solver::SolveStatus::space_exhausted:
            std::cout << "exhausted " << tr.str()
                      << ": search space fully explored, no decomposition (nodes=" << res.nodes
                      << ")\n";
            g_exit = kExitNegative;
            break;
        case solver::SolveStatus::budget_exhausted:
            std::cout << "budget-exhausted " << tr.str() << " nodes=" << res.nodes
                      << " seconds=" << res.seconds << "\n";
            g_exit = kExitBudget;
            break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"5-cycle decompositions of complete tripartite graphs K_{r,s,t}"};
    app.require_subcommand(1);

    // ---- check ----
    int cr = 0, cs = 0, ct = 0;
    auto* cmd_check = app.add_subcommand("check", "evaluate the necessary conditions");
    cmd_check->add_option("r", cr)->required();
    cmd_check->add_option("s", cs)->required();
    cmd_check->add_option("t", ct)->required();
    cmd_check->callback([&]() {
        auto rep = feasibility::check_conditions(Triplet{cr, cs, ct});
        std::cout << (rep.satisfied() ? "satisfied" : "not satisfied") << ": " << rep.str()
                  << "\n";
        if (!rep.satisfied()) g_exit = kExitNegative;
    });

    // ---- counts ----
    auto* cmd_counts = app.add_subcommand("counts", "cycle-type counts c1 c2 c3");
    cmd_counts->add_option("r", cr)->required();
    cmd_counts->add_option("s", cs)->required();
    cmd_counts->add_option("t", ct)->required();
    cmd_counts->callback([&]() {
        std::cout << counts_str(feasibility::cycle_counts(Triplet{cr, cs, ct})) << "\n";
    });

    // ---- enumerate ----
    int max_part = 0;
    bool primitive = false, strict_primitive = false, with_status = false;
    auto* cmd_enum = app.add_subcommand("enumerate", "condition-satisfying triples");
    cmd_enum->add_option("--max-part", max_part, "largest part size")->required();
    cmd_enum->add_flag("--primitive", primitive, "only primitive triples (gcd rule)");
    cmd_enum->add_flag("--strict-primitive", strict_primitive,
                       "use the strict non-multiple rule instead");
    cmd_enum->add_flag("--status", with_status, "join the store for a status column");
    cmd_enum->callback([&]() {
        auto entries = feasibility::enumerate_triples(max_part, primitive || strict_primitive);
        store::Store st;
        for (const auto& e : entries) {
            if (strict_primitive && !feasibility::is_primitive(e.tr, true)) continue;
            std::cout << e.tr.r << " " << e.tr.s << " " << e.tr.t << "  " << counts_str(e.counts);
            if (with_status)
                std::cout << "  " << (st.contains(e.tr) ? "decomposed" : "open");
            std::cout << "\n";
        }
    });

    // ---- solve ----
    double time_budget = 120.0;
    long long node_budget = 4'000'000'000LL;
    std::uint64_t seed = 0;
    std::string mode = "strategy";
    int shift = 0, workers = 1;
    bool diagonal = false, no_symmetry = false, to_store = false;
    std::string out_path;
    auto* cmd_solve = app.add_subcommand("solve", "search for a decomposition");
    cmd_solve->add_option("r", cr)->required();
    cmd_solve->add_option("s", cs)->required();
    cmd_solve->add_option("t", ct)->required();
    cmd_solve->add_option("--time", time_budget, "time budget, seconds");
    cmd_solve->add_option("--nodes", node_budget, "node budget");
    cmd_solve->add_option("--seed", seed, "search order seed (0 = natural order)");
    cmd_solve->add_option("--mode", mode)->check(CLI::IsMember({"exact", "strategy"}));
    cmd_solve->add_option("--shift", shift, "strategy t-index shift")->check(CLI::Range(0, 2));
    cmd_solve->add_flag("--diagonal", diagonal, "secondary type-2 seeding pass");
    cmd_solve->add_flag("--no-symmetry", no_symmetry, "disable symmetry breaking");
    cmd_solve->add_option("--workers", workers,
                          "parallel top-level branches (>1 is nondeterministic)");
    cmd_solve->add_option("-o,--out", out_path, "write the decomposition file here");
    cmd_solve->add_flag("--store", to_store, "persist into the store");
    cmd_solve->callback([&]() {
        solver::SearchConfig cfg;
        cfg.time_budget = time_budget;
        cfg.node_budget = node_budget;
        cfg.seed = seed;
        cfg.mode = mode == "exact" ? solver::SearchConfig::Mode::exact
                                   : solver::SearchConfig::Mode::strategy_first;
        cfg.shift = shift;
        cfg.diagonal_pass = diagonal;
        cfg.symmetry_breaking = !no_symmetry;
        cfg.workers = workers;
        auto res = solver::solve(Triplet{cr, cs, ct}, cfg);
        print_solve_result(Triplet{cr, cs, ct}, res);
        if (res.status == solver::SolveStatus::solved)
            emit(*res.dec, store::Provenance::solved(seed, res.nodes), out_path, to_store);
    });

    // ---- verify ----
    std::string in_path;
    auto* cmd_verify = app.add_subcommand("verify", "verify a decomposition file");
    cmd_verify->add_option("file", in_path)->required();
    cmd_verify->callback([&]() {
        // parse leniently: report verification failures, not just format ones
        Decomposition dec = load_decomposition(in_path);
        auto rep = verifier::check(dec);
        std::cout << rep.str() << "\n";
        if (!rep.valid) g_exit = kExitNegative;
    });

    // ---- compose ----
    auto* cmd_compose = app.add_subcommand("compose", "build decompositions from stored ones");
    cmd_compose->require_subcommand(1);
    double solve_missing = 0.0;
    std::string cfile;
    bool cstore = false;
    std::string cout_path;

    auto add_common = [&](CLI::App* c) {
        c->add_option("-o,--out", cout_path, "write the result here");
        c->add_flag("--store", cstore, "persist into the store");
        c->add_option("--solve-missing", solve_missing,
                      "solve missing bases with this time budget (seconds)");
    };
    auto supplier = [&]() {
        static store::Store st;
        solver::SearchConfig cfg;
        cfg.time_budget = solve_missing;
        return store::make_supplier(st, solve_missing > 0, cfg);
    };

    int factor = 1;
    auto* cmd_scale = cmd_compose->add_subcommand("scale", "K_{nr,ns,nt} from K_{r,s,t}");
    cmd_scale->add_option("file", cfile)->required();
    cmd_scale->add_option("--factor", factor)->required()->check(CLI::PositiveNumber);
    add_common(cmd_scale);
    cmd_scale->callback([&]() {
        Decomposition base = load_decomposition(cfile);
        Decomposition out = composer::scale(base, factor);
        std::cout << "composed " << out.triplet.str() << " cycles=" << out.cycles.size() << "\n";
        emit(out, store::Provenance::composed("scale", {base.triplet}), cout_path, cstore);
    });

    std::string latin_path;
    std::vector<std::string> cell_files;
    auto* cmd_mix = cmd_compose->add_subcommand("mix", "Latin-square mixing");
    cmd_mix->add_option("--latin", latin_path, "Latin square + block sizes file")->required();
    cmd_mix->add_option("--cells", cell_files, "decomposition files usable as cells");
    add_common(cmd_mix);
    cmd_mix->callback([&]() {
        MixSpec spec = parse_mix_spec(latin_path);
        std::vector<Decomposition> pool;
        for (const auto& f : cell_files) pool.push_back(load_decomposition(f));
        std::vector<Triplet> consumed;
        auto sup = composer::recording_supplier(pool_supplier(std::move(pool), supplier()),
                                                consumed);
        Decomposition out = composer::mix(spec.br, spec.bs, spec.bt, spec.L, sup);
        std::cout << "composed " << out.triplet.str() << " cycles=" << out.cycles.size() << "\n";
        emit(out, store::Provenance::composed("mix", consumed), cout_path, cstore);
    });

    int pval = 0, steps = 2;
    auto* cmd_extend = cmd_compose->add_subcommand("extend", "K_{r+np,s+np,t+np}");
    cmd_extend->add_option("file", cfile)->required();
    cmd_extend->add_option("--p", pval)->required();
    cmd_extend->add_option("--steps", steps)->check(CLI::PositiveNumber);
    add_common(cmd_extend);
    cmd_extend->callback([&]() {
        Decomposition base = load_decomposition(cfile);
        std::vector<Triplet> consumed;
        auto sup = composer::recording_supplier(supplier(), consumed);
        Decomposition out = composer::extend_p(base, pval, steps, sup);
        std::cout << "composed " << out.triplet.str() << " cycles=" << out.cycles.size()
                  << " bases:";
        for (const auto& b : consumed) std::cout << " " << b.str();
        std::cout << "\n";
        consumed.insert(consumed.begin(), base.triplet);
        emit(out, store::Provenance::composed("extend", consumed), cout_path, cstore);
    });

    int ka = 0, kb = 0, kc = 0, kk = 0;
    for (auto [name, desc, fn] :
         {std::tuple<const char*, const char*, int>{"c10k", "K_{a+10k,2b+5k,2c+5k}", 0},
          std::tuple<const char*, const char*, int>{"c15k", "K_{a+10k,b+c+5k,15k}", 1}}) {
        auto* c = cmd_compose->add_subcommand(name, desc);
        c->add_option("--a", ka)->required();
        c->add_option("--b", kb)->required();
        c->add_option("--c", kc)->required();
        c->add_option("--k", kk)->required();
        add_common(c);
        bool is15 = fn == 1;
        c->callback([&, is15]() {
            std::vector<Triplet> consumed;
            auto sup = composer::recording_supplier(supplier(), consumed);
            Decomposition out = is15 ? composer::combine_15k(ka, kb, kc, kk, sup)
                                     : composer::combine_10k(ka, kb, kc, kk, sup);
            std::cout << "composed " << out.triplet.str() << " cycles=" << out.cycles.size()
                      << " bases:";
            for (const auto& b : consumed) std::cout << " " << b.str();
            std::cout << "\n";
            emit(out, store::Provenance::composed(is15 ? "c15k" : "c10k", consumed), cout_path,
                 cstore);
        });
    }

    long long split_total = 0;
    int split_parts = 0;
    std::vector<int> split_allowed{11, 13, 15, 17, 19, 25};
    auto* cmd_split = cmd_compose->add_subcommand("split", "sum split into block sizes");
    cmd_split->add_option("total", split_total)->required();
    cmd_split->add_option("--parts", split_parts)->required()->check(CLI::PositiveNumber);
    cmd_split->add_option("--allowed", split_allowed, "allowed block sizes");
    cmd_split->callback([&]() {
        auto res = composer::sum_split(split_total, split_parts, split_allowed);
        if (!res) {
            std::cout << "none\n";
            g_exit = kExitNegative;
            return;
        }
        for (size_t i = 0; i < res->size(); ++i) std::cout << (i ? " " : "") << (*res)[i];
        std::cout << "\n";
    });

    // ---- render ----
    std::string format = "text";
    auto* cmd_render = app.add_subcommand("render", "GAM view of a decomposition");
    cmd_render->add_option("file", in_path)->required();
    cmd_render->add_option("--format", format)->check(CLI::IsMember({"text", "svg"}));
    cmd_render->add_option("-o,--out", out_path, "output path (required for svg)");
    cmd_render->callback([&]() {
        Decomposition dec = load_decomposition(in_path);
        auto rep = verifier::verify(dec);
        if (!rep.valid) throw Error("validation", "refusing to render: " + rep.str());
        if (format == "text") {
            std::string text = render::render_text(dec);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
                if (!out) throw Error("io", "cannot write " + out_path);
                out << text;
            }
        } else {
            if (out_path.empty()) throw Error("domain", "svg output needs -o PATH");
            render::render_svg(dec, out_path);
            std::cout << "wrote " << out_path << "\n";
        }
    });

    // ---- store ----
    auto* cmd_store = app.add_subcommand("store", "persistent decomposition library");
    cmd_store->require_subcommand(1);

    std::vector<std::string> import_files;
    auto* cmd_import = cmd_store->add_subcommand("import", "verify and add files");
    cmd_import->add_option("files", import_files)->required();
    cmd_import->callback([&]() {
        store::Store st;
        for (const auto& f : import_files) {
            auto entry = st.import_file(f);
            std::cout << "imported " << entry.dec.triplet.str() << " cycles="
                      << entry.dec.cycles.size() << "\n";
        }
    });

    auto* cmd_export = cmd_store->add_subcommand("export", "write a stored entry to a file");
    cmd_export->add_option("r", cr)->required();
    cmd_export->add_option("s", cs)->required();
    cmd_export->add_option("t", ct)->required();
    cmd_export->add_option("-o,--out", out_path)->required();
    cmd_export->callback([&]() {
        store::Store st;
        st.export_file(Triplet{cr, cs, ct}, out_path);
        std::cout << "wrote " << out_path << "\n";
    });

    int list_max = 0;
    auto* cmd_list = cmd_store->add_subcommand("list", "list stored entries");
    cmd_list->add_option("--max-part", list_max);
    cmd_list->callback([&]() {
        store::Store st;
        for (const auto& e : st.list(list_max)) {
            std::cout << e.dec.triplet.r << " " << e.dec.triplet.s << " " << e.dec.triplet.t
                      << "  cycles=" << e.dec.cycles.size() << "  " << e.prov.str() << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.code << ": " << e.what() << "\n";
        return e.code == "domain" ? kExitUsage : kExitNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return kExitNegative;
    }
    return g_exit;
}
