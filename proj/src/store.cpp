#include "penta/store.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "penta/verifier.hpp"

namespace penta::store {

namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex16(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

std::string cycle_line(const FiveCycle& c) {
    std::string out = "C";
    for (const Vertex& v : c.v) out += " " + v.str();
    return out;
}

std::string triplet_token(const Triplet& tr) {
    return "K_" + std::to_string(tr.r) + "_" + std::to_string(tr.s) + "_" +
           std::to_string(tr.t);
}

Triplet parse_triplet_token(const std::string& tok) {
    if (tok.size() < 2 || tok[0] != 'K' || tok[1] != '_')
        throw Error("format", "bad triplet token '" + tok + "'");
    int vals[3];
    size_t pos = 2;
    for (int i = 0; i < 3; ++i) {
        size_t next = tok.find('_', pos);
        std::string num = i < 2 ? tok.substr(pos, next - pos) : tok.substr(pos);
        if (i < 2 && next == std::string::npos)
            throw Error("format", "bad triplet token '" + tok + "'");
        try {
            vals[i] = std::stoi(num);
        } catch (const std::exception&) {
            throw Error("format", "bad triplet token '" + tok + "'");
        }
        pos = next + 1;
    }
    return Triplet{vals[0], vals[1], vals[2]};
}

std::string digest_text(const Decomposition& dec) {
    std::string body = "K " + std::to_string(dec.triplet.r) + " " +
                       std::to_string(dec.triplet.s) + " " + std::to_string(dec.triplet.t) +
                       "\n";
    for (const FiveCycle& c : dec.canonical_cycles()) body += cycle_line(c) + "\n";
    return body;
}

}  // namespace

Provenance Provenance::solved(std::uint64_t seed, long long nodes) {
    Provenance p;
    p.kind = Kind::solved;
    p.seed = seed;
    p.nodes = nodes;
    return p;
}

Provenance Provenance::composed(std::string rule, std::vector<Triplet> inputs) {
    Provenance p;
    p.kind = Kind::composed;
    p.rule = std::move(rule);
    p.inputs = std::move(inputs);
    return p;
}

Provenance Provenance::imported(std::string source) {
    Provenance p;
    p.kind = Kind::imported;
    p.source = std::move(source);
    return p;
}

std::string Provenance::str() const {
    switch (kind) {
        case Kind::solved:
            return "solved seed=" + std::to_string(seed) + " nodes=" + std::to_string(nodes);
        case Kind::composed: {
            std::string out = "composed rule=" + rule + " inputs=";
            for (size_t i = 0; i < inputs.size(); ++i) {
                if (i) out += "+";
                out += triplet_token(inputs[i]);
            }
            return out;
        }
        default:
            return "imported source=" + source;
    }
}

Provenance Provenance::parse_line(const std::string& text) {
    std::istringstream in(text);
    std::string kind;
    in >> kind;
    if (kind == "solved") {
        Provenance p;
        p.kind = Kind::solved;
        std::string field;
        while (in >> field) {
            if (field.rfind("seed=", 0) == 0)
                p.seed = std::stoull(field.substr(5));
            else if (field.rfind("nodes=", 0) == 0)
                p.nodes = std::stoll(field.substr(6));
        }
        return p;
    }
    if (kind == "composed") {
        Provenance p;
        p.kind = Kind::composed;
        std::string field;
        while (in >> field) {
            if (field.rfind("rule=", 0) == 0) p.rule = field.substr(5);
            else if (field.rfind("inputs=", 0) == 0) {
                std::string rest = field.substr(7);
                size_t pos = 0;
                while (pos < rest.size()) {
                    size_t next = rest.find('+', pos);
                    std::string tok = rest.substr(pos, next == std::string::npos
                                                           ? std::string::npos
                                                           : next - pos);
                    p.inputs.push_back(parse_triplet_token(tok));
                    if (next == std::string::npos) break;
                    pos = next + 1;
                }
            }
        }
        return p;
    }
    if (kind == "imported") {
        Provenance p;
        p.kind = Kind::imported;
        std::string rest;
        std::getline(in, rest);
        size_t at = rest.find("source=");
        p.source = at == std::string::npos ? "" : rest.substr(at + 7);
        return p;
    }
    // Unknown provenance text is preserved as an import note.
    return imported(text);
}

std::uint64_t content_digest(const Decomposition& dec) { return fnv1a64(digest_text(dec)); }

std::string serialize(const Decomposition& dec, const Provenance& prov) {
    std::string out = "K " + std::to_string(dec.triplet.r) + " " +
                      std::to_string(dec.triplet.s) + " " + std::to_string(dec.triplet.t) +
                      "\n";
    out += "# digest: " + hex16(content_digest(dec)) + "\n";
    out += "# provenance: " + prov.str() + "\n";
    for (const FiveCycle& c : dec.canonical_cycles()) out += cycle_line(c) + "\n";
    return out;
}

StoreEntry parse_entry(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto fail = [&](const std::string& msg) -> void {
        throw Error("format",
                    source_name + ":" + std::to_string(lineno) + ": " + msg);
    };

    if (!std::getline(in, line)) {
        lineno = 1;
        fail("empty file");
    }
    lineno = 1;
    std::istringstream head(line);
    std::string tag;
    int r = 0, s = 0, t = 0;
    head >> tag >> r >> s >> t;
    if (tag != "K" || head.fail() || r < 1 || s < 1 || t < 1)
        fail("expected 'K <r> <s> <t>' on line 1");
    {
        std::string extra;
        if (head >> extra) fail("trailing content after 'K <r> <s> <t>'");
    }
    Triplet tr{r, s, t};

    Decomposition dec(tr, {});
    std::optional<std::string> declared_digest;
    std::optional<Provenance> prov;
    std::set<Edge> seen_edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            size_t start = body.find_first_not_of(' ');
            if (start == std::string::npos) continue;
            body = body.substr(start);
            if (body.rfind("digest:", 0) == 0) {
                std::string v = body.substr(7);
                size_t vs = v.find_first_not_of(' ');
                declared_digest = vs == std::string::npos ? "" : v.substr(vs);
            } else if (body.rfind("provenance:", 0) == 0) {
                std::string v = body.substr(11);
                size_t vs = v.find_first_not_of(' ');
                prov = Provenance::parse_line(vs == std::string::npos ? "" : v.substr(vs));
            }
            continue;
        }
        std::istringstream ls(line);
        std::string c;
        ls >> c;
        if (c != "C") fail("expected a 'C' cycle line, got '" + line + "'");
        FiveCycle cy;
        for (int i = 0; i < 5; ++i) {
            std::string tok;
            if (!(ls >> tok)) fail("cycle line needs 5 vertices");
            try {
                cy.v[i] = parse_vertex(tok);
            } catch (const Error& e) {
                fail(e.what());
            }
        }
        {
            std::string extra;
            if (ls >> extra) fail("trailing content after 5 vertices");
        }
        try {
            cy.validate();
        } catch (const Error& e) {
            fail(e.what());
        }
        for (const Vertex& v : cy.v)
            if (v.index > tr.size(v.part))
                fail("vertex " + v.str() + " exceeds part size " +
                     std::to_string(tr.size(v.part)));
        if (canonicalize(cy) != cy) fail("cycle is not in canonical form: " + cy.str());
        for (const Edge& e : cy.edges())
            if (!seen_edges.insert(e).second) fail("duplicated edge " + e.str());
        dec.cycles.push_back(cy);
    }

    auto rep = verifier::verify(dec);
    if (!rep.valid)
        throw Error("store", source_name + ": rejected, " +
                                 (rep.failures.empty() ? "invalid" : rep.failures.front()));

    StoreEntry entry;
    entry.digest = content_digest(dec);
    if (declared_digest && *declared_digest != hex16(entry.digest))
        throw Error("store", source_name + ": digest mismatch (file says " + *declared_digest +
                                 ", content is " + hex16(entry.digest) + ")");
    entry.dec = std::move(dec);
    entry.prov = prov ? *prov : Provenance::imported(source_name);
    return entry;
}

Store::Store(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path Store::default_root() {
    if (const char* env = std::getenv("PENTA_STORE"); env && *env) return env;
    return "penta-store";
}

std::filesystem::path Store::path_for(const Triplet& tr) const {
    return root_ / (triplet_token(tr) + ".5cd");
}

void Store::put(const Decomposition& dec, const Provenance& prov) {
    if (!dec.verified())
        throw Error("store", "refusing to persist an unverified decomposition of " +
                                 dec.triplet.str());
    std::filesystem::create_directories(root_);
    std::filesystem::path final_path = path_for(dec.triplet);
    std::filesystem::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("io", "cannot write " + tmp.string());
        out << serialize(dec, prov);
        if (!out) throw Error("io", "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, final_path);
}

namespace {

std::vector<Triplet> permutations_of(const Triplet& tr) {
    int v[3] = {tr.r, tr.s, tr.t};
    int idx[3] = {0, 1, 2};
    std::sort(idx, idx + 3);
    std::vector<Triplet> out;
    do {
        Triplet p{v[idx[0]], v[idx[1]], v[idx[2]]};
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    } while (std::next_permutation(idx, idx + 3));
    return out;
}

}  // namespace

std::optional<StoreEntry> Store::get(const Triplet& tr) const {
    std::vector<Triplet> candidates{tr};
    for (const Triplet& p : permutations_of(tr))
        if (p != tr) candidates.push_back(p);

    for (const Triplet& stored : candidates) {
        std::filesystem::path p = path_for(stored);
        std::error_code ec;
        if (!std::filesystem::exists(p, ec)) continue;
        std::ifstream in(p, std::ios::binary);
        if (!in) throw Error("io", "cannot read " + p.string());
        std::stringstream buf;
        buf << in.rdbuf();
        StoreEntry entry = parse_entry(buf.str(), p.string());
        if (stored == tr) return entry;

        // Remap the stored permutation onto the requested positional order.
        std::array<int, 3> from{entry.dec.triplet.r, entry.dec.triplet.s,
                                entry.dec.triplet.t};
        std::array<int, 3> want{tr.r, tr.s, tr.t};
        std::array<int, 3> mapping{};
        std::array<bool, 3> used{false, false, false};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (!used[j] && from[j] == want[i]) {
                    mapping[i] = j;
                    used[j] = true;
                    break;
                }
        Decomposition remapped = permute_parts(entry.dec, mapping);
        auto rep = verifier::verify(remapped);
        if (!rep.valid)
            throw Error("store", "permuted entry for " + tr.str() +
                                     " failed re-verification: " + rep.str());
        StoreEntry out;
        out.dec = std::move(remapped);
        out.prov = entry.prov;
        out.digest = content_digest(out.dec);
        return out;
    }
    return std::nullopt;
}

bool Store::contains(const Triplet& tr) const {
    for (const Triplet& p : permutations_of(tr)) {
        std::error_code ec;
        if (std::filesystem::exists(path_for(p), ec)) return true;
    }
    return false;
}

std::vector<StoreEntry> Store::list(int max_part) const {
    std::vector<StoreEntry> out;
    std::error_code ec;
    if (!std::filesystem::is_directory(root_, ec)) return out;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(root_)) {
        if (!e.is_regular_file()) continue;
        if (e.path().extension() != ".5cd") continue;
        files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        std::ifstream in(p, std::ios::binary);
        if (!in) continue;
        std::stringstream buf;
        buf << in.rdbuf();
        StoreEntry entry = parse_entry(buf.str(), p.string());
        if (max_part > 0 && entry.dec.triplet.max_part() > max_part) continue;
        out.push_back(std::move(entry));
    }
    std::sort(out.begin(), out.end(), [](const StoreEntry& a, const StoreEntry& b) {
        return a.dec.triplet < b.dec.triplet;
    });
    return out;
}

StoreEntry Store::import_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    StoreEntry entry = parse_entry(buf.str(), path.string());
    put(entry.dec, entry.prov);
    return entry;
}

void Store::export_file(const Triplet& tr, const std::filesystem::path& path) const {
    auto entry = get(tr);
    if (!entry) throw Error("store", "no stored decomposition of " + tr.str());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io", "cannot write " + path.string());
    out << serialize(entry->dec, entry->prov);
    if (!out) throw Error("io", "write failed for " + path.string());
}

composer::Supplier make_supplier(Store& store, bool solve_missing, solver::SearchConfig cfg) {
    return [&store, solve_missing, cfg](const Triplet& tr) -> std::optional<Decomposition> {
        if (auto entry = store.get(tr)) return entry->dec;
        if (!solve_missing) return std::nullopt;
        auto res = solver::solve(tr, cfg);
        if (res.status != solver::SolveStatus::solved) return std::nullopt;
        store.put(*res.dec, Provenance::solved(cfg.seed, res.nodes));
        return res.dec;
    };
}

}  // namespace penta::store
