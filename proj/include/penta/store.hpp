#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "penta/composer.hpp"
#include "penta/core.hpp"
#include "penta/solver.hpp"

namespace penta::store {

// How an entry came to exist; round-trips through the file header.
struct Provenance {
    enum class Kind { solved, composed, imported } kind = Kind::imported;
    std::uint64_t seed = 0;  // solved
    long long nodes = 0;     // solved
    std::string rule;        // composed
    std::vector<Triplet> inputs;  // composed
    std::string source;      // imported

    std::string str() const;
    static Provenance parse_line(const std::string& text);

    static Provenance solved(std::uint64_t seed, long long nodes);
    static Provenance composed(std::string rule, std::vector<Triplet> inputs);
    static Provenance imported(std::string source);
};

struct StoreEntry {
    Decomposition dec;  // verified
    Provenance prov;
    std::uint64_t digest = 0;  // over "K r s t" + canonical cycle lines
};

std::uint64_t content_digest(const Decomposition& dec);

// Text serialization (UTF-8, LF):
//   K <r> <s> <t>
//   # digest: <16 hex>
//   # provenance: <...>
//   C R1 S1 T1 S2 T2      (canonical cycles, sorted)
std::string serialize(const Decomposition& dec, const Provenance& prov);

// Strict parse + verification; failures name the offending line. The
// decomposition is re-verified (entries are never trusted from disk).
StoreEntry parse_entry(const std::string& text, const std::string& source_name);

// One file per triplet under a root directory, K_<r>_<s>_<t>.5cd.
// Writes go through a temp file + rename; re-verify happens on every read.
class Store {
public:
    explicit Store(std::filesystem::path root = default_root());

    // PENTA_STORE env var, or ./penta-store.
    static std::filesystem::path default_root();
    const std::filesystem::path& root() const { return root_; }

    // Refuses unverified decompositions.
    void put(const Decomposition& dec, const Provenance& prov);

    // Exact positional triplet, or any stored permutation remapped (and
    // re-verified) to the requested order.
    std::optional<StoreEntry> get(const Triplet& tr) const;

    bool contains(const Triplet& tr) const;

    // All entries, sorted by triplet; max_part <= 0 means no filter.
    std::vector<StoreEntry> list(int max_part = 0) const;

    // Parse + verify + persist; returns the stored entry.
    StoreEntry import_file(const std::filesystem::path& path);

    // Serializes the (possibly permuted) entry for tr to path.
    void export_file(const Triplet& tr, const std::filesystem::path& path) const;

    std::filesystem::path path_for(const Triplet& tr) const;

private:
    std::filesystem::path root_;
};

// Store-first supplier; optionally solves missing bases with cfg and
// persists the result.
composer::Supplier make_supplier(Store& store, bool solve_missing = false,
                                 solver::SearchConfig cfg = {});

}  // namespace penta::store
