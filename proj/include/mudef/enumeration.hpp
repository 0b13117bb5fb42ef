#pragma once

// Exhaustive generation of MU clause-sets up to isomorphism, and the extremal
// statistics computed over the resulting catalogs.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mudef/cnf.hpp"

namespace mudef {

inline constexpr std::size_t kMaxEnumVars = 4;
inline constexpr std::size_t kMaxEnumVarsHitting = 5;
inline constexpr std::int64_t kMaxEnumDeficiency = 3;

struct EnumSpec {
    std::size_t n_max = 1;
    std::int64_t deficiency = 1;
    bool require_hitting = false;
    bool require_nonsingular = false;
    /// Search-node budget per run; 0 means unlimited. Hitting it clears the
    /// catalog's exhaustive flag.
    std::uint64_t node_limit = 0;

    friend bool operator==(const EnumSpec&, const EnumSpec&) = default;
};

struct CatalogEntry {
    ClauseSet clauses;  // canonical form over variables 1..n
    Metrics metrics;
    bool hitting = false;
    bool nonsingular = false;
};

struct Catalog {
    EnumSpec spec;
    std::vector<CatalogEntry> entries;  // ordered by n, then clause-set order
    std::map<std::size_t, std::size_t> counts_per_n;
    bool exhaustive = true;
    std::uint64_t nodes = 0;
};

/// Throws InvalidInput for deficiency < 1 and CapExceeded beyond the size bounds.
void validate(const EnumSpec& spec);

/// Searches every cell n = 1..n_max with c = n + deficiency clauses.
/// `workers` = 0 picks the hardware concurrency.
Catalog enumerate(const EnumSpec& spec, unsigned workers = 1);

CatalogEntry make_entry(const ClauseSet& f);

/// Re-checks every entry with the MU oracle, the EnumSpec predicates, pairwise
/// non-isomorphism and stored statistics; returns one message per problem.
std::vector<std::string> verify_catalog(const Catalog& catalog);

struct Extremum {
    std::size_t value = 0;
    ClauseSet witness;
};

/// Throws InvalidInput on an empty catalog.
Extremum max_min_var_degree(const Catalog& catalog);
Extremum max_full_clauses(const Catalog& catalog);

struct UhitMaximum {
    std::optional<std::size_t> value;  // largest n with a nonsingular UHit entry
    std::optional<ClauseSet> witness;
    bool exhaustive = true;
    std::map<std::size_t, std::size_t> counts_per_n;
};

/// Enumerates hitting + nonsingular MU of deficiency k up to n_max.
UhitMaximum max_nonsingular_uhit_vars(std::int64_t k, std::size_t n_max, unsigned workers = 1);

}  // namespace mudef
