#pragma once

#include <cstddef>
#include <optional>

#include "mudef/cnf.hpp"
#include "mudef/sat.hpp"

namespace mudef {

inline constexpr std::size_t kMaxIrreducibilityClauses = 16;

/// The clause C over var(F') with the same models as F', if one exists; the
/// empty clause when F' is unsatisfiable.
///
/// Any such C is contained in every clause of F' (each clause's falsifying
/// cube lies inside C's), which forces C to be the intersection I of all
/// clauses of F'. So F' ≡ C iff F' becomes unsatisfiable once I is falsified.
/// Throws InvalidInput for an empty F'.
std::optional<Clause> equivalent_clause(const ClauseSet& f, const OracleLimits& limits = {});

struct IrreducibilityCheck {
    bool irreducible = false;
    std::optional<ClauseSet> subset;  // F' ⊂ F with c(F') ≥ 2 ...
    std::optional<Clause> clause;     // ... equivalent to this clause
};

/// Searches proper subsets with at least two clauses, largest first and
/// lexicographically by clause index within a size. F must be unsatisfiable
/// (InvalidInput otherwise); c(F) is capped at kMaxIrreducibilityClauses.
IrreducibilityCheck is_clause_irreducible(const ClauseSet& f, const OracleLimits& limits = {});

}  // namespace mudef
