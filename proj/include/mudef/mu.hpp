#pragma once

// Decision procedures for minimal unsatisfiability (MU), its deficiency
// levels, variable-minimal unsatisfiability (VMU) and unsatisfiable hitting
// clause-sets (UHit).

#include <cstdint>
#include <optional>

#include "mudef/cnf.hpp"
#include "mudef/sat.hpp"

namespace mudef {

struct MuCheck {
    bool is_mu = false;
    bool is_unsat = false;
    std::optional<Assignment> model;      // F satisfiable: a model of F
    std::optional<Clause> removable;      // F unsatisfiable but not MU: F \ {C} stays unsatisfiable
};

/// Brute force: one oracle call on F and one per clause.
MuCheck is_minimally_unsatisfiable(const ClauseSet& f, const OracleLimits& limits = {});

/// δ(F) when F is MU, nullopt otherwise.
std::optional<std::int64_t> mu_level(const ClauseSet& f, const OracleLimits& limits = {});

struct VmuCheck {
    bool is_vmu = false;
    std::optional<Assignment> model;          // F satisfiable
    std::optional<ClauseSet> unsat_subset;    // an unsatisfiable subset missing some variable
    std::optional<Variable> missing_variable;
};

/// Unsatisfiable, and every unsatisfiable subset uses all of var(F).
///
/// An unsatisfiable F' ⊆ F avoids v iff F' lies inside the clauses of F not
/// containing v, so it suffices to check each of those n sub-clause-sets for
/// satisfiability.
VmuCheck is_vmu(const ClauseSet& f, const OracleLimits& limits = {});

/// Σ 2^{-|C|} over F as an exact dyadic comparison against 1.
bool has_unit_weight(const ClauseSet& f);

/// Hitting and of total weight exactly 1; no oracle involved.
bool is_unsat_hitting(const ClauseSet& f);

struct ClassReport {
    bool is_unsat = false;
    bool is_mu = false;
    std::optional<std::int64_t> mu_level;
    bool is_vmu = false;
    bool is_hitting = false;
    bool is_uhit = false;
    std::optional<Assignment> witness_assignment;
    std::optional<Clause> witness_clause;
};

ClassReport classify(const ClauseSet& f, const OracleLimits& limits = {});

}  // namespace mudef
