#pragma once

// Autarkies: partial assignments satisfying every clause they touch.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mudef/cnf.hpp"

namespace mudef {

inline constexpr std::size_t kMaxAutarkyVars = 20;

struct AutarkyResult {
    Assignment autarky;  // non-empty
    ClauseSet touched;   // all satisfied by the autarky
};

struct SurplusReport {
    std::int64_t surplus = 0;
    std::vector<Variable> witness_vars;  // ascending, non-empty
};

/// Ordering of var(F) used to enumerate candidate variable sets.
using VariableOrder = std::function<std::vector<Variable>(const ClauseSet&)>;

bool is_autarky(const Assignment& phi, const ClauseSet& f);

/// Tries variable sets V by ascending size, lexicographically over `order`
/// (ascending ids by default), and returns the first total assignment on V
/// that satisfies every clause of F meeting V. Exponential; capped at
/// kMaxAutarkyVars variables.
std::optional<AutarkyResult> find_nontrivial_autarky(const ClauseSet& f, const VariableOrder& order = {});

/// Removes autarky-satisfied clauses until no non-trivial autarky remains.
ClauseSet lean_kernel(const ClauseSet& f, const VariableOrder& order = {});

bool is_lean(const ClauseSet& f);

/// min over non-empty V ⊆ var(F) of |F_V| - |V|, F_V the clauses meeting V.
/// Ties: smallest |V|, then lexicographically least V. Throws InvalidInput on
/// an empty variable set.
SurplusReport surplus(const ClauseSet& f);

}  // namespace mudef
