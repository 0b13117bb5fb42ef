#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>

#include "mudef/cnf.hpp"

namespace mudef {

/// A variable bijection composed with per-variable sign flips.
struct SignedRenaming {
    std::map<Variable, Variable> mapping;
    std::set<Variable> flips;  // source variables whose sign is inverted

    Literal apply(Literal x) const;
    Clause apply(const Clause& c) const;
    ClauseSet apply(const ClauseSet& f) const;
    SignedRenaming inverse() const;

    friend bool operator==(const SignedRenaming&, const SignedRenaming&) = default;
};

inline constexpr std::size_t kMaxIsomorphismVars = 12;

/// A signed renaming carrying F exactly onto G, or nullopt. Backtracks over
/// variables of F in ascending order, trying only targets with a matching
/// (possibly flipped) degree pair, smallest target and unflipped first.
/// Throws CapExceeded beyond kMaxIsomorphismVars.
std::optional<SignedRenaming> are_isomorphic(const ClauseSet& f, const ClauseSet& g);

/// The minimal image of F over all signed renamings onto {1..n(F)}.
///
/// Clauses are keyed by (length, base-3 code), where variable 1 is the most
/// significant digit and a digit is 0 (absent), 1 (positive) or 2 (negative);
/// clause-sets compare by their ascending key sequences. Computed by
/// branch-and-bound over which source literal lands on each target position.
ClauseSet canonical_form(const ClauseSet& f);

/// Same as canonical_form(f) == f for a clause-set over variables {1..n}, with
/// `n` possibly larger than n(F) (unused variables take part in the renaming).
/// Stops at the first strictly smaller image.
bool is_minimal_image(const ClauseSet& f, std::size_t n);

}  // namespace mudef
