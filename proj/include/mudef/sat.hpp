#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mudef/cnf.hpp"

namespace mudef {

/// Size caps for the exhaustive procedures. Exceeding a cap raises CapExceeded.
struct OracleLimits {
    std::size_t max_decision_vars = 40;
    std::size_t max_enumeration_vars = 20;
};

bool is_satisfiable(const ClauseSet& f, const OracleLimits& limits = {});

/// A total model over var(F), or nullopt. Deterministic: variables left open by
/// the search are set to false.
std::optional<Assignment> find_model(const ClauseSet& f, const OracleLimits& limits = {});

/// All total assignments over `vars` satisfying F, ordered with the lowest
/// variable most significant and false before true. Requires var(F) ⊆ vars.
std::vector<Assignment> models_over(const ClauseSet& f, std::span<const Variable> vars,
                                    const OracleLimits& limits = {});

}  // namespace mudef
