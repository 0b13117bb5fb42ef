#pragma once

// DP-reduction (variable elimination), singular DP-reduction to nonsingular
// normal forms, and exhaustive exploration of all normal forms.

#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"
#include "mudef/cnf.hpp"

namespace mudef {

/// Variables occurring in some sign exactly once. A variable with degrees
/// (1, 0) counts as singular; eliminating it just drops its clause.
std::vector<Variable> singular_variables(const ClauseSet& f);

/// Replaces all clauses containing v by their non-tautological resolvents on v.
/// Throws InvalidInput if v does not occur in F.
ClauseSet dp_reduce(const ClauseSet& f, Variable v);

enum class SdpStrategy { first_id, last_id, given_order };

struct ReductionStep {
    Variable eliminated;
    ClauseSet after;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

struct SdpResult {
    ClauseSet normal_form;
    ReductionTrace trace;
};

/// Eliminates singular variables until none remain. For given_order, the first
/// currently singular variable of `order` is chosen; singular variables not
/// listed come after, lowest id first.
SdpResult sdp_normal_form(const ClauseSet& f, SdpStrategy strategy = SdpStrategy::first_id,
                          std::span<const Variable> order = {});

inline constexpr std::size_t kMaxExploreVars = 12;

struct NormalFormClass {
    ClauseSet representative;  // least member in ClauseSet order
    std::size_t members = 0;   // distinct (labelled) normal forms in the class
};

/// Every normal form reachable by some choice sequence, grouped by isomorphism.
/// Classes are ordered by their representatives.
std::vector<NormalFormClass> all_sdp_normal_forms(const ClauseSet& f);

nlohmann::json to_json(const ReductionTrace& trace);

}  // namespace mudef
