#include "mudef/mu.hpp"

#include <map>

namespace mudef {

MuCheck is_minimally_unsatisfiable(const ClauseSet& f, const OracleLimits& limits) {
    MuCheck result;
    if (auto model = find_model(f, limits)) {
        result.model = std::move(model);
        return result;
    }
    result.is_unsat = true;
    for (auto& c : f) {
        if (!is_satisfiable(f.without(c), limits)) {
            result.removable = c;
            return result;
        }
    }
    result.is_mu = true;
    return result;
}

std::optional<std::int64_t> mu_level(const ClauseSet& f, const OracleLimits& limits) {
    if (!is_minimally_unsatisfiable(f, limits).is_mu) return std::nullopt;
    return deficiency(f);
}

VmuCheck is_vmu(const ClauseSet& f, const OracleLimits& limits) {
    VmuCheck result;
    if (auto model = find_model(f, limits)) {
        result.model = std::move(model);
        return result;
    }
    for (auto v : f.variables()) {
        std::vector<Clause> avoiding;
        for (auto& c : f)
            if (!c.contains_variable(v)) avoiding.push_back(c);
        ClauseSet rest(std::move(avoiding));
        if (!is_satisfiable(rest, limits)) {
            result.unsat_subset = std::move(rest);
            result.missing_variable = v;
            return result;
        }
    }
    result.is_vmu = true;
    return result;
}

bool has_unit_weight(const ClauseSet& f) {
    // count[l] clauses of length l contribute count[l] / 2^l; carry pairs upward.
    std::map<std::size_t, std::uint64_t> count;
    for (auto& c : f) ++count[c.size()];
    if (count.empty()) return false;
    std::uint64_t carry = 0;
    for (auto len = count.rbegin()->first; len > 0; --len) {
        auto it = count.find(len);
        auto total = carry + (it == count.end() ? 0 : it->second);
        if (total % 2 != 0) return false;
        carry = total / 2;
    }
    auto it = count.find(0);
    return carry + (it == count.end() ? 0 : it->second) == 1;
}

bool is_unsat_hitting(const ClauseSet& f) { return is_hitting(f) && has_unit_weight(f); }

ClassReport classify(const ClauseSet& f, const OracleLimits& limits) {
    ClassReport r;
    auto mu = is_minimally_unsatisfiable(f, limits);
    r.is_unsat = mu.is_unsat;
    r.is_mu = mu.is_mu;
    if (mu.is_mu) r.mu_level = deficiency(f);
    r.witness_assignment = mu.model;
    r.witness_clause = mu.removable;
    r.is_vmu = mu.is_mu ? true : is_vmu(f, limits).is_vmu;
    r.is_hitting = is_hitting(f);
    r.is_uhit = r.is_hitting && has_unit_weight(f);
    return r;
}

}  // namespace mudef
