#pragma once

// Bitmask view of a clause-set over at most 64 variables, indexed by position
// in an ascending variable list.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "mudef/cnf.hpp"

namespace mudef::detail {

struct DenseClause {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;

    std::uint64_t vars() const noexcept { return pos | neg; }
    int size() const noexcept { return std::popcount(pos | neg); }
    bool satisfied_by(std::uint64_t true_mask, std::uint64_t false_mask) const noexcept {
        return (pos & true_mask) || (neg & false_mask);
    }
    friend bool operator==(const DenseClause&, const DenseClause&) = default;
};

struct DenseCnf {
    std::vector<Variable> vars;  // ascending; bit i stands for vars[i]
    std::vector<DenseClause> clauses;
};

/// `universe` must be ascending, contain var(f), and have at most 64 entries.
DenseCnf to_dense(const ClauseSet& f, std::span<const Variable> universe);
inline DenseCnf to_dense(const ClauseSet& f) { return to_dense(f, f.variables()); }

Clause from_dense(const DenseClause& c, std::span<const Variable> vars);

/// Complete DPLL over the masks: unit propagation, pure literals, lowest index
/// first, false branch first. On success writes the true-set of the model.
bool dense_solve(std::span<const DenseClause> clauses, std::uint64_t& model_true);

}  // namespace mudef::detail
