#pragma once

// Minimal-image machinery on dense clauses whose variables are bits 0..n-1.
// Bit i is variable i+1; variable 1 is the most significant base-3 digit.

#include <cstdint>
#include <span>
#include <vector>

#include "dense.hpp"

namespace mudef::detail {

using ClauseKey = std::uint64_t;

inline constexpr int kMaxCanonVars = 20;

ClauseKey clause_key(const DenseClause& c, int n);
DenseClause key_to_clause(ClauseKey key, int n);

/// Ascending keys of the minimal image of `clauses` under all signed
/// permutations of the n variables.
std::vector<ClauseKey> min_image_keys(std::span<const DenseClause> clauses, int n);

/// True iff no signed permutation maps `clauses` to a strictly smaller image.
bool is_min_image(std::span<const DenseClause> clauses, int n);

}  // namespace mudef::detail
