#include "mudef/irreducibility.hpp"

#include <algorithm>
#include <bit>

#include "dense.hpp"
#include "mudef/errors.hpp"

namespace mudef {

namespace {

void check_decision_cap(std::size_t n, const OracleLimits& limits) {
    auto cap = std::min<std::size_t>(limits.max_decision_vars, 64);
    if (n > cap) throw CapExceeded("sat.max_variables", cap, n);
}

// F' given as a bitmask over the clauses of d; returns the common literals if
// F' is equivalent to them.
std::optional<detail::DenseClause> dense_equivalent(const detail::DenseCnf& d, std::uint32_t members,
                                                    std::vector<detail::DenseClause>& scratch) {
    detail::DenseClause common{~std::uint64_t{0}, ~std::uint64_t{0}};
    for (std::size_t j = 0; j < d.clauses.size(); ++j)
        if (members >> j & 1) {
            common.pos &= d.clauses[j].pos;
            common.neg &= d.clauses[j].neg;
        }
    auto fixed = common.vars();
    scratch.clear();
    for (std::size_t j = 0; j < d.clauses.size(); ++j)
        if (members >> j & 1) {
            auto& c = d.clauses[j];
            detail::DenseClause rest{c.pos & ~fixed, c.neg & ~fixed};
            if (rest.vars() == 0) return common;  // F' contains the common clause itself
            scratch.push_back(rest);
        }
    std::uint64_t model = 0;
    if (detail::dense_solve(scratch, model)) return std::nullopt;
    return common;
}

}  // namespace

std::optional<Clause> equivalent_clause(const ClauseSet& f, const OracleLimits& limits) {
    if (f.empty()) throw InvalidInput("equivalent_clause needs at least one clause");
    check_decision_cap(f.num_variables(), limits);
    if (f.size() > 32) throw CapExceeded("irreducibility.max_clauses", 32, f.size());
    auto d = detail::to_dense(f);
    std::vector<detail::DenseClause> scratch;
    auto all = f.size() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << f.size()) - 1;
    auto c = dense_equivalent(d, all, scratch);
    if (!c) return std::nullopt;
    return detail::from_dense(*c, d.vars);
}

IrreducibilityCheck is_clause_irreducible(const ClauseSet& f, const OracleLimits& limits) {
    if (f.size() > kMaxIrreducibilityClauses)
        throw CapExceeded("irreducibility.max_clauses", kMaxIrreducibilityClauses, f.size());
    if (is_satisfiable(f, limits)) throw InvalidInput("clause-irreducibility is defined for unsatisfiable input");
    auto d = detail::to_dense(f);
    auto c = static_cast<int>(f.size());
    std::vector<detail::DenseClause> scratch;

    IrreducibilityCheck result;
    for (int k = c - 1; k >= 2; --k) {
        // k-subsets of clause indices in lexicographic order
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::uint32_t members = 0;
            for (int i : idx) members |= std::uint32_t{1} << i;
            if (auto common = dense_equivalent(d, members, scratch)) {
                std::vector<std::size_t> picked(idx.begin(), idx.end());
                result.subset = f.subset(picked);
                result.clause = detail::from_dense(*common, d.vars);
                return result;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == c - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    result.irreducible = true;
    return result;
}

}  // namespace mudef
