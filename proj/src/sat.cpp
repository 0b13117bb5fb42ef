#include "mudef/sat.hpp"

#include <algorithm>

#include "dense.hpp"
#include "mudef/errors.hpp"

namespace mudef {

namespace detail {

DenseCnf to_dense(const ClauseSet& f, std::span<const Variable> universe) {
    if (universe.size() > 64) throw CapExceeded("dense.max_variables", 64, universe.size());
    DenseCnf d;
    d.vars.assign(universe.begin(), universe.end());
    d.clauses.reserve(f.size());
    for (auto& c : f) {
        DenseClause dc;
        for (auto x : c) {
            auto it = std::lower_bound(d.vars.begin(), d.vars.end(), x.variable());
            if (it == d.vars.end() || *it != x.variable())
                throw InvalidInput("variable " + std::to_string(x.variable().id()) + " outside the universe");
            auto bit = std::uint64_t{1} << (it - d.vars.begin());
            (x.is_positive() ? dc.pos : dc.neg) |= bit;
        }
        d.clauses.push_back(dc);
    }
    return d;
}

Clause from_dense(const DenseClause& c, std::span<const Variable> vars) {
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto bit = std::uint64_t{1} << i;
        if (c.pos & bit) lits.emplace_back(vars[i], true);
        if (c.neg & bit) lits.emplace_back(vars[i], false);
    }
    return Clause(std::move(lits));
}

namespace {

bool search(std::span<const DenseClause> clauses, std::uint64_t t, std::uint64_t f, std::uint64_t& model) {
    for (;;) {
        bool changed = false;
        bool all_satisfied = true;
        std::uint64_t free_pos_union = 0;
        std::uint64_t free_neg_union = 0;
        for (auto& c : clauses) {
            if (c.satisfied_by(t, f)) continue;
            all_satisfied = false;
            auto assigned = t | f;
            auto fp = c.pos & ~assigned;
            auto fn = c.neg & ~assigned;
            auto open = std::popcount(fp | fn);
            if (open == 0) return false;
            if (open == 1) {
                t |= fp;
                f |= fn;
                changed = true;
                continue;
            }
            free_pos_union |= fp;
            free_neg_union |= fn;
        }
        if (all_satisfied) {
            model = t;
            return true;
        }
        if (changed) continue;
        auto pure_pos = free_pos_union & ~free_neg_union;
        auto pure_neg = free_neg_union & ~free_pos_union;
        if (pure_pos | pure_neg) {
            t |= pure_pos;
            f |= pure_neg;
            continue;
        }
        auto candidates = (free_pos_union | free_neg_union) & ~(t | f);
        auto bit = candidates & (~candidates + 1);
        return search(clauses, t, f | bit, model) || search(clauses, t | bit, f, model);
    }
}

}  // namespace

bool dense_solve(std::span<const DenseClause> clauses, std::uint64_t& model_true) {
    model_true = 0;
    return search(clauses, 0, 0, model_true);
}

}  // namespace detail

namespace {

void check_decision_cap(const ClauseSet& f, const OracleLimits& limits) {
    auto cap = std::min<std::size_t>(limits.max_decision_vars, 64);
    if (f.num_variables() > cap) throw CapExceeded("sat.max_variables", cap, f.num_variables());
}

}  // namespace

bool is_satisfiable(const ClauseSet& f, const OracleLimits& limits) { return find_model(f, limits).has_value(); }

std::optional<Assignment> find_model(const ClauseSet& f, const OracleLimits& limits) {
    check_decision_cap(f, limits);
    auto d = detail::to_dense(f);
    std::uint64_t model = 0;
    if (!detail::dense_solve(d.clauses, model)) return std::nullopt;
    Assignment phi;
    for (std::size_t i = 0; i < d.vars.size(); ++i) phi.bind(d.vars[i], (model >> i) & 1);
    return phi;
}

std::vector<Assignment> models_over(const ClauseSet& f, std::span<const Variable> vars, const OracleLimits& limits) {
    std::vector<Variable> universe(vars.begin(), vars.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    auto cap = std::min<std::size_t>(limits.max_enumeration_vars, 63);
    if (universe.size() > cap) throw CapExceeded("sat.max_enumeration_variables", cap, universe.size());
    for (auto v : f.variables())
        if (!std::binary_search(universe.begin(), universe.end(), v))
            throw InvalidInput("variable " + std::to_string(v.id()) + " of F is not in the given set");

    auto d = detail::to_dense(f, universe);
    auto m = universe.size();
    std::vector<Assignment> out;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
        // universe[0] is the most significant position of k
        std::uint64_t t = 0;
        for (std::size_t i = 0; i < m; ++i)
            if ((k >> (m - 1 - i)) & 1) t |= std::uint64_t{1} << i;
        auto fmask = ~t;
        bool ok = std::all_of(d.clauses.begin(), d.clauses.end(),
                              [&](const detail::DenseClause& c) { return c.satisfied_by(t, fmask); });
        if (!ok) continue;
        Assignment phi;
        for (std::size_t i = 0; i < m; ++i) phi.bind(universe[i], (t >> i) & 1);
        out.push_back(std::move(phi));
    }
    return out;
}

}  // namespace mudef
