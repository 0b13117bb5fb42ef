#include "mudef/autarky.hpp"

#include <algorithm>
#include <bit>

#include "dense.hpp"
#include "mudef/errors.hpp"

namespace mudef {

namespace {

void check_cap(const ClauseSet& f) {
    if (f.num_variables() > kMaxAutarkyVars)
        throw CapExceeded("autarky.max_variables", kMaxAutarkyVars, f.num_variables());
}

// Visits the k-subsets of {0..n-1} in lexicographic order; stops when the
// visitor returns true.
template <typename Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (visit(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool is_autarky(const Assignment& phi, const ClauseSet& f) {
    return std::all_of(f.begin(), f.end(),
                       [&](const Clause& c) { return !phi.touches(c) || phi.satisfies(c); });
}

std::optional<AutarkyResult> find_nontrivial_autarky(const ClauseSet& f, const VariableOrder& order) {
    check_cap(f);
    auto d = detail::to_dense(f);
    auto n = static_cast<int>(d.vars.size());

    std::vector<int> position(n);  // order position -> dense index
    if (order) {
        auto vars = order(f);
        if (vars.size() != d.vars.size()) throw InvalidInput("variable order is not a permutation of var(F)");
        for (int i = 0; i < n; ++i) {
            auto it = std::lower_bound(d.vars.begin(), d.vars.end(), vars[i]);
            if (it == d.vars.end() || *it != vars[i]) throw InvalidInput("variable order is not a permutation of var(F)");
            position[i] = static_cast<int>(it - d.vars.begin());
        }
    } else {
        for (int i = 0; i < n; ++i) position[i] = i;
    }

    std::vector<detail::DenseClause> restricted;
    std::optional<AutarkyResult> found;
    for (int k = 1; k <= n && !found; ++k) {
        for_each_combination(n, k, [&](const std::vector<int>& idx) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= std::uint64_t{1} << position[i];
            restricted.clear();
            for (auto& c : d.clauses)
                if (c.vars() & mask) restricted.push_back({c.pos & mask, c.neg & mask});
            std::uint64_t model = 0;
            if (!detail::dense_solve(restricted, model)) return false;
            Assignment phi;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) phi.bind(d.vars[i], (model >> i) & 1);
            std::vector<Clause> touched;
            for (auto& c : f)
                if (phi.touches(c)) touched.push_back(c);
            found = AutarkyResult{std::move(phi), ClauseSet(std::move(touched))};
            return true;
        });
    }
    return found;
}

ClauseSet lean_kernel(const ClauseSet& f, const VariableOrder& order) {
    check_cap(f);
    auto current = f;
    while (auto a = find_nontrivial_autarky(current, order)) {
        std::vector<Clause> rest;
        for (auto& c : current)
            if (!a->autarky.satisfies(c)) rest.push_back(c);
        current = ClauseSet(std::move(rest));
    }
    return current;
}

bool is_lean(const ClauseSet& f) { return !find_nontrivial_autarky(f).has_value(); }

SurplusReport surplus(const ClauseSet& f) {
    if (f.num_variables() == 0) throw InvalidInput("surplus needs a non-empty variable set");
    check_cap(f);
    auto d = detail::to_dense(f);
    auto n = static_cast<int>(d.vars.size());
    std::vector<std::uint64_t> masks;
    for (auto& c : d.clauses) masks.push_back(c.vars());

    SurplusReport best;
    bool have = false;
    for (int k = 1; k <= n; ++k) {
        for_each_combination(n, k, [&](const std::vector<int>& idx) {
            std::uint64_t v = 0;
            for (int i : idx) v |= std::uint64_t{1} << i;
            std::int64_t meeting = std::count_if(masks.begin(), masks.end(), [&](auto m) { return (m & v) != 0; });
            auto value = meeting - k;
            if (!have || value < best.surplus) {
                have = true;
                best.surplus = value;
                best.witness_vars.clear();
                for (int i : idx) best.witness_vars.push_back(d.vars[i]);
            }
            return false;
        });
    }
    return best;
}

}  // namespace mudef
