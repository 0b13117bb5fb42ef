#pragma once

// Independent reference implementations used by the tests. Nothing here calls
// into the library's solvers: evaluation is by plain truth tables and
// canonicalization walks the whole signed permutation group.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "mudef/cnf.hpp"

namespace oracle {

using mudef::Assignment;
using mudef::Clause;
using mudef::ClauseSet;
using mudef::Literal;
using mudef::Variable;

// Bit i of `bits` is the value of vars[i].
inline bool eval_clause(const Clause& c, const std::vector<Variable>& vars, std::uint64_t bits) {
    for (auto x : c) {
        auto it = std::lower_bound(vars.begin(), vars.end(), x.variable());
        bool value = (bits >> (it - vars.begin())) & 1;
        if (value == x.is_positive()) return true;
    }
    return false;
}

inline bool eval(const ClauseSet& f, const std::vector<Variable>& vars, std::uint64_t bits) {
    for (auto& c : f)
        if (!eval_clause(c, vars, bits)) return false;
    return true;
}

/// Satisfying rows of the truth table over `vars` (sorted, ⊇ var(F)).
inline std::vector<std::uint64_t> truth_models(const ClauseSet& f, const std::vector<Variable>& vars) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits)
        if (eval(f, vars, bits)) out.push_back(bits);
    return out;
}

inline bool truth_sat(const ClauseSet& f) {
    auto& vars = f.variables();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits)
        if (eval(f, vars, bits)) return true;
    return false;
}

inline bool truth_mu(const ClauseSet& f) {
    if (truth_sat(f)) return false;
    for (auto& c : f)
        if (!truth_sat(f.without(c))) return false;
    return true;
}

inline Assignment to_assignment(const std::vector<Variable>& vars, std::uint64_t bits) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.bind(vars[i], (bits >> i) & 1);
    return a;
}

inline std::vector<Variable> range_vars(std::uint32_t n) {
    std::vector<Variable> vars;
    for (std::uint32_t i = 1; i <= n; ++i) vars.emplace_back(i);
    return vars;
}

// Canonical form by exhaustion ---------------------------------------------

// A clause over 1..n as its digit string: 0 absent, 1 positive, 2 negative,
// variable 1 first. Clauses order by length, then by digits.
using Digits = std::vector<int>;
using Key = std::pair<std::size_t, Digits>;

inline Key key_of(const Clause& c, std::size_t n) {
    Digits d(n, 0);
    for (auto x : c) d[x.variable().id() - 1] = x.is_positive() ? 1 : 2;
    return {c.size(), d};
}

inline std::vector<Key> keys_of(const ClauseSet& f, std::size_t n) {
    std::vector<Key> keys;
    for (auto& c : f) keys.push_back(key_of(c, n));
    std::sort(keys.begin(), keys.end());
    return keys;
}

/// Applies perm (0-based image of source variable i+1) and flip mask.
inline ClauseSet rename(const ClauseSet& f, const std::vector<std::uint32_t>& perm, std::uint32_t flips) {
    std::vector<Clause> out;
    for (auto& c : f) {
        std::vector<Literal> lits;
        for (auto x : c) {
            auto i = x.variable().id() - 1;
            bool positive = x.is_positive() != bool((flips >> i) & 1);
            lits.emplace_back(Variable(perm[i] + 1), positive);
        }
        out.emplace_back(std::move(lits));
    }
    return ClauseSet(std::move(out));
}

/// Relabels var(F) onto 1..n in ascending order.
inline ClauseSet compact(const ClauseSet& f) {
    auto& vars = f.variables();
    std::vector<Clause> out;
    for (auto& c : f) {
        std::vector<Literal> lits;
        for (auto x : c) {
            auto pos = std::lower_bound(vars.begin(), vars.end(), x.variable()) - vars.begin();
            lits.emplace_back(Variable(static_cast<std::uint32_t>(pos + 1)), x.is_positive());
        }
        out.emplace_back(std::move(lits));
    }
    return ClauseSet(std::move(out));
}

/// Least image under all n!·2^n signed renamings onto 1..n(F).
inline ClauseSet brute_canonical(const ClauseSet& input) {
    auto f = compact(input);
    auto n = f.num_variables();
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<Key> best;
    ClauseSet best_set = f;
    bool first = true;
    do {
        for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
            auto g = rename(f, perm, flips);
            auto keys = keys_of(g, n);
            if (first || keys < best) {
                best = std::move(keys);
                best_set = g;
                first = false;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best_set;
}

inline bool brute_isomorphic(const ClauseSet& f, const ClauseSet& g) {
    if (f.size() != g.size() || f.num_variables() != g.num_variables()) return false;
    return brute_canonical(f) == brute_canonical(g);
}

// Random instances ----------------------------------------------------------

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Clause random_clause(Rng& rng, std::uint32_t n, std::size_t max_len) {
    std::vector<std::uint32_t> ids(n);
    std::iota(ids.begin(), ids.end(), 1u);
    std::shuffle(ids.begin(), ids.end(), rng);
    auto len = uniform(rng, 1, std::min<std::size_t>(max_len, n));
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < len; ++i) lits.emplace_back(Variable(ids[i]), uniform(rng, 0, 1) == 1);
    return Clause(std::move(lits));
}

inline ClauseSet random_cnf(Rng& rng, std::uint32_t n, std::size_t c, std::size_t max_len) {
    std::vector<Clause> cs;
    for (std::size_t i = 0; i < c; ++i) cs.push_back(random_clause(rng, n, max_len));
    return ClauseSet(std::move(cs));
}

inline Assignment random_partial(Rng& rng, const std::vector<Variable>& vars) {
    Assignment a;
    for (auto v : vars)
        if (uniform(rng, 0, 2) == 0) a.bind(v, uniform(rng, 0, 1) == 1);
    return a;
}

/// Deletes clauses while the rest stays unsatisfiable; the input must be
/// unsatisfiable. Deletion order is random.
inline ClauseSet shrink_to_mu(Rng& rng, const ClauseSet& f) {
    std::vector<Clause> cs(f.begin(), f.end());
    std::shuffle(cs.begin(), cs.end(), rng);
    for (std::size_t i = 0; i < cs.size();) {
        auto trial = cs;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (!truth_sat(ClauseSet(trial)))
            cs = std::move(trial);
        else
            ++i;
    }
    return ClauseSet(std::move(cs));
}

/// The leaves of a random splitting tree over 1..n: always an unsatisfiable
/// hitting clause-set.
inline ClauseSet splitting_tree(Rng& rng, std::uint32_t n, std::size_t max_leaves) {
    std::vector<std::vector<Literal>> leaves{{}};
    for (std::size_t round = 0; round < 4 * max_leaves && leaves.size() < max_leaves; ++round) {
        auto i = uniform(rng, 0, leaves.size() - 1);
        auto& leaf = leaves[i];
        std::vector<std::uint32_t> free;
        for (std::uint32_t v = 1; v <= n; ++v)
            if (std::none_of(leaf.begin(), leaf.end(), [&](Literal x) { return x.variable().id() == v; }))
                free.push_back(v);
        if (free.empty()) continue;
        Variable v(free[uniform(rng, 0, free.size() - 1)]);
        auto other = leaf;
        leaf.emplace_back(v, true);
        other.emplace_back(v, false);
        leaves.push_back(std::move(other));
    }
    std::vector<Clause> cs;
    for (auto& l : leaves) cs.emplace_back(l);
    return ClauseSet(std::move(cs));
}

/// Random clauses kept only when they clash with every clause taken so far.
inline ClauseSet greedy_hitting(Rng& rng, std::uint32_t n, std::size_t tries) {
    std::vector<Clause> cs;
    for (std::size_t t = 0; t < tries; ++t) {
        auto c = random_clause(rng, n, n);
        if (std::all_of(cs.begin(), cs.end(), [&](const Clause& d) { return c.clashes_with(d); }) &&
            std::find(cs.begin(), cs.end(), c) == cs.end())
            cs.push_back(c);
    }
    return ClauseSet(std::move(cs));
}

/// Inverse singular DP step: picks clauses S of F and a common part A of them,
/// and replaces S by {v} ∪ A and {¬v} ∪ B_D (D ∈ S) with A ∪ B_D = D. Singular
/// DP on v gives back F. The result need not be MU.
inline ClauseSet singular_extension(Rng& rng, const ClauseSet& f, Variable v) {
    std::vector<Clause> cs(f.begin(), f.end());
    std::shuffle(cs.begin(), cs.end(), rng);
    auto k = uniform(rng, 1, std::min<std::size_t>(cs.size(), 3));
    std::vector<Clause> picked(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Clause> rest(cs.begin() + static_cast<std::ptrdiff_t>(k), cs.end());

    std::vector<Literal> common(picked[0].begin(), picked[0].end());
    for (auto& d : picked) {
        std::vector<Literal> keep;
        for (auto x : common)
            if (d.contains(x)) keep.push_back(x);
        common = std::move(keep);
    }
    std::vector<Literal> a;
    for (auto x : common)
        if (uniform(rng, 0, 1)) a.push_back(x);

    auto pos = a;
    pos.emplace_back(v, true);
    rest.emplace_back(pos);
    for (auto& d : picked) {
        std::vector<Literal> b{Literal(v, false)};
        for (auto x : d)
            if (std::find(a.begin(), a.end(), x) == a.end() || uniform(rng, 0, 1)) b.push_back(x);
        rest.emplace_back(b);
    }
    return ClauseSet(std::move(rest));
}

}  // namespace oracle
