#include "mudef/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "canon.hpp"
#include "dense.hpp"
#include "mudef/errors.hpp"
#include "mudef/isomorphism.hpp"
#include "mudef/mu.hpp"
#include "mudef/reductions.hpp"

namespace mudef {

namespace {

// Falsifying assignments of a clause over n ≤ 5 variables; bit a is the
// assignment whose variable i is true iff bit i of a is set.
using Cover = std::uint32_t;

struct Universe {
    int n = 0;
    std::vector<detail::DenseClause> clauses;  // all non-empty clauses, ascending key
    std::vector<Cover> falsified;
    std::vector<int> length;
    Cover full = 0;
};

Universe build_universe(int n) {
    Universe u;
    u.n = n;
    std::vector<std::pair<detail::ClauseKey, detail::DenseClause>> keyed;
    std::uint64_t codes = 1;
    for (int i = 0; i < n; ++i) codes *= 3;
    for (std::uint64_t code = 1; code < codes; ++code) {
        detail::DenseClause c;
        auto rest = code;
        for (int i = n - 1; i >= 0; --i) {
            auto digit = rest % 3;
            rest /= 3;
            if (digit == 1) c.pos |= std::uint64_t{1} << i;
            if (digit == 2) c.neg |= std::uint64_t{1} << i;
        }
        keyed.emplace_back(detail::clause_key(c, n), c);
    }
    std::sort(keyed.begin(), keyed.end(), [](auto& a, auto& b) { return a.first < b.first; });
    u.full = n == 5 ? ~Cover{0} : (Cover{1} << (1u << n)) - 1;
    for (auto& [key, c] : keyed) {
        Cover f = 0;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
            if ((a & c.pos) == 0 && (a & c.neg) == c.neg) f |= Cover{1} << a;
        u.clauses.push_back(c);
        u.falsified.push_back(f);
        u.length.push_back(c.size());
    }
    return u;
}

struct SharedBudget {
    std::uint64_t limit = 0;
    std::atomic<std::uint64_t> used{0};
    std::atomic<bool> exhausted{false};

    bool take() {
        auto n = used.fetch_add(1, std::memory_order_relaxed) + 1;
        if (limit != 0 && n > limit) {
            exhausted.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

// Orderly generation within one (n, c) cell: clauses are added in ascending
// key order and every prefix must be its own minimal image. The remaining
// prunes are necessary conditions for MU on the completed set:
//  - each clause keeps a private falsified assignment (F \ {C} satisfiable),
//  - the falsified cubes can still cover all assignments,
//  - pairwise clashes when hitting is required.
class CellSearch {
public:
    CellSearch(const Universe& u, int c, const EnumSpec& spec, SharedBudget& budget)
        : u_(u), c_(c), spec_(spec), budget_(budget) {}

    void run_from(int first) {
        if (try_push(first)) {
            dfs(first + 1);
            pop();
        }
    }

    std::vector<std::vector<int>> take_results() { return std::move(results_); }

private:
    bool try_push(int x) {
        auto fx = u_.falsified[x];
        auto next_twice = twice_ | (once_ & fx);
        auto next_once = (once_ & ~fx) | (fx & ~once_ & ~twice_);
        if ((fx & next_once) == 0) return false;
        for (int j : chosen_)
            if ((u_.falsified[j] & next_once) == 0) return false;
        if (spec_.require_hitting) {
            auto& cx = u_.clauses[x];
            for (int j : chosen_) {
                auto& cj = u_.clauses[j];
                if (((cx.pos & cj.neg) | (cx.neg & cj.pos)) == 0) return false;
            }
        }
        if (!budget_.take()) {
            aborted_ = true;
            return false;
        }
        chosen_.push_back(x);
        dense_.push_back(u_.clauses[x]);
        if (!detail::is_min_image(dense_, u_.n)) {
            chosen_.pop_back();
            dense_.pop_back();
            return false;
        }
        saved_.emplace_back(once_, twice_);
        once_ = next_once;
        twice_ = next_twice;
        return true;
    }

    void pop() {
        chosen_.pop_back();
        dense_.pop_back();
        std::tie(once_, twice_) = saved_.back();
        saved_.pop_back();
    }

    void dfs(int start) {
        if (aborted_) return;
        auto k = static_cast<int>(chosen_.size());
        if (k == c_) {
            leaf();
            return;
        }
        auto total = static_cast<int>(u_.clauses.size());
        for (int x = start; x <= total - (c_ - k) && !aborted_; ++x) {
            // later clauses are at least as long, so their cubes are no larger
            auto uncovered = std::popcount(u_.full & ~(once_ | twice_));
            auto capacity = static_cast<long>(c_ - k) << (u_.n - u_.length[x]);
            if (uncovered > capacity) break;
            if (!try_push(x)) continue;
            auto left = std::popcount(u_.full & ~(once_ | twice_));
            if (left <= static_cast<long>(c_ - k - 1) << (u_.n - u_.length[x])) dfs(x + 1);
            pop();
        }
    }

    void leaf() {
        if ((once_ | twice_) != u_.full) return;
        std::uint64_t pos = 0, neg = 0;
        for (auto& c : dense_) {
            pos |= c.pos;
            neg |= c.neg;
        }
        auto all = (std::uint64_t{1} << u_.n) - 1;
        if (pos != all || neg != all) return;
        if (spec_.require_nonsingular) {
            for (int i = 0; i < u_.n; ++i) {
                int p = 0, q = 0;
                for (auto& c : dense_) {
                    p += (c.pos >> i) & 1;
                    q += (c.neg >> i) & 1;
                }
                if (std::min(p, q) < 2) return;
            }
        }
        results_.push_back(chosen_);
    }

    const Universe& u_;
    int c_;
    const EnumSpec& spec_;
    SharedBudget& budget_;
    std::vector<int> chosen_;
    std::vector<detail::DenseClause> dense_;
    std::vector<std::pair<Cover, Cover>> saved_;
    Cover once_ = 0;
    Cover twice_ = 0;
    bool aborted_ = false;
    std::vector<std::vector<int>> results_;
};

std::vector<Variable> first_variables(std::size_t n) {
    std::vector<Variable> vars;
    for (std::size_t i = 1; i <= n; ++i) vars.emplace_back(static_cast<std::uint32_t>(i));
    return vars;
}

}  // namespace

void validate(const EnumSpec& spec) {
    if (spec.deficiency < 1) throw InvalidInput("deficiency must be at least 1 (no MU clause-set has δ < 1)");
    if (spec.deficiency > kMaxEnumDeficiency)
        throw CapExceeded("enumerate.max_deficiency", kMaxEnumDeficiency, static_cast<std::size_t>(spec.deficiency));
    auto cap = spec.require_hitting ? kMaxEnumVarsHitting : kMaxEnumVars;
    if (spec.n_max > cap) throw CapExceeded("enumerate.max_variables", cap, spec.n_max);
}

CatalogEntry make_entry(const ClauseSet& f) {
    CatalogEntry e;
    e.clauses = f;
    e.metrics = metrics(f);
    e.hitting = is_hitting(f);
    e.nonsingular = singular_variables(f).empty();
    return e;
}

Catalog enumerate(const EnumSpec& spec, unsigned workers) {
    validate(spec);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    struct Task {
        int n;
        int first;
    };
    std::vector<Universe> universes;
    std::vector<Task> tasks;
    for (std::size_t n = 1; n <= spec.n_max; ++n) {
        universes.push_back(build_universe(static_cast<int>(n)));
        auto c = static_cast<int>(n) + static_cast<int>(spec.deficiency);
        auto total = static_cast<int>(universes.back().clauses.size());
        for (int first = 0; first + c <= total; ++first) tasks.push_back({static_cast<int>(n), first});
    }

    SharedBudget budget;
    budget.limit = spec.node_limit;
    std::atomic<std::size_t> next{0};
    std::mutex merge;
    std::vector<std::pair<int, std::vector<int>>> found;  // (n, universe indices)

    auto work = [&] {
        for (;;) {
            auto t = next.fetch_add(1);
            if (t >= tasks.size() || budget.exhausted.load()) return;
            auto& task = tasks[t];
            auto& u = universes[task.n - 1];
            CellSearch search(u, task.n + static_cast<int>(spec.deficiency), spec, budget);
            search.run_from(task.first);
            auto local = search.take_results();
            std::lock_guard lock(merge);
            for (auto& r : local) found.emplace_back(task.n, std::move(r));
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < std::min<std::size_t>(workers, tasks.size()); ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    Catalog catalog;
    catalog.spec = spec;
    catalog.exhaustive = !budget.exhausted.load();
    catalog.nodes = std::min(budget.used.load(), spec.node_limit == 0 ? budget.used.load() : spec.node_limit);
    for (std::size_t n = 1; n <= spec.n_max; ++n) catalog.counts_per_n[n] = 0;
    for (auto& [n, indices] : found) {
        auto& u = universes[n - 1];
        auto vars = first_variables(n);
        std::vector<Clause> clauses;
        for (int i : indices) clauses.push_back(detail::from_dense(u.clauses[i], vars));
        catalog.entries.push_back(make_entry(ClauseSet(std::move(clauses))));
        ++catalog.counts_per_n[n];
    }
    std::sort(catalog.entries.begin(), catalog.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.metrics.n != b.metrics.n) return a.metrics.n < b.metrics.n;
        return a.clauses < b.clauses;
    });
    return catalog;
}

std::vector<std::string> verify_catalog(const Catalog& catalog) {
    std::vector<std::string> problems;
    auto& spec = catalog.spec;
    for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
        auto& e = catalog.entries[i];
        auto tag = "entry " + std::to_string(i) + ": ";
        auto& f = e.clauses;
        if (!is_minimally_unsatisfiable(f).is_mu) problems.push_back(tag + "not minimally unsatisfiable");
        if (deficiency(f) != spec.deficiency) problems.push_back(tag + "deficiency differs from the catalog spec");
        if (f.num_variables() > spec.n_max) problems.push_back(tag + "more variables than n_max");
        if (spec.require_hitting && !is_hitting(f)) problems.push_back(tag + "not hitting");
        if (spec.require_nonsingular && !singular_variables(f).empty()) problems.push_back(tag + "has a singular variable");
        auto fresh = metrics(f);
        if (fresh.n != e.metrics.n || fresh.c != e.metrics.c || fresh.deficiency != e.metrics.deficiency ||
            fresh.min_var_degree != e.metrics.min_var_degree || fresh.full_clause_count != e.metrics.full_clause_count)
            problems.push_back(tag + "stored statistics do not match the clauses");
        if (f.num_variables() <= kMaxIsomorphismVars && canonical_form(f) != f)
            problems.push_back(tag + "not in canonical form");
    }
    for (std::size_t i = 0; i < catalog.entries.size(); ++i)
        for (std::size_t j = i + 1; j < catalog.entries.size(); ++j) {
            auto& a = catalog.entries[i].clauses;
            auto& b = catalog.entries[j].clauses;
            if (a.size() != b.size() || a.num_variables() != b.num_variables()) continue;
            if (a.num_variables() > kMaxIsomorphismVars) continue;
            if (are_isomorphic(a, b))
                problems.push_back("entries " + std::to_string(i) + " and " + std::to_string(j) + " are isomorphic");
        }
    return problems;
}

namespace {

template <typename Stat>
Extremum maximize(const Catalog& catalog, Stat stat) {
    if (catalog.entries.empty()) throw InvalidInput("empty catalog");
    Extremum best;
    bool have = false;
    for (auto& e : catalog.entries) {
        auto v = stat(e);
        if (!have || v > best.value) {
            best = {v, e.clauses};
            have = true;
        }
    }
    return best;
}

}  // namespace

Extremum max_min_var_degree(const Catalog& catalog) {
    return maximize(catalog, [](const CatalogEntry& e) { return e.metrics.min_var_degree.value_or(0); });
}

Extremum max_full_clauses(const Catalog& catalog) {
    return maximize(catalog, [](const CatalogEntry& e) { return e.metrics.full_clause_count; });
}

UhitMaximum max_nonsingular_uhit_vars(std::int64_t k, std::size_t n_max, unsigned workers) {
    if (k < 2) throw InvalidInput("the nonsingular UHit maximum is defined for deficiency k >= 2");
    EnumSpec spec{n_max, k, true, true, 0};
    auto catalog = enumerate(spec, workers);
    UhitMaximum out;
    out.exhaustive = catalog.exhaustive;
    out.counts_per_n = catalog.counts_per_n;
    for (auto& e : catalog.entries)
        if (!out.value || e.metrics.n > *out.value) {
            out.value = e.metrics.n;
            out.witness = e.clauses;
        }
    return out;
}

}  // namespace mudef
