#include "doctest.h"
#include "mudef/errors.hpp"
#include "mudef/mu.hpp"
#include "mudef/sat.hpp"
#include "oracles.hpp"

using namespace mudef;

namespace {
const ClauseSet kA2{{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};

bool satisfies_all(const Assignment& a, const ClauseSet& f) {
    return std::all_of(f.begin(), f.end(), [&](const Clause& c) { return a.satisfies(c); });
}
}  // namespace

TEST_CASE("satisfiability basics") {
    CHECK(is_satisfiable(ClauseSet{}));
    CHECK_FALSE(is_satisfiable(ClauseSet{{}}));
    CHECK_FALSE(is_satisfiable(kA2));

    CHECK(*find_model(ClauseSet{{1}}) == Assignment{{1, true}});
    CHECK_FALSE(find_model(ClauseSet{{1}, {-1}}).has_value());
    auto m = find_model(ClauseSet{{1, 2}, {-1, 2}});
    REQUIRE(m);
    CHECK(*m->value(Variable(2)) == true);
    CHECK(m->size() == 2);
}

TEST_CASE("models_over") {
    std::vector<Variable> v1{Variable(1)};
    auto ms = models_over(ClauseSet{{1}}, v1);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0] == Assignment{{1, true}});
    CHECK(models_over(ClauseSet{}, v1).size() == 2);

    std::vector<Variable> v12{Variable(1), Variable(2)};
    ms = models_over(ClauseSet{{1, 2}, {1, -2}}, v12);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == Assignment{{1, true}, {2, false}});
    CHECK(ms[1] == Assignment{{1, true}, {2, true}});

    CHECK_THROWS_AS(models_over(ClauseSet{{3}}, v12), InvalidInput);
    auto many = oracle::range_vars(21);
    try {
        models_over(ClauseSet{}, many);
        FAIL("no refusal");
    } catch (const CapExceeded& e) {
        CHECK(e.cap() == "sat.max_enumeration_variables");
        CHECK(e.limit() == 20);
    }
}

TEST_CASE("oracle cap") {
    std::vector<Clause> wide;
    for (int i = 1; i <= 41; ++i) wide.push_back(Clause{i});
    try {
        is_satisfiable(ClauseSet(wide));
        FAIL("no refusal");
    } catch (const CapExceeded& e) {
        CHECK(e.cap() == "sat.max_variables");
        CHECK(e.actual() == 41);
    }
    CHECK(is_satisfiable(ClauseSet(wide), OracleLimits{64, 20}));
}

TEST_CASE("oracle agrees with truth tables") {
    oracle::Rng rng(21);
    for (int t = 0; t < 1000; ++t) {
        auto n = static_cast<std::uint32_t>(oracle::uniform(rng, 1, 8));
        auto f = oracle::random_cnf(rng, n, oracle::uniform(rng, 1, 4 * n + 2), 3);
        bool expected = oracle::truth_sat(f);
        CHECK(is_satisfiable(f) == expected);
        auto m = find_model(f);
        CHECK(m.has_value() == expected);
        if (m) {
            CHECK(satisfies_all(*m, f));
            CHECK(apply_assignment(f, *m).empty());
            CHECK(find_model(f) == m);
        }
        if (n <= 6) {
            auto all = models_over(f, f.variables());
            CHECK(all.size() == oracle::truth_models(f, f.variables()).size());
        }
    }
}

TEST_CASE("minimal unsatisfiability") {
    CHECK(is_minimally_unsatisfiable(ClauseSet{{1}, {-1}}).is_mu);
    auto r = is_minimally_unsatisfiable(ClauseSet{{1}, {-1}, {1, 2}});
    CHECK_FALSE(r.is_mu);
    CHECK(r.is_unsat);
    CHECK(*r.removable == Clause{1, 2});
    CHECK(is_minimally_unsatisfiable(kA2).is_mu);
    r = is_minimally_unsatisfiable(ClauseSet{{1}, {2}});
    CHECK_FALSE(r.is_unsat);
    REQUIRE(r.model);
    CHECK(*r.model == Assignment{{1, true}, {2, true}});
    CHECK(is_minimally_unsatisfiable(ClauseSet{{}}).is_mu);

    CHECK(*mu_level(ClauseSet{{1}, {-1}}) == 1);
    CHECK(*mu_level(kA2) == 2);
    CHECK_FALSE(mu_level(ClauseSet{{1}, {2}}).has_value());
}

TEST_CASE("MU agrees with truth tables; Tarsi and no pure literals on random MU") {
    oracle::Rng rng(22);
    int mu_seen = 0;
    for (int t = 0; t < 600; ++t) {
        auto n = static_cast<std::uint32_t>(oracle::uniform(rng, 1, 6));
        auto f = oracle::random_cnf(rng, n, oracle::uniform(rng, 2, 3 * n + 3), 3);
        if (!oracle::truth_sat(f) && oracle::uniform(rng, 0, 1)) f = oracle::shrink_to_mu(rng, f);
        bool expected = oracle::truth_mu(f);
        auto r = is_minimally_unsatisfiable(f);
        CHECK(r.is_mu == expected);
        if (r.removable) CHECK_FALSE(oracle::truth_sat(f.without(*r.removable)));
        if (!expected) continue;
        ++mu_seen;
        CHECK(deficiency(f) >= 1);
        CHECK(is_vmu(f).is_vmu);
        for (auto& [v, d] : degree_table(f)) {
            CHECK(d.positive >= 1);
            CHECK(d.negative >= 1);
        }
    }
    CHECK(mu_seen > 100);
}

namespace {
// Definition by subsets: unsatisfiable and no unsatisfiable subset misses a variable.
bool brute_vmu(const ClauseSet& f) {
    if (oracle::truth_sat(f)) return false;
    auto c = f.size();
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < c; ++i)
            if ((mask >> i) & 1) idx.push_back(i);
        auto sub = f.subset(idx);
        if (!oracle::truth_sat(sub) && sub.num_variables() < f.num_variables()) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("VMU") {
    CHECK(is_vmu(kA2).is_vmu);
    auto r = is_vmu(ClauseSet{{1}, {-1}, {1, 2}});
    CHECK_FALSE(r.is_vmu);
    REQUIRE(r.unsat_subset);
    CHECK(*r.missing_variable == Variable(2));
    CHECK_FALSE(oracle::truth_sat(*r.unsat_subset));
    CHECK_FALSE(r.unsat_subset->contains_variable(Variable(2)));
    r = is_vmu(ClauseSet{{1}});
    CHECK_FALSE(r.is_vmu);
    CHECK(r.model.has_value());

    oracle::Rng rng(23);
    int vmu_not_mu = 0;
    for (int t = 0; t < 400; ++t) {
        auto n = static_cast<std::uint32_t>(oracle::uniform(rng, 1, 4));
        auto f = oracle::random_cnf(rng, n, oracle::uniform(rng, 2, 10), 3);
        bool expected = brute_vmu(f);
        CHECK(is_vmu(f).is_vmu == expected);
        if (expected && !oracle::truth_mu(f)) ++vmu_not_mu;
    }
    CHECK(vmu_not_mu > 0);
}

TEST_CASE("unsatisfiable hitting by weight") {
    CHECK(is_unsat_hitting(kA2));
    CHECK(is_unsat_hitting(ClauseSet{{1}, {-1, 2}, {-1, -2}}));
    CHECK_FALSE(is_unsat_hitting(ClauseSet{{1}, {-1, 2}}));
    CHECK(is_satisfiable(ClauseSet{{1}, {-1, 2}}));
    CHECK(is_unsat_hitting(ClauseSet{{}}));
    CHECK_FALSE(is_unsat_hitting(ClauseSet{}));
    CHECK(has_unit_weight(ClauseSet{{1}, {2}}));  // weight 1 but not hitting
    CHECK_FALSE(is_unsat_hitting(ClauseSet{{1}, {2}}));

    oracle::Rng rng(24);
    for (int t = 0; t < 300; ++t) {
        auto f = t % 2 ? oracle::splitting_tree(rng, 7, oracle::uniform(rng, 1, 20))
                       : oracle::greedy_hitting(rng, 6, 40);
        CHECK(is_unsat_hitting(f) == !oracle::truth_sat(f));
    }
}

TEST_CASE("classify") {
    auto r = classify(kA2);
    CHECK(r.is_mu);
    CHECK(*r.mu_level == 2);
    CHECK(r.is_vmu);
    CHECK(r.is_uhit);
    r = classify(ClauseSet{{1}, {-1}, {1, 2}});
    CHECK(r.is_unsat);
    CHECK_FALSE(r.is_mu);
    CHECK_FALSE(r.is_vmu);
    CHECK_FALSE(r.is_hitting);
    CHECK(*r.witness_clause == Clause{1, 2});
}
