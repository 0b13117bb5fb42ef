#include <sstream>

#include "doctest.h"
#include "mudef/cnf.hpp"
#include "mudef/dimacs.hpp"
#include "mudef/errors.hpp"
#include "oracles.hpp"

using namespace mudef;

namespace {
const ClauseSet kA2{{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
}

TEST_CASE("variables and literals") {
    CHECK_THROWS_AS(Variable(0), InvalidInput);
    auto x = Literal::from_dimacs(-7);
    CHECK(x.variable() == Variable(7));
    CHECK_FALSE(x.is_positive());
    CHECK(x.complement().complement() == x);
    CHECK(x.complement().dimacs() == 7);
    CHECK_THROWS_AS(Literal::from_dimacs(0), InvalidInput);
    CHECK(Literal::from_dimacs(3) < Literal::from_dimacs(-3));
    CHECK(Literal::from_dimacs(-3) < Literal::from_dimacs(4));
}

TEST_CASE("clauses have set semantics and reject tautologies") {
    Clause c{2, 1, 2};
    CHECK(c.size() == 2);
    CHECK(c.contains(Literal::from_dimacs(1)));
    CHECK_THROWS_AS((Clause{1, -1}), InvalidInput);
    CHECK_FALSE(Clause::make({Literal::from_dimacs(2), Literal::from_dimacs(-2)}).has_value());
    Clause empty;
    CHECK(empty.empty());
    CHECK((Clause{1}).clashes_with(Clause{-1, 2}));
    CHECK_FALSE((Clause{1}).clashes_with(Clause{2}));
    CHECK((Clause{1}).is_subset_of(Clause{1, -3}));
    CHECK(*(Clause{1, -3}).sign_of(Variable(3)) == false);
}

TEST_CASE("clause-sets collapse duplicates and index variables") {
    std::size_t dups = 0;
    auto f = ClauseSet::collapse({Clause{1, 2}, Clause{2, 1}, Clause{-3}}, dups);
    CHECK(dups == 1);
    CHECK(f.size() == 2);
    REQUIRE(f.num_variables() == 3);
    CHECK(f.variables()[2] == Variable(3));
    CHECK(f.without(Clause{-3}).num_variables() == 2);
    CHECK(f.with(Clause{}).size() == 3);
}

TEST_CASE("metrics") {
    auto m = metrics(ClauseSet{{1}, {-1}});
    CHECK(m.n == 1);
    CHECK(m.c == 2);
    CHECK(m.deficiency == 1);
    CHECK(*m.min_var_degree == 2);
    CHECK(m.full_clause_count == 2);

    m = metrics(kA2);
    CHECK(m.n == 2);
    CHECK(m.c == 4);
    CHECK(m.deficiency == 2);
    CHECK(*m.min_var_degree == 4);
    CHECK(m.full_clause_count == 4);

    m = metrics(ClauseSet{});
    CHECK(m.n == 0);
    CHECK(m.c == 0);
    CHECK(m.deficiency == 0);
    CHECK_FALSE(m.min_var_degree.has_value());
    CHECK(m.full_clause_count == 0);

    CHECK(deficiency(ClauseSet{{1, 2, 3}}) == -2);
}

TEST_CASE("degrees count clauses containing the variable") {
    oracle::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        auto f = oracle::random_cnf(rng, 6, oracle::uniform(rng, 1, 12), 4);
        for (auto& [v, d] : degree_table(f)) {
            CHECK(d.total() >= 1);
            auto count = std::count_if(f.begin(), f.end(), [&](const Clause& c) { return c.contains_variable(v); });
            CHECK(d.total() == static_cast<std::size_t>(count));
        }
    }
}

TEST_CASE("apply_assignment") {
    CHECK(apply_assignment(ClauseSet{{1, 2}, {-1}}, Assignment{{1, true}}) == ClauseSet{{}});
    CHECK(apply_assignment(ClauseSet{{1}, {-1}}, Assignment{}) == ClauseSet{{1}, {-1}});
    CHECK(apply_assignment(kA2, Assignment{{1, true}}) == ClauseSet{{2}, {-2}});
    CHECK_THROWS_AS((Assignment{{1, true}, {1, false}}), InvalidInput);
}

TEST_CASE("apply_assignment agrees with evaluation of extensions") {
    oracle::Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        auto f = oracle::random_cnf(rng, 6, oracle::uniform(rng, 1, 10), 3);
        auto vars = f.variables();
        auto phi = oracle::random_partial(rng, vars);
        auto g = apply_assignment(f, phi);
        for (auto v : g.variables()) CHECK_FALSE(phi.binds(v));
        for (std::uint64_t bits = 0; bits < (1u << vars.size()); ++bits) {
            bool consistent = true;
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (auto val = phi.value(vars[i]); val && *val != bool((bits >> i) & 1)) consistent = false;
            if (!consistent) continue;
            std::vector<Variable> gv = g.variables();
            std::uint64_t sub = 0;
            for (std::size_t j = 0; j < gv.size(); ++j) {
                auto pos = std::lower_bound(vars.begin(), vars.end(), gv[j]) - vars.begin();
                sub |= ((bits >> pos) & 1) << j;
            }
            CHECK(oracle::eval(f, vars, bits) == oracle::eval(g, gv, sub));
        }
    }
}

TEST_CASE("hitting") {
    CHECK(is_hitting(kA2));
    CHECK_FALSE(is_hitting(ClauseSet{{1}, {2}}));
    CHECK(is_hitting(ClauseSet{{1}, {-1, 2}, {-1, -2}}));

    oracle::Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        auto f = oracle::greedy_hitting(rng, 5, 30);
        REQUIRE(is_hitting(f));
        for (auto& c : f) CHECK(is_hitting(f.without(c)));
    }
}

TEST_CASE("dimacs parsing") {
    auto r = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
    CHECK(r.clauses == ClauseSet{{1}, {-1}});
    CHECK(r.warnings.empty());

    r = parse_dimacs("p cnf 2 2\n1 2 0\n1 2 0\n");
    CHECK(r.clauses == ClauseSet{{1, 2}});
    CHECK(r.duplicate_clauses == 1);

    try {
        parse_dimacs("p cnf 2 1\n1 -1 0\n");
        FAIL("tautology accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("tautological clause #1") != std::string::npos);
        CHECK(e.line() == 2);
    }

    r = parse_dimacs("p cnf 2 2\n1 -1 0\n2 0\n", ParseOptions{true});
    CHECK(r.clauses == ClauseSet{{2}});
    CHECK(r.stripped_tautologies == 1);

    r = parse_dimacs("c comment\np cnf 0 1\n0\n");
    CHECK(r.clauses == ClauseSet{{}});

    r = parse_dimacs("p cnf 3 1\n1 2\n 3 0\n");
    CHECK(r.clauses == ClauseSet{{1, 2, 3}});

    r = parse_dimacs("p cnf 1 1\n1 0\n%\n0\n");
    CHECK(r.clauses == ClauseSet{{1}});

    r = parse_dimacs("p cnf 1 4\n1 0\n");
    CHECK(r.warnings.size() == 1);

    CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1 x 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\np cnf 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n99999999999 0\n"), ParseError);
}

TEST_CASE("dimacs rendering") {
    CHECK(render_dimacs(ClauseSet{{1}, {-1}}) == "p cnf 1 2\n1 0\n-1 0\n");
    CHECK(render_dimacs(ClauseSet{}) == "p cnf 0 0\n");
    CHECK(render_dimacs(ClauseSet{{}}) == "p cnf 0 1\n0\n");

    oracle::Rng rng(14);
    for (int t = 0; t < 200; ++t) {
        auto f = oracle::random_cnf(rng, 7, oracle::uniform(rng, 0, 10), 4);
        auto text = render_dimacs(f);
        auto back = parse_dimacs(text).clauses;
        CHECK(back == f);
        CHECK(render_dimacs(back) == text);
        std::istringstream in(text);
        CHECK(parse_dimacs(in).clauses == f);
    }
}
