#include "mudef/reductions.hpp"

#include <algorithm>
#include <set>

#include "mudef/dimacs.hpp"
#include "mudef/errors.hpp"
#include "mudef/isomorphism.hpp"

namespace mudef {

std::vector<Variable> singular_variables(const ClauseSet& f) {
    std::vector<Variable> out;
    for (auto& [v, d] : degree_table(f))
        if (std::min(d.positive, d.negative) == 1 || d.positive + d.negative == 1) out.push_back(v);
    return out;
}

ClauseSet dp_reduce(const ClauseSet& f, Variable v) {
    if (!f.contains_variable(v))
        throw InvalidInput("variable " + std::to_string(v.id()) + " does not occur");
    std::vector<Clause> kept, positive, negative;
    for (auto& c : f) {
        auto sign = c.sign_of(v);
        if (!sign) kept.push_back(c);
        else if (*sign) positive.push_back(c);
        else negative.push_back(c);
    }
    for (auto& p : positive)
        for (auto& q : negative) {
            std::vector<Literal> lits;
            for (auto x : p)
                if (x.variable() != v) lits.push_back(x);
            for (auto x : q)
                if (x.variable() != v) lits.push_back(x);
            if (auto r = Clause::make(std::move(lits))) kept.push_back(std::move(*r));
        }
    return ClauseSet(std::move(kept));
}

namespace {

Variable choose(const std::vector<Variable>& singular, SdpStrategy strategy, std::span<const Variable> order) {
    switch (strategy) {
        case SdpStrategy::first_id:
            return singular.front();
        case SdpStrategy::last_id:
            return singular.back();
        case SdpStrategy::given_order:
            for (auto v : order)
                if (std::binary_search(singular.begin(), singular.end(), v)) return v;
            return singular.front();
    }
    return singular.front();
}

}  // namespace

SdpResult sdp_normal_form(const ClauseSet& f, SdpStrategy strategy, std::span<const Variable> order) {
    SdpResult result{f, {}};
    for (;;) {
        auto singular = singular_variables(result.normal_form);
        if (singular.empty()) break;
        auto v = choose(singular, strategy, order);
        result.normal_form = dp_reduce(result.normal_form, v);
        result.trace.steps.push_back({v, result.normal_form});
    }
    return result;
}

std::vector<NormalFormClass> all_sdp_normal_forms(const ClauseSet& f) {
    if (f.num_variables() > kMaxExploreVars)
        throw CapExceeded("reductions.max_explore_variables", kMaxExploreVars, f.num_variables());

    std::set<ClauseSet> visited{f};
    std::set<ClauseSet> finals;
    std::vector<ClauseSet> stack{f};
    while (!stack.empty()) {
        auto g = std::move(stack.back());
        stack.pop_back();
        auto singular = singular_variables(g);
        if (singular.empty()) {
            finals.insert(std::move(g));
            continue;
        }
        for (auto v : singular) {
            auto h = dp_reduce(g, v);
            if (visited.insert(h).second) stack.push_back(std::move(h));
        }
    }

    std::vector<NormalFormClass> classes;
    for (auto& g : finals) {  // ascending, so the first member seen is the representative
        auto it = std::find_if(classes.begin(), classes.end(), [&](const NormalFormClass& k) {
            return are_isomorphic(k.representative, g).has_value();
        });
        if (it == classes.end()) classes.push_back({g, 1});
        else ++it->members;
    }
    return classes;
}

nlohmann::json to_json(const ReductionTrace& trace) {
    auto steps = nlohmann::json::array();
    for (auto& s : trace.steps)
        steps.push_back({{"eliminated", s.eliminated.id()}, {"snapshot", render_dimacs_body(s.after)}});
    return {{"steps", std::move(steps)}};
}

}  // namespace mudef
