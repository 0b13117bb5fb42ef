#include "mudef/cnf.hpp"

#include <algorithm>
#include <limits>

#include "mudef/errors.hpp"

namespace mudef {

Variable::Variable(std::uint32_t id) : id_(id) {
    if (id == 0) throw InvalidInput("variable id must be positive");
}

Literal Literal::from_dimacs(std::int64_t value) {
    if (value == 0) throw InvalidInput("0 is not a literal");
    if (value > std::numeric_limits<std::int32_t>::max() || value < -std::numeric_limits<std::int32_t>::max())
        throw InvalidInput("literal out of range: " + std::to_string(value));
    return Literal(static_cast<std::int32_t>(value));
}

// Clause --------------------------------------------------------------------

std::optional<Clause> Clause::make(std::vector<Literal> literals) {
    std::sort(literals.begin(), literals.end());
    literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
    for (std::size_t i = 1; i < literals.size(); ++i)
        if (literals[i].variable() == literals[i - 1].variable()) return std::nullopt;
    Clause c;
    c.literals_ = std::move(literals);
    return c;
}

Clause::Clause(std::vector<Literal> literals) {
    auto c = make(std::move(literals));
    if (!c) throw InvalidInput("tautological clause");
    *this = std::move(*c);
}

Clause::Clause(std::initializer_list<int> dimacs) {
    std::vector<Literal> lits;
    lits.reserve(dimacs.size());
    for (int x : dimacs) lits.push_back(Literal::from_dimacs(x));
    *this = Clause(std::move(lits));
}

bool Clause::contains(Literal x) const { return std::binary_search(literals_.begin(), literals_.end(), x); }

bool Clause::contains_variable(Variable v) const { return sign_of(v).has_value(); }

std::optional<bool> Clause::sign_of(Variable v) const {
    auto it = std::lower_bound(literals_.begin(), literals_.end(), Literal(v, true));
    if (it != literals_.end() && it->variable() == v) return it->is_positive();
    return std::nullopt;
}

std::vector<Variable> Clause::variables() const {
    std::vector<Variable> vars;
    vars.reserve(literals_.size());
    for (auto x : literals_) vars.push_back(x.variable());
    return vars;
}

bool Clause::is_subset_of(const Clause& other) const {
    return std::includes(other.literals_.begin(), other.literals_.end(), literals_.begin(), literals_.end());
}

bool Clause::clashes_with(const Clause& other) const {
    auto a = literals_.begin();
    auto b = other.literals_.begin();
    while (a != literals_.end() && b != other.literals_.end()) {
        auto va = a->variable();
        auto vb = b->variable();
        if (va < vb) {
            ++a;
        } else if (vb < va) {
            ++b;
        } else {
            if (a->is_positive() != b->is_positive()) return true;
            ++a;
            ++b;
        }
    }
    return false;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
    return std::lexicographical_compare_three_way(a.literals_.begin(), a.literals_.end(), b.literals_.begin(),
                                                  b.literals_.end());
}

// ClauseSet -----------------------------------------------------------------

ClauseSet ClauseSet::collapse(std::vector<Clause> clauses, std::size_t& duplicates) {
    std::sort(clauses.begin(), clauses.end());
    auto before = clauses.size();
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
    duplicates = before - clauses.size();
    ClauseSet f;
    f.clauses_ = std::move(clauses);
    f.index_variables();
    return f;
}

ClauseSet::ClauseSet(std::vector<Clause> clauses) {
    std::size_t ignored = 0;
    *this = collapse(std::move(clauses), ignored);
}

ClauseSet::ClauseSet(std::initializer_list<std::initializer_list<int>> clauses) {
    std::vector<Clause> cs;
    cs.reserve(clauses.size());
    for (auto& c : clauses) cs.emplace_back(c);
    *this = ClauseSet(std::move(cs));
}

void ClauseSet::index_variables() {
    variables_.clear();
    for (auto& c : clauses_)
        for (auto x : c) variables_.push_back(x.variable());
    std::sort(variables_.begin(), variables_.end());
    variables_.erase(std::unique(variables_.begin(), variables_.end()), variables_.end());
}

bool ClauseSet::contains(const Clause& c) const { return std::binary_search(clauses_.begin(), clauses_.end(), c); }

bool ClauseSet::contains_variable(Variable v) const {
    return std::binary_search(variables_.begin(), variables_.end(), v);
}

ClauseSet ClauseSet::without(const Clause& c) const {
    std::vector<Clause> rest;
    rest.reserve(clauses_.size());
    for (auto& d : clauses_)
        if (d != c) rest.push_back(d);
    return ClauseSet(std::move(rest));
}

ClauseSet ClauseSet::with(const Clause& c) const {
    auto all = clauses_;
    all.push_back(c);
    return ClauseSet(std::move(all));
}

ClauseSet ClauseSet::subset(std::span<const std::size_t> indices) const {
    std::vector<Clause> picked;
    picked.reserve(indices.size());
    for (auto i : indices) picked.push_back(clauses_.at(i));
    return ClauseSet(std::move(picked));
}

std::strong_ordering operator<=>(const ClauseSet& a, const ClauseSet& b) {
    return std::lexicographical_compare_three_way(a.clauses_.begin(), a.clauses_.end(), b.clauses_.begin(),
                                                  b.clauses_.end());
}

// Assignment ----------------------------------------------------------------

Assignment::Assignment(std::initializer_list<std::pair<std::uint32_t, bool>> bindings) {
    for (auto [id, value] : bindings) bind(Variable(id), value);
}

void Assignment::bind(Variable v, bool value) {
    auto [it, inserted] = bindings_.emplace(v, value);
    if (!inserted && it->second != value)
        throw InvalidInput("variable " + std::to_string(v.id()) + " bound twice with different values");
}

std::optional<bool> Assignment::value(Variable v) const {
    auto it = bindings_.find(v);
    if (it == bindings_.end()) return std::nullopt;
    return it->second;
}

bool Assignment::satisfies(Literal x) const {
    auto val = value(x.variable());
    return val && *val == x.is_positive();
}

bool Assignment::falsifies(Literal x) const {
    auto val = value(x.variable());
    return val && *val != x.is_positive();
}

bool Assignment::satisfies(const Clause& c) const {
    return std::any_of(c.begin(), c.end(), [&](Literal x) { return satisfies(x); });
}

bool Assignment::touches(const Clause& c) const {
    return std::any_of(c.begin(), c.end(), [&](Literal x) { return binds(x.variable()); });
}

// Parameters ----------------------------------------------------------------

std::int64_t deficiency(const ClauseSet& f) {
    return static_cast<std::int64_t>(f.size()) - static_cast<std::int64_t>(f.num_variables());
}

std::map<Variable, Degree> degree_table(const ClauseSet& f) {
    std::map<Variable, Degree> table;
    for (auto& c : f)
        for (auto x : c) {
            auto& d = table[x.variable()];
            (x.is_positive() ? d.positive : d.negative) += 1;
        }
    return table;
}

Metrics metrics(const ClauseSet& f) {
    Metrics m;
    m.n = f.num_variables();
    m.c = f.size();
    m.deficiency = deficiency(f);
    m.degrees = degree_table(f);
    for (auto& [v, d] : m.degrees)
        if (!m.min_var_degree || d.total() < *m.min_var_degree) m.min_var_degree = d.total();
    m.full_clause_count = static_cast<std::size_t>(
        std::count_if(f.begin(), f.end(), [&](const Clause& c) { return c.size() == m.n; }));
    return m;
}

ClauseSet apply_assignment(const ClauseSet& f, const Assignment& phi) {
    std::vector<Clause> out;
    out.reserve(f.size());
    for (auto& c : f) {
        if (phi.satisfies(c)) continue;
        std::vector<Literal> rest;
        for (auto x : c)
            if (!phi.falsifies(x)) rest.push_back(x);
        out.emplace_back(std::move(rest));
    }
    return ClauseSet(std::move(out));
}

bool is_hitting(const ClauseSet& f) {
    auto cs = f.clauses();
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (!cs[i].clashes_with(cs[j])) return false;
    return true;
}

}  // namespace mudef
