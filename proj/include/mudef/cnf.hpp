#pragma once

// Clause-set data model: variables, literals, clauses and clause-sets with set
// semantics, partial assignments, and the basic counting parameters.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace mudef {

class Variable {
public:
    /// Throws InvalidInput for id 0.
    explicit Variable(std::uint32_t id);

    std::uint32_t id() const noexcept { return id_; }

    friend auto operator<=>(Variable, Variable) = default;

private:
    std::uint32_t id_;
};

class Literal {
public:
    Literal(Variable v, bool positive) noexcept
        : value_(positive ? static_cast<std::int32_t>(v.id()) : -static_cast<std::int32_t>(v.id())) {}

    /// From a non-zero DIMACS integer; throws InvalidInput for 0.
    static Literal from_dimacs(std::int64_t value);

    Variable variable() const noexcept { return Variable(static_cast<std::uint32_t>(value_ < 0 ? -value_ : value_)); }
    bool is_positive() const noexcept { return value_ > 0; }
    Literal complement() const noexcept { return Literal(-value_); }
    std::int32_t dimacs() const noexcept { return value_; }

    friend bool operator==(Literal, Literal) = default;

    /// Ordered by variable, then positive before negative.
    friend std::strong_ordering operator<=>(Literal a, Literal b) noexcept {
        auto va = a.value_ < 0 ? -a.value_ : a.value_;
        auto vb = b.value_ < 0 ? -b.value_ : b.value_;
        if (auto c = va <=> vb; c != 0) return c;
        return b.value_ <=> a.value_;
    }

private:
    explicit Literal(std::int32_t value) noexcept : value_(value) {}
    std::int32_t value_;
};

/// A set of literals without a complementary pair. The empty clause is legal.
class Clause {
public:
    Clause() = default;

    /// Duplicate literals collapse; throws InvalidInput on a complementary pair.
    explicit Clause(std::vector<Literal> literals);
    Clause(std::initializer_list<int> dimacs);

    /// Like the constructor, but returns nullopt on a complementary pair.
    static std::optional<Clause> make(std::vector<Literal> literals);

    std::span<const Literal> literals() const noexcept { return literals_; }
    std::size_t size() const noexcept { return literals_.size(); }
    bool empty() const noexcept { return literals_.empty(); }
    bool contains(Literal x) const;
    bool contains_variable(Variable v) const;
    /// The sign with which v occurs, if it does.
    std::optional<bool> sign_of(Variable v) const;
    std::vector<Variable> variables() const;
    bool is_subset_of(const Clause& other) const;
    /// True iff some literal of this clause occurs complemented in `other`.
    bool clashes_with(const Clause& other) const;

    auto begin() const noexcept { return literals_.begin(); }
    auto end() const noexcept { return literals_.end(); }

    friend bool operator==(const Clause&, const Clause&) = default;
    /// Lexicographic over the sorted literal sequences.
    friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

private:
    std::vector<Literal> literals_;  // sorted, unique
};

/// A finite set of clauses; immutable after construction.
class ClauseSet {
public:
    ClauseSet() = default;
    explicit ClauseSet(std::vector<Clause> clauses);
    ClauseSet(std::initializer_list<std::initializer_list<int>> clauses);

    /// Builds a set and reports how many duplicate clauses were collapsed.
    static ClauseSet collapse(std::vector<Clause> clauses, std::size_t& duplicates);

    std::span<const Clause> clauses() const noexcept { return clauses_; }
    std::size_t size() const noexcept { return clauses_.size(); }
    bool empty() const noexcept { return clauses_.empty(); }
    const Clause& operator[](std::size_t i) const { return clauses_[i]; }
    bool contains(const Clause& c) const;

    /// var(F): the occurring variables, ascending.
    const std::vector<Variable>& variables() const noexcept { return variables_; }
    std::size_t num_variables() const noexcept { return variables_.size(); }
    bool contains_variable(Variable v) const;

    ClauseSet without(const Clause& c) const;
    ClauseSet with(const Clause& c) const;
    /// The clauses at the given indices (indices into clauses()).
    ClauseSet subset(std::span<const std::size_t> indices) const;

    auto begin() const noexcept { return clauses_.begin(); }
    auto end() const noexcept { return clauses_.end(); }

    friend bool operator==(const ClauseSet& a, const ClauseSet& b) { return a.clauses_ == b.clauses_; }
    friend std::strong_ordering operator<=>(const ClauseSet& a, const ClauseSet& b);

private:
    void index_variables();

    std::vector<Clause> clauses_;  // sorted, unique
    std::vector<Variable> variables_;
};

/// Partial map from variables to truth values.
class Assignment {
public:
    Assignment() = default;
    Assignment(std::initializer_list<std::pair<std::uint32_t, bool>> bindings);

    /// Throws InvalidInput if v is already bound to the opposite value.
    void bind(Variable v, bool value);
    std::optional<bool> value(Variable v) const;
    bool binds(Variable v) const { return bindings_.count(v) != 0; }
    bool satisfies(Literal x) const;
    bool falsifies(Literal x) const;
    bool satisfies(const Clause& c) const;
    bool touches(const Clause& c) const;

    std::size_t size() const noexcept { return bindings_.size(); }
    bool empty() const noexcept { return bindings_.empty(); }
    const std::map<Variable, bool>& bindings() const noexcept { return bindings_; }

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::map<Variable, bool> bindings_;
};

struct Degree {
    std::size_t positive = 0;
    std::size_t negative = 0;

    std::size_t total() const noexcept { return positive + negative; }
    friend bool operator==(const Degree&, const Degree&) = default;
};

struct Metrics {
    std::size_t n = 0;
    std::size_t c = 0;
    std::int64_t deficiency = 0;
    std::optional<std::size_t> min_var_degree;  // absent when var(F) is empty
    std::size_t full_clause_count = 0;
    std::map<Variable, Degree> degrees;
};

std::int64_t deficiency(const ClauseSet& f);
std::map<Variable, Degree> degree_table(const ClauseSet& f);
Metrics metrics(const ClauseSet& f);

/// Removes satisfied clauses and falsified literals.
ClauseSet apply_assignment(const ClauseSet& f, const Assignment& phi);

/// Every two distinct clauses clash in at least one variable.
bool is_hitting(const ClauseSet& f);

}  // namespace mudef
