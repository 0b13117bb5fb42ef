#include "mudef/isomorphism.hpp"

#include <algorithm>
#include <array>

#include "canon.hpp"
#include "dense.hpp"
#include "mudef/errors.hpp"

namespace mudef {

namespace detail {

namespace {

constexpr int kLengthShift = 40;

std::array<std::uint64_t, kMaxCanonVars + 1> make_pow3() {
    std::array<std::uint64_t, kMaxCanonVars + 1> p{};
    p[0] = 1;
    for (int i = 1; i <= kMaxCanonVars; ++i) p[i] = p[i - 1] * 3;
    return p;
}

const auto kPow3 = make_pow3();

enum class Mode { minimize, verify };

// Branch-and-bound over "which source literal is placed on target position k".
// Node state per clause: base-3 prefix of the digits fixed so far and the
// number of literals not yet placed. Each clause's final key lies in an
// interval; sorted lower and upper ends bound the sorted image elementwise.
class MinImageSearch {
public:
    MinImageSearch(std::span<const DenseClause> clauses, int n, Mode mode)
        : clauses_(clauses.begin(), clauses.end()), n_(n), mode_(mode) {
        std::uint64_t occurring = 0;
        for (auto& c : clauses_) occurring |= c.vars();
        occurring_ = occurring;
        if (mode_ == Mode::verify) {
            best_.reserve(clauses_.size());
            for (auto& c : clauses_) best_.push_back(clause_key(c, n_));
            std::sort(best_.begin(), best_.end());
            have_best_ = true;
        }
    }

    void run() {
        std::vector<std::uint64_t> prefix(clauses_.size(), 0);
        std::vector<int> remaining(clauses_.size());
        for (std::size_t j = 0; j < clauses_.size(); ++j) remaining[j] = clauses_[j].size();
        explore(0, 0, prefix, remaining);
    }

    bool found_smaller() const { return found_smaller_; }
    const std::vector<ClauseKey>& best() const { return best_; }

private:
    enum class Verdict { prune, smaller, undecided };

    void bounds(int k, const std::vector<std::uint64_t>& prefix, const std::vector<int>& remaining,
                std::vector<ClauseKey>& lo, std::vector<ClauseKey>& hi) const {
        auto m = n_ - k;
        lo.resize(clauses_.size());
        hi.resize(clauses_.size());
        for (std::size_t j = 0; j < clauses_.size(); ++j) {
            auto r = remaining[j];
            auto len = static_cast<std::uint64_t>(clauses_[j].size()) << kLengthShift;
            auto base = prefix[j] * kPow3[m];
            lo[j] = len | (base + (kPow3[r] - 1) / 2);
            hi[j] = len | (base + kPow3[m] - kPow3[m - r]);
        }
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
    }

    Verdict compare(const std::vector<ClauseKey>& lo, const std::vector<ClauseKey>& hi) const {
        if (!have_best_) return Verdict::undecided;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            if (lo[i] > best_[i]) return Verdict::prune;
            if (hi[i] < best_[i]) return Verdict::smaller;
            if (lo[i] == hi[i] && lo[i] == best_[i]) continue;
            return Verdict::undecided;
        }
        return Verdict::prune;  // determined and equal to the best
    }

    // Returns true to abort the whole search.
    bool explore(int k, std::uint64_t used, const std::vector<std::uint64_t>& prefix,
                 const std::vector<int>& remaining) {
        std::vector<ClauseKey> lo, hi;
        bounds(k, prefix, remaining, lo, hi);
        if (k == n_) {
            // lo == hi is the image
            if (!have_best_ || std::lexicographical_compare(lo.begin(), lo.end(), best_.begin(), best_.end())) {
                if (mode_ == Mode::verify) {
                    found_smaller_ = true;
                    return true;
                }
                best_ = lo;
                have_best_ = true;
            }
            return false;
        }
        auto verdict = compare(lo, hi);
        if (verdict == Verdict::prune) return false;
        if (verdict == Verdict::smaller && mode_ == Mode::verify) {
            found_smaller_ = true;
            return true;
        }

        struct Child {
            int source;
            bool flip;
            std::vector<ClauseKey> lo;
        };
        std::vector<Child> children;
        bool idle_taken = false;
        for (int s = 0; s < n_; ++s) {
            auto bit = std::uint64_t{1} << s;
            if (used & bit) continue;
            if (!(occurring_ & bit)) {
                // unused variables are interchangeable and sign-free
                if (idle_taken) continue;
                idle_taken = true;
                children.push_back({s, false, {}});
                continue;
            }
            children.push_back({s, false, {}});
            children.push_back({s, true, {}});
        }
        std::vector<std::uint64_t> next_prefix(prefix.size());
        std::vector<int> next_remaining(remaining.size());
        if (mode_ == Mode::minimize && children.size() > 1) {
            std::vector<ClauseKey> child_hi;
            for (auto& ch : children) {
                place(ch.source, ch.flip, prefix, remaining, next_prefix, next_remaining);
                bounds(k + 1, next_prefix, next_remaining, ch.lo, child_hi);
            }
            std::stable_sort(children.begin(), children.end(),
                             [](const Child& a, const Child& b) { return a.lo < b.lo; });
        }
        for (auto& ch : children) {
            place(ch.source, ch.flip, prefix, remaining, next_prefix, next_remaining);
            if (explore(k + 1, used | (std::uint64_t{1} << ch.source), next_prefix, next_remaining)) return true;
        }
        return false;
    }

    void place(int source, bool flip, const std::vector<std::uint64_t>& prefix, const std::vector<int>& remaining,
               std::vector<std::uint64_t>& next_prefix, std::vector<int>& next_remaining) const {
        auto bit = std::uint64_t{1} << source;
        for (std::size_t j = 0; j < clauses_.size(); ++j) {
            std::uint64_t digit = 0;
            if (clauses_[j].pos & bit) digit = flip ? 2 : 1;
            if (clauses_[j].neg & bit) digit = flip ? 1 : 2;
            next_prefix[j] = prefix[j] * 3 + digit;
            next_remaining[j] = remaining[j] - (digit != 0);
        }
    }

    std::vector<DenseClause> clauses_;
    int n_;
    Mode mode_;
    std::uint64_t occurring_ = 0;
    std::vector<ClauseKey> best_;
    bool have_best_ = false;
    bool found_smaller_ = false;
};

}  // namespace

ClauseKey clause_key(const DenseClause& c, int n) {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
        auto bit = std::uint64_t{1} << i;
        std::uint64_t digit = (c.pos & bit) ? 1 : (c.neg & bit) ? 2 : 0;
        code = code * 3 + digit;
    }
    return (static_cast<std::uint64_t>(c.size()) << kLengthShift) | code;
}

DenseClause key_to_clause(ClauseKey key, int n) {
    auto code = key & ((std::uint64_t{1} << kLengthShift) - 1);
    DenseClause c;
    for (int i = n - 1; i >= 0; --i) {
        auto digit = code % 3;
        code /= 3;
        if (digit == 1) c.pos |= std::uint64_t{1} << i;
        if (digit == 2) c.neg |= std::uint64_t{1} << i;
    }
    return c;
}

std::vector<ClauseKey> min_image_keys(std::span<const DenseClause> clauses, int n) {
    MinImageSearch search(clauses, n, Mode::minimize);
    search.run();
    return search.best();
}

bool is_min_image(std::span<const DenseClause> clauses, int n) {
    MinImageSearch search(clauses, n, Mode::verify);
    search.run();
    return !search.found_smaller();
}

}  // namespace detail

// SignedRenaming ------------------------------------------------------------

Literal SignedRenaming::apply(Literal x) const {
    auto it = mapping.find(x.variable());
    if (it == mapping.end())
        throw InvalidInput("renaming does not map variable " + std::to_string(x.variable().id()));
    bool positive = x.is_positive() != (flips.count(x.variable()) != 0);
    return Literal(it->second, positive);
}

Clause SignedRenaming::apply(const Clause& c) const {
    std::vector<Literal> lits;
    lits.reserve(c.size());
    for (auto x : c) lits.push_back(apply(x));
    return Clause(std::move(lits));
}

ClauseSet SignedRenaming::apply(const ClauseSet& f) const {
    std::vector<Clause> cs;
    cs.reserve(f.size());
    for (auto& c : f) cs.push_back(apply(c));
    return ClauseSet(std::move(cs));
}

SignedRenaming SignedRenaming::inverse() const {
    SignedRenaming inv;
    for (auto [from, to] : mapping) {
        inv.mapping.emplace(to, from);
        if (flips.count(from)) inv.flips.insert(to);
    }
    return inv;
}

// Isomorphism ---------------------------------------------------------------

namespace {

void check_iso_cap(const ClauseSet& f) {
    if (f.num_variables() > kMaxIsomorphismVars)
        throw CapExceeded("isomorphism.max_variables", kMaxIsomorphismVars, f.num_variables());
}

struct PairDegree {
    std::size_t pos = 0, neg = 0;
    friend bool operator==(const PairDegree&, const PairDegree&) = default;
    friend auto operator<=>(const PairDegree&, const PairDegree&) = default;
};

std::vector<PairDegree> dense_degrees(const detail::DenseCnf& d) {
    std::vector<PairDegree> deg(d.vars.size());
    for (auto& c : d.clauses)
        for (std::size_t i = 0; i < d.vars.size(); ++i) {
            if (c.pos >> i & 1) ++deg[i].pos;
            if (c.neg >> i & 1) ++deg[i].neg;
        }
    return deg;
}

class IsoSearch {
public:
    IsoSearch(const detail::DenseCnf& f, const detail::DenseCnf& g) : f_(f), g_(g) {
        n_ = f.vars.size();
        fdeg_ = dense_degrees(f);
        gdeg_ = dense_degrees(g);
        for (auto& c : g.clauses) gkeys_.push_back(key(c));
        std::sort(gkeys_.begin(), gkeys_.end());
        completes_at_.assign(n_, {});
        for (std::size_t j = 0; j < f.clauses.size(); ++j) {
            auto vars = f.clauses[j].vars();
            if (vars == 0) {
                empty_clauses_.push_back(j);
                continue;
            }
            completes_at_[63 - std::countl_zero(vars)].push_back(j);
        }
        target_.assign(n_, -1);
        flip_.assign(n_, false);
    }

    bool run() {
        for (auto j : empty_clauses_)
            if (!std::binary_search(gkeys_.begin(), gkeys_.end(), key(f_.clauses[j]))) return false;
        return assign(0, 0);
    }

    const std::vector<int>& target() const { return target_; }
    const std::vector<bool>& flip() const { return flip_; }

private:
    static std::pair<std::uint64_t, std::uint64_t> key(const detail::DenseClause& c) { return {c.pos, c.neg}; }

    bool assign(std::size_t i, std::uint64_t used) {
        if (i == n_) return true;
        for (std::size_t t = 0; t < n_; ++t) {
            if (used >> t & 1) continue;
            for (bool flip : {false, true}) {
                auto want = flip ? PairDegree{fdeg_[i].neg, fdeg_[i].pos} : fdeg_[i];
                if (!(gdeg_[t] == want)) continue;
                target_[i] = static_cast<int>(t);
                flip_[i] = flip;
                if (consistent(i) && assign(i + 1, used | (std::uint64_t{1} << t))) return true;
            }
        }
        target_[i] = -1;
        return false;
    }

    bool consistent(std::size_t i) const {
        for (auto j : completes_at_[i]) {
            auto& c = f_.clauses[j];
            detail::DenseClause img;
            for (std::size_t v = 0; v <= i; ++v) {
                auto bit = std::uint64_t{1} << v;
                auto tbit = std::uint64_t{1} << target_[v];
                bool p = c.pos & bit, q = c.neg & bit;
                if (!p && !q) continue;
                if (p != flip_[v]) img.pos |= tbit;
                else img.neg |= tbit;
            }
            if (!std::binary_search(gkeys_.begin(), gkeys_.end(), key(img))) return false;
        }
        return true;
    }

    const detail::DenseCnf& f_;
    const detail::DenseCnf& g_;
    std::size_t n_ = 0;
    std::vector<PairDegree> fdeg_, gdeg_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> gkeys_;
    std::vector<std::vector<std::size_t>> completes_at_;
    std::vector<std::size_t> empty_clauses_;
    std::vector<int> target_;
    std::vector<bool> flip_;
};

}  // namespace

std::optional<SignedRenaming> are_isomorphic(const ClauseSet& f, const ClauseSet& g) {
    check_iso_cap(f);
    check_iso_cap(g);
    if (f.size() != g.size() || f.num_variables() != g.num_variables()) return std::nullopt;
    auto df = detail::to_dense(f);
    auto dg = detail::to_dense(g);

    auto normalized = [](std::vector<PairDegree> d) {
        for (auto& x : d)
            if (x.pos < x.neg) std::swap(x.pos, x.neg);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (normalized(dense_degrees(df)) != normalized(dense_degrees(dg))) return std::nullopt;

    IsoSearch search(df, dg);
    if (!search.run()) return std::nullopt;
    SignedRenaming r;
    for (std::size_t i = 0; i < df.vars.size(); ++i) {
        r.mapping.emplace(df.vars[i], dg.vars[search.target()[i]]);
        if (search.flip()[i]) r.flips.insert(df.vars[i]);
    }
    return r;
}

ClauseSet canonical_form(const ClauseSet& f) {
    check_iso_cap(f);
    auto d = detail::to_dense(f);
    auto n = static_cast<int>(d.vars.size());
    std::vector<Variable> targets;
    for (int i = 1; i <= n; ++i) targets.emplace_back(static_cast<std::uint32_t>(i));
    std::vector<Clause> out;
    for (auto key : detail::min_image_keys(d.clauses, n))
        out.push_back(detail::from_dense(detail::key_to_clause(key, n), targets));
    return ClauseSet(std::move(out));
}

bool is_minimal_image(const ClauseSet& f, std::size_t n) {
    if (n > kMaxIsomorphismVars) throw CapExceeded("isomorphism.max_variables", kMaxIsomorphismVars, n);
    std::vector<Variable> universe;
    for (std::size_t i = 1; i <= n; ++i) universe.emplace_back(static_cast<std::uint32_t>(i));
    auto d = detail::to_dense(f, universe);
    return detail::is_min_image(d.clauses, static_cast<int>(n));
}

}  // namespace mudef
