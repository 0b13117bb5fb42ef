#pragma once

// Checks the extremal constants of MU layered by deficiency against exhaustive
// catalogs, with honest pass / partial / fail / skipped statuses.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mudef/enumeration.hpp"

namespace mudef {

enum class RowStatus { pass, partial, fail, skipped };

std::string to_string(RowStatus s);

struct ConstantRow {
    std::string name;           // e.g. "mu_nM(2)"
    std::int64_t deficiency = 0;
    std::optional<std::size_t> expected;
    std::size_t n_max = 0;
    bool exhaustive = true;
    std::optional<std::size_t> found;
    std::optional<ClauseSet> witness;
    RowStatus status = RowStatus::skipped;
    std::string note;
};

struct ConstantsOptions {
    /// n_max of the general MU catalog per deficiency 1, 2, 3.
    std::map<std::int64_t, std::size_t> n_max_mu{{1, 4}, {2, 4}, {3, 4}};
    std::int64_t uhit_k = 2;
    std::size_t n_max_uhit = 4;
    bool check_confluence = true;
    /// Catalogs supplied from outside replace the enumerated one for their
    /// deficiency; they are verified before use.
    std::vector<Catalog> injected;
    unsigned workers = 1;
};

struct ConstantsReport {
    std::vector<ConstantRow> rows;
    bool any_fail() const;
};

/// Known values: minimum-degree maximum μnM(1..3) = 2, 4, 5; full-clause
/// maximum FC(1..3) = 2, 4, 4; nonsingular UHit variable maximum 4k - 5.
std::optional<std::size_t> known_mu_nm(std::int64_t k);
std::optional<std::size_t> known_fc(std::int64_t k);
std::size_t conjectured_uhit_max_vars(std::int64_t k);

/// Value against a known maximum: above is fail, equal is pass, below is
/// partial (witness outside the searched bounds).
RowStatus grade_upper_bound(std::size_t found, std::size_t expected);

ConstantsReport check_constants(const ConstantsOptions& options);

nlohmann::json to_json(const ConstantsReport& report);

}  // namespace mudef
