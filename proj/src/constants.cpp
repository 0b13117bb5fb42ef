#include "mudef/constants.hpp"

#include <algorithm>

#include "mudef/catalog.hpp"
#include "mudef/errors.hpp"
#include "mudef/reductions.hpp"

namespace mudef {

std::string to_string(RowStatus s) {
    switch (s) {
        case RowStatus::pass: return "pass";
        case RowStatus::partial: return "partial";
        case RowStatus::fail: return "fail";
        case RowStatus::skipped: return "skipped";
    }
    return "skipped";
}

bool ConstantsReport::any_fail() const {
    return std::any_of(rows.begin(), rows.end(), [](const ConstantRow& r) { return r.status == RowStatus::fail; });
}

std::optional<std::size_t> known_mu_nm(std::int64_t k) {
    switch (k) {
        case 1: return 2;
        case 2: return 4;
        case 3: return 5;
        default: return std::nullopt;
    }
}

std::optional<std::size_t> known_fc(std::int64_t k) {
    switch (k) {
        case 1: return 2;
        case 2: return 4;
        case 3: return 4;
        default: return std::nullopt;
    }
}

std::size_t conjectured_uhit_max_vars(std::int64_t k) { return static_cast<std::size_t>(4 * k - 5); }

RowStatus grade_upper_bound(std::size_t found, std::size_t expected) {
    if (found > expected) return RowStatus::fail;
    if (found == expected) return RowStatus::pass;
    return RowStatus::partial;
}

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
    std::string out = "catalog failed verification: ";
    for (std::size_t i = 0; i < problems.size() && i < 3; ++i) {
        if (i) out += "; ";
        out += problems[i];
    }
    if (problems.size() > 3) out += "; ... (" + std::to_string(problems.size()) + " problems)";
    return out;
}

struct Source {
    std::optional<Catalog> catalog;
    std::string skip_reason;
    std::vector<std::string> problems;
    bool injected = false;
};

Source catalog_for(std::int64_t k, std::size_t n_max, const ConstantsOptions& options) {
    Source src;
    for (auto& c : options.injected)
        if (c.spec.deficiency == k && !c.spec.require_hitting && !c.spec.require_nonsingular) {
            src.catalog = c;
            src.injected = true;
            src.problems = verify_catalog(c);
            return src;
        }
    try {
        src.catalog = enumerate(EnumSpec{n_max, k, false, false, 0}, options.workers);
    } catch (const Error& e) {
        src.skip_reason = e.what();
    }
    return src;
}

ConstantRow extremal_row(const std::string& name, std::int64_t k, std::optional<std::size_t> expected,
                         const Source& src, Extremum (*stat)(const Catalog&)) {
    ConstantRow row;
    row.name = name;
    row.deficiency = k;
    row.expected = expected;
    if (!src.catalog) {
        row.note = "skipped: " + src.skip_reason;
        return row;
    }
    auto& catalog = *src.catalog;
    row.n_max = catalog.spec.n_max;
    row.exhaustive = catalog.exhaustive;
    if (catalog.entries.empty()) {
        row.note = "skipped: empty catalog within bounds";
        return row;
    }
    auto best = stat(catalog);
    row.found = best.value;
    row.witness = best.witness;
    if (!src.problems.empty()) {
        row.status = RowStatus::fail;
        row.note = join_problems(src.problems);
        return row;
    }
    row.status = grade_upper_bound(best.value, *expected);
    if (row.status == RowStatus::pass && !catalog.exhaustive) row.note = "witness found in a partial search";
    if (row.status == RowStatus::partial)
        row.note = "no witness for the known value within n <= " + std::to_string(catalog.spec.n_max);
    if (row.status == RowStatus::fail)
        row.note = "found a value above the known maximum";
    if (row.status == RowStatus::pass && src.injected) row.note = "from injected catalog";
    return row;
}

std::vector<ConstantRow> confluence_rows(std::int64_t k, const Source& src) {
    std::vector<ConstantRow> rows;
    if (!src.catalog || src.catalog->entries.empty()) return rows;
    std::size_t checked = 0, n_violations = 0, type_violations = 0;
    for (auto& e : src.catalog->entries) {
        if (singular_variables(e.clauses).empty()) continue;
        ++checked;
        auto classes = all_sdp_normal_forms(e.clauses);
        auto n0 = classes.front().representative.num_variables();
        if (std::any_of(classes.begin(), classes.end(),
                        [&](const NormalFormClass& c) { return c.representative.num_variables() != n0; }))
            ++n_violations;
        if (classes.size() != 1) ++type_violations;
    }
    auto make = [&](const std::string& name, std::size_t violations) {
        ConstantRow row;
        row.name = name;
        row.deficiency = k;
        row.n_max = src.catalog->spec.n_max;
        row.exhaustive = src.catalog->exhaustive;
        row.expected = 0;
        row.found = violations;
        if (checked == 0) {
            row.status = RowStatus::skipped;
            row.note = "skipped: no catalog entry has a singular variable";
        } else {
            row.status = violations == 0 ? RowStatus::pass : RowStatus::fail;
            row.note = std::to_string(checked) + " entries with singular variables, " + std::to_string(violations) +
                       " violation(s)";
        }
        return row;
    };
    rows.push_back(make("sdp_confluence_n(" + std::to_string(k) + ")", n_violations));
    if (k == 2) rows.push_back(make("sdp_confluence_type(2)", type_violations));
    return rows;
}

}  // namespace

ConstantsReport check_constants(const ConstantsOptions& options) {
    ConstantsReport report;
    ConstantRow tarsi;
    tarsi.name = "tarsi";
    tarsi.expected = 1;
    std::size_t tarsi_checked = 0;
    std::optional<std::int64_t> min_deficiency;

    std::vector<ConstantRow> extremal, confluence;
    for (auto [k, n_max] : options.n_max_mu) {
        auto src = catalog_for(k, n_max, options);
        auto ks = std::to_string(k);
        extremal.push_back(extremal_row("mu_nM(" + ks + ")", k, known_mu_nm(k), src, &max_min_var_degree));
        extremal.push_back(extremal_row("FC(" + ks + ")", k, known_fc(k), src, &max_full_clauses));
        if (src.catalog) {
            for (auto& e : src.catalog->entries) {
                ++tarsi_checked;
                auto d = deficiency(e.clauses);
                if (!min_deficiency || d < *min_deficiency) min_deficiency = d;
            }
            if (options.check_confluence) {
                try {
                    for (auto& r : confluence_rows(k, src)) confluence.push_back(std::move(r));
                } catch (const Error& e) {
                    ConstantRow row;
                    row.name = "sdp_confluence_n(" + ks + ")";
                    row.deficiency = k;
                    row.note = std::string("skipped: ") + e.what();
                    confluence.push_back(std::move(row));
                }
            }
        }
    }

    if (tarsi_checked == 0) {
        tarsi.note = "skipped: no catalog entries";
    } else {
        tarsi.found = static_cast<std::size_t>(std::max<std::int64_t>(*min_deficiency, 0));
        tarsi.status = *min_deficiency >= 1 ? RowStatus::pass : RowStatus::fail;
        tarsi.note = std::to_string(tarsi_checked) + " MU entries, minimum deficiency " +
                     std::to_string(*min_deficiency);
    }
    report.rows.push_back(std::move(tarsi));
    for (auto& r : extremal) report.rows.push_back(std::move(r));

    ConstantRow uhit;
    auto k = options.uhit_k;
    uhit.name = "uhit_nonsingular_max_n(" + std::to_string(k) + ")";
    uhit.deficiency = k;
    uhit.n_max = options.n_max_uhit;
    try {
        if (k < 2) throw InvalidInput("k must be at least 2");
        auto expected = conjectured_uhit_max_vars(k);
        uhit.expected = expected;
        auto result = max_nonsingular_uhit_vars(k, options.n_max_uhit, options.workers);
        uhit.exhaustive = result.exhaustive;
        uhit.found = result.value;
        uhit.witness = result.witness;
        auto found = result.value.value_or(0);
        if (found > expected) {
            uhit.status = RowStatus::fail;
            uhit.note = "nonsingular UHit entry with more variables than 4k-5";
        } else if (options.n_max_uhit < expected) {
            uhit.status = RowStatus::partial;
            uhit.note = "n_max below 4k-5: the check is vacuous";
        } else if (!result.exhaustive) {
            uhit.status = RowStatus::partial;
            uhit.note = "search hit its node budget";
        } else if (found < expected) {
            uhit.status = RowStatus::fail;
            uhit.note = "exhaustive search found no witness with 4k-5 variables";
        } else if (options.n_max_uhit == expected) {
            uhit.status = RowStatus::partial;
            uhit.note = "witness found; n_max must exceed 4k-5 to confirm the maximum";
        } else {
            uhit.status = RowStatus::pass;
            uhit.note = "cells n = " + std::to_string(expected + 1) + ".." + std::to_string(options.n_max_uhit) +
                        " exhaustively empty";
        }
    } catch (const Error& e) {
        uhit.status = RowStatus::skipped;
        uhit.note = std::string("skipped: ") + e.what();
    }
    report.rows.push_back(std::move(uhit));
    for (auto& r : confluence) report.rows.push_back(std::move(r));
    return report;
}

nlohmann::json to_json(const ConstantsReport& report) {
    auto rows = nlohmann::json::array();
    std::string overall = "pass";
    for (auto& r : report.rows) {
        nlohmann::json row = {{"name", r.name},
                              {"deficiency", r.deficiency},
                              {"expected", r.expected ? nlohmann::json(*r.expected) : nlohmann::json(nullptr)},
                              {"n_max", r.n_max},
                              {"exhaustive", r.exhaustive},
                              {"found", r.found ? nlohmann::json(*r.found) : nlohmann::json(nullptr)},
                              {"witness", r.witness ? clauses_to_json(*r.witness) : nlohmann::json(nullptr)},
                              {"status", to_string(r.status)},
                              {"note", r.note}};
        rows.push_back(std::move(row));
        if (r.status == RowStatus::fail) overall = "fail";
        else if (r.status == RowStatus::partial && overall == "pass") overall = "partial";
    }
    return {{"rows", std::move(rows)}, {"overall", overall}};
}

}  // namespace mudef
