#include "mudef/catalog.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "mudef/errors.hpp"

namespace mudef {

nlohmann::json clauses_to_json(const ClauseSet& f) {
    auto out = nlohmann::json::array();
    for (auto& c : f) {
        auto lits = nlohmann::json::array();
        for (auto x : c) lits.push_back(x.dimacs());
        out.push_back(std::move(lits));
    }
    return out;
}

ClauseSet clauses_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InvalidInput("clause list must be an array");
    std::vector<Clause> clauses;
    for (auto& c : j) {
        if (!c.is_array()) throw InvalidInput("clause must be an array of literals");
        std::vector<Literal> lits;
        for (auto& x : c) {
            if (!x.is_number_integer()) throw InvalidInput("literal must be an integer");
            lits.push_back(Literal::from_dimacs(x.get<std::int64_t>()));
        }
        auto clause = Clause::make(std::move(lits));
        if (!clause) throw InvalidInput("tautological clause in clause list");
        clauses.push_back(std::move(*clause));
    }
    return ClauseSet(std::move(clauses));
}

nlohmann::json to_json(const EnumSpec& spec) {
    return {{"n_max", spec.n_max},
            {"deficiency", spec.deficiency},
            {"require_hitting", spec.require_hitting},
            {"require_nonsingular", spec.require_nonsingular}};
}

nlohmann::json to_json(const CatalogEntry& e) {
    nlohmann::json min_degree = nullptr;
    if (e.metrics.min_var_degree) min_degree = *e.metrics.min_var_degree;
    return {{"clauses", clauses_to_json(e.clauses)},
            {"n", e.metrics.n},
            {"c", e.metrics.c},
            {"deficiency", e.metrics.deficiency},
            {"min_var_degree", min_degree},
            {"full_clause_count", e.metrics.full_clause_count},
            {"flags", {{"mu", true}, {"hitting", e.hitting}, {"nonsingular", e.nonsingular}}}};
}

void write_catalog(std::ostream& out, const Catalog& catalog) {
    auto counts = nlohmann::json::object();
    for (auto [n, count] : catalog.counts_per_n) counts[std::to_string(n)] = count;
    nlohmann::json header = {{"kind", "catalog-header"},
                             {"format", kCatalogFormat},
                             {"toolkit", "mudef"},
                             {"version", kToolkitVersion},
                             {"spec", to_json(catalog.spec)},
                             {"bounds", {{"n_min", 1}, {"n_max", catalog.spec.n_max},
                                         {"node_limit", catalog.spec.node_limit}}},
                             {"exhaustive", catalog.exhaustive},
                             {"entries", catalog.entries.size()},
                             {"counts_per_n", counts}};
    out << header.dump() << '\n';
    for (auto& e : catalog.entries) out << to_json(e).dump() << '\n';
}

std::string render_catalog(const Catalog& catalog) {
    std::ostringstream out;
    write_catalog(out, catalog);
    return out.str();
}

Catalog read_catalog(std::istream& in) {
    Catalog catalog;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t declared_entries = 0;
    try {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            auto j = nlohmann::json::parse(line);
            if (!have_header) {
                if (j.value("kind", "") != "catalog-header") throw InvalidInput("missing catalog header");
                auto& s = j.at("spec");
                catalog.spec.n_max = s.at("n_max").get<std::size_t>();
                catalog.spec.deficiency = s.at("deficiency").get<std::int64_t>();
                catalog.spec.require_hitting = s.at("require_hitting").get<bool>();
                catalog.spec.require_nonsingular = s.at("require_nonsingular").get<bool>();
                catalog.spec.node_limit = j.at("bounds").value("node_limit", std::uint64_t{0});
                catalog.exhaustive = j.at("exhaustive").get<bool>();
                declared_entries = j.at("entries").get<std::size_t>();
                for (std::size_t n = 1; n <= catalog.spec.n_max; ++n) catalog.counts_per_n[n] = 0;
                have_header = true;
                continue;
            }
            CatalogEntry e;
            e.clauses = clauses_from_json(j.at("clauses"));
            e.metrics = metrics(e.clauses);
            // stored statistics override the recomputed ones
            e.metrics.n = j.at("n").get<std::size_t>();
            e.metrics.c = j.at("c").get<std::size_t>();
            e.metrics.deficiency = j.at("deficiency").get<std::int64_t>();
            if (j.at("min_var_degree").is_null()) e.metrics.min_var_degree.reset();
            else e.metrics.min_var_degree = j.at("min_var_degree").get<std::size_t>();
            e.metrics.full_clause_count = j.at("full_clause_count").get<std::size_t>();
            auto& flags = j.at("flags");
            e.hitting = flags.at("hitting").get<bool>();
            e.nonsingular = flags.at("nonsingular").get<bool>();
            ++catalog.counts_per_n[e.metrics.n];
            catalog.entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidInput("catalog line " + std::to_string(line_no) + ": " + ex.what());
    } catch (const InvalidInput& ex) {
        throw InvalidInput("catalog line " + std::to_string(line_no) + ": " + ex.what());
    }
    if (!have_header) throw InvalidInput("empty catalog file");
    if (declared_entries != catalog.entries.size())
        throw InvalidInput("header declares " + std::to_string(declared_entries) + " entries, found " +
                           std::to_string(catalog.entries.size()));
    return catalog;
}

}  // namespace mudef
