#pragma once

// JSON-lines persistence for catalogs: one header line, then one entry per line.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "mudef/enumeration.hpp"

namespace mudef {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kCatalogFormat = 1;

nlohmann::json clauses_to_json(const ClauseSet& f);
/// Throws InvalidInput on malformed clause lists (including tautologies).
ClauseSet clauses_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EnumSpec& spec);
nlohmann::json to_json(const CatalogEntry& entry);

void write_catalog(std::ostream& out, const Catalog& catalog);
std::string render_catalog(const Catalog& catalog);

/// Reads a catalog back. Entry statistics are taken from the file as stored,
/// so verify_catalog can detect tampering. Throws InvalidInput on bad input.
Catalog read_catalog(std::istream& in);

}  // namespace mudef
