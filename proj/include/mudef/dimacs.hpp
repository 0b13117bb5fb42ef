#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mudef/cnf.hpp"

namespace mudef {

struct ParseOptions {
    /// Drop tautological clauses (and count them) instead of rejecting the input.
    bool strip_tautologies = false;
};

struct ParseResult {
    ClauseSet clauses;
    std::size_t duplicate_clauses = 0;
    std::size_t stripped_tautologies = 0;
    std::size_t header_variables = 0;
    std::size_t header_clauses = 0;
    std::vector<std::string> warnings;
};

/// Reads DIMACS CNF. Header counts are advisory; mismatches become warnings.
/// Throws ParseError on malformed input or (by default) a tautological clause.
ParseResult parse_dimacs(std::istream& in, const ParseOptions& options = {});
ParseResult parse_dimacs(std::string_view text, const ParseOptions& options = {});

/// Canonical rendering: header, then one clause per line in ClauseSet order.
std::string render_dimacs(const ClauseSet& f);
/// The clause lines only.
std::string render_dimacs_body(const ClauseSet& f);

}  // namespace mudef
