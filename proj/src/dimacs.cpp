#include "mudef/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <istream>
#include <sstream>

#include "mudef/errors.hpp"

namespace mudef {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        auto start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::optional<std::int64_t> to_int(std::string_view token) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

std::size_t to_count(std::string_view token, std::size_t line) {
    auto v = to_int(token);
    if (!v || *v < 0) throw ParseError("malformed header count '" + std::string(token) + "'", line);
    return static_cast<std::size_t>(*v);
}

}  // namespace

ParseResult parse_dimacs(std::istream& in, const ParseOptions& options) {
    ParseResult result;
    std::vector<Clause> clauses;
    std::vector<Literal> current;
    bool in_clause = false;
    bool seen_header = false;
    std::size_t clause_index = 0;  // 1-based index of the clause being read
    std::size_t current_line = 0;
    std::size_t clause_start_line = 0;
    std::size_t max_var = 0;

    std::string line;
    while (std::getline(in, line)) {
        ++current_line;
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0][0] == 'c') continue;
        if (tokens[0] == "%") break;
        if (tokens[0] == "p") {
            if (seen_header) throw ParseError("duplicate header", current_line);
            if (tokens.size() != 4 || tokens[1] != "cnf") throw ParseError("malformed header", current_line);
            if (!clauses.empty() || in_clause) throw ParseError("header after clauses", current_line);
            result.header_variables = to_count(tokens[2], current_line);
            result.header_clauses = to_count(tokens[3], current_line);
            seen_header = true;
            continue;
        }
        if (!seen_header) throw ParseError("clause data before 'p cnf' header", current_line);
        for (auto token : tokens) {
            auto value = to_int(token);
            if (!value) throw ParseError("malformed token '" + std::string(token) + "'", current_line);
            if (!in_clause) {
                in_clause = true;
                ++clause_index;
                clause_start_line = current_line;
            }
            if (*value != 0) {
                if (*value > std::numeric_limits<std::int32_t>::max() ||
                    *value < -std::numeric_limits<std::int32_t>::max())
                    throw ParseError("literal out of range '" + std::string(token) + "'", current_line);
                auto lit = Literal::from_dimacs(*value);
                max_var = std::max<std::size_t>(max_var, lit.variable().id());
                current.push_back(lit);
                continue;
            }
            auto clause = Clause::make(std::move(current));
            current.clear();
            in_clause = false;
            if (!clause) {
                if (!options.strip_tautologies)
                    throw ParseError("tautological clause #" + std::to_string(clause_index), clause_start_line);
                ++result.stripped_tautologies;
                continue;
            }
            clauses.push_back(std::move(*clause));
        }
    }
    if (!seen_header) throw ParseError("missing 'p cnf' header", current_line);
    if (in_clause) throw ParseError("unterminated clause #" + std::to_string(clause_index), clause_start_line);

    if (clause_index != result.header_clauses)
        result.warnings.push_back("header declares " + std::to_string(result.header_clauses) + " clauses, found " +
                                  std::to_string(clause_index));
    if (max_var > result.header_variables)
        result.warnings.push_back("header declares " + std::to_string(result.header_variables) +
                                  " variables, found variable " + std::to_string(max_var));

    result.clauses = ClauseSet::collapse(std::move(clauses), result.duplicate_clauses);
    if (result.duplicate_clauses > 0)
        result.warnings.push_back(std::to_string(result.duplicate_clauses) + " duplicate clause(s) collapsed");
    if (result.stripped_tautologies > 0)
        result.warnings.push_back(std::to_string(result.stripped_tautologies) + " tautological clause(s) stripped");
    return result;
}

ParseResult parse_dimacs(std::string_view text, const ParseOptions& options) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in, options);
}

std::string render_dimacs_body(const ClauseSet& f) {
    std::string out;
    for (auto& c : f) {
        for (auto x : c) {
            out += std::to_string(x.dimacs());
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

std::string render_dimacs(const ClauseSet& f) {
    std::uint32_t max_var = f.variables().empty() ? 0 : f.variables().back().id();
    return "p cnf " + std::to_string(max_var) + " " + std::to_string(f.size()) + "\n" + render_dimacs_body(f);
}

}  // namespace mudef
