#include "mudef/cli/commands.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "mudef/autarky.hpp"
#include "mudef/catalog.hpp"
#include "mudef/constants.hpp"
#include "mudef/dimacs.hpp"
#include "mudef/enumeration.hpp"
#include "mudef/errors.hpp"
#include "mudef/irreducibility.hpp"
#include "mudef/mu.hpp"
#include "mudef/reductions.hpp"

namespace mudef::cli {

using nlohmann::json;

unsigned workers_from_env() {
    if (const char* env = std::getenv("MUDEF_WORKERS")) {
        try {
            auto n = std::stoul(env);
            if (n > 0) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return "sha256:" + hex.str();
}

json assignment_json(const Assignment& phi) {
    auto out = json::array();
    for (auto [v, value] : phi.bindings()) out.push_back(value ? std::int64_t(v.id()) : -std::int64_t(v.id()));
    return out;
}

json clause_json(const Clause& c) {
    auto out = json::array();
    for (auto x : c) out.push_back(x.dimacs());
    return out;
}

json metrics_json(const Metrics& m) {
    auto degrees = json::array();
    for (auto& [v, d] : m.degrees) degrees.push_back({{"var", v.id()}, {"pos", d.positive}, {"neg", d.negative}});
    return {{"n", m.n},
            {"c", m.c},
            {"deficiency", m.deficiency},
            {"min_var_degree", m.min_var_degree ? json(*m.min_var_degree) : json(nullptr)},
            {"full_clause_count", m.full_clause_count},
            {"degrees", std::move(degrees)}};
}

struct Input {
    ClauseSet clauses;
    std::string digest;
};

struct Session {
    std::vector<std::string> warnings;
    std::optional<std::string> digest;
    bool strip_tautologies = false;

    Input load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot read '" + path + "'");
        auto parsed = parse_dimacs(in, ParseOptions{strip_tautologies});
        for (auto& w : parsed.warnings) warnings.push_back(w);
        Input input{std::move(parsed.clauses), {}};
        input.digest = sha256_hex(render_dimacs(input.clauses));
        digest = input.digest;
        return input;
    }
};

// analyze ---------------------------------------------------------------------

struct AnalyzeFlags {
    std::string path;
    bool mu = false, vmu = false, hitting = false, lean = false, irreducible = false;
};

json cmd_analyze(const AnalyzeFlags& flags, Session& session) {
    auto f = session.load(flags.path).clauses;
    json results = {{"metrics", metrics_json(metrics(f))}};
    bool any = flags.mu || flags.vmu || flags.hitting || flags.lean || flags.irreducible;
    bool want_mu = flags.mu || !any;
    bool want_hitting = flags.hitting || !any;

    if (want_mu) {
        auto mu = is_minimally_unsatisfiable(f);
        json witness = nullptr;
        if (mu.model) witness = {{"model", assignment_json(*mu.model)}};
        if (mu.removable) witness = {{"removable_clause", clause_json(*mu.removable)}};
        results["mu"] = {{"unsat", mu.is_unsat},
                         {"mu", mu.is_mu},
                         {"level", mu.is_mu ? json(deficiency(f)) : json(nullptr)},
                         {"witness", witness}};
    }
    if (want_hitting) {
        auto hitting = is_hitting(f);
        results["hitting"] = {{"hitting", hitting}, {"uhit", hitting && has_unit_weight(f)}};
    }
    if (flags.vmu) {
        auto v = is_vmu(f);
        json witness = nullptr;
        if (v.model) witness = {{"model", assignment_json(*v.model)}};
        if (v.unsat_subset)
            witness = {{"unsat_subset", clauses_to_json(*v.unsat_subset)},
                       {"missing_variable", v.missing_variable->id()}};
        results["vmu"] = {{"vmu", v.is_vmu}, {"witness", witness}};
    }
    if (flags.lean) {
        auto a = find_nontrivial_autarky(f);
        results["lean"] = {{"lean", !a.has_value()},
                           {"autarky", a ? assignment_json(a->autarky) : json(nullptr)}};
    }
    if (flags.irreducible) {
        if (is_satisfiable(f)) {
            results["irreducible"] = {{"applicable", false}, {"irreducible", nullptr}};
        } else {
            auto r = is_clause_irreducible(f);
            results["irreducible"] = {{"applicable", true},
                                      {"irreducible", r.irreducible},
                                      {"subset", r.subset ? clauses_to_json(*r.subset) : json(nullptr)},
                                      {"clause", r.clause ? clause_json(*r.clause) : json(nullptr)}};
        }
    }
    return results;
}

// reduce ----------------------------------------------------------------------

json cmd_reduce(const std::string& path, const std::string& strategy, bool all, Session& session) {
    auto f = session.load(path).clauses;
    if (all) {
        auto classes = all_sdp_normal_forms(f);
        auto out = json::array();
        for (auto& k : classes)
            out.push_back({{"representative", clauses_to_json(k.representative)},
                           {"n", k.representative.num_variables()},
                           {"c", k.representative.size()},
                           {"members", k.members}});
        return {{"mode", "all"}, {"class_count", classes.size()}, {"classes", std::move(out)}};
    }
    auto s = strategy == "last-id" ? SdpStrategy::last_id : SdpStrategy::first_id;
    auto r = sdp_normal_form(f, s);
    return {{"mode", "single"},
            {"strategy", strategy},
            {"normal_form", clauses_to_json(r.normal_form)},
            {"n", r.normal_form.num_variables()},
            {"c", r.normal_form.size()},
            {"trace", to_json(r.trace)}};
}

// autarky ---------------------------------------------------------------------

json cmd_autarky(const std::string& path, const std::string& mode, Session& session) {
    auto f = session.load(path).clauses;
    if (mode == "find") {
        auto a = find_nontrivial_autarky(f);
        return {{"mode", mode},
                {"autarky", a ? assignment_json(a->autarky) : json(nullptr)},
                {"touched", a ? clauses_to_json(a->touched) : json(nullptr)}};
    }
    if (mode == "kernel") {
        auto k = lean_kernel(f);
        return {{"mode", mode},
                {"kernel", clauses_to_json(k)},
                {"n", k.num_variables()},
                {"c", k.size()},
                {"removed", f.size() - k.size()}};
    }
    auto s = surplus(f);
    auto vars = json::array();
    for (auto v : s.witness_vars) vars.push_back(v.id());
    return {{"mode", mode}, {"surplus", s.surplus}, {"witness_vars", std::move(vars)}};
}

// enumerate -------------------------------------------------------------------

json counts_json(const std::map<std::size_t, std::size_t>& counts) {
    auto out = json::object();
    for (auto [n, c] : counts) out[std::to_string(n)] = c;
    return out;
}

json cmd_enumerate(const EnumSpec& spec, const std::string& out_path) {
    auto catalog = enumerate(spec, workers_from_env());
    json results = {{"spec", to_json(spec)},
                    {"exhaustive", catalog.exhaustive},
                    {"entries", catalog.entries.size()},
                    {"counts_per_n", counts_json(catalog.counts_per_n)},
                    {"out", out_path.empty() ? json(nullptr) : json(out_path)}};
    if (out_path.empty()) {
        auto entries = json::array();
        for (auto& e : catalog.entries) entries.push_back(to_json(e));
        results["catalog"] = std::move(entries);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InvalidInput("cannot write '" + out_path + "'");
        write_catalog(out, catalog);
    }
    return results;
}

// conjectures -----------------------------------------------------------------

json cmd_conjectures(ConstantsOptions options, const std::vector<std::string>& catalog_paths, int& exit_code) {
    for (auto& p : catalog_paths) {
        std::ifstream in(p);
        if (!in) throw InvalidInput("cannot read '" + p + "'");
        options.injected.push_back(read_catalog(in));
    }
    // Refuse out-of-range bounds up front; inside the report a refusal would
    // only show up as a skipped row.
    for (auto [k, n] : options.n_max_mu) validate(EnumSpec{n, k});
    if (options.uhit_k >= 2) validate(EnumSpec{options.n_max_uhit, options.uhit_k, true, true});
    options.workers = workers_from_env();
    auto report = check_constants(options);
    exit_code = report.any_fail() ? kConstantFailure : kOk;
    return to_json(report);
}

json error_json(const std::string& kind, const std::string& message) {
    return {{"kind", kind}, {"message", message}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    CLI::App app{"mudef: minimal unsatisfiability by deficiency"};
    app.require_subcommand(1);
    bool pretty = false;
    bool strip = false;
    app.add_flag("--pretty", pretty, "Indent the JSON report");
    app.add_flag("--strip-tautologies", strip, "Drop tautological clauses instead of rejecting the input");
    app.fallthrough();

    AnalyzeFlags af;
    auto* analyze = app.add_subcommand("analyze", "Metrics and class membership of a DIMACS file");
    analyze->add_option("path", af.path, "DIMACS CNF file")->required();
    analyze->add_flag("--mu", af.mu, "Unsatisfiability, MU and deficiency level");
    analyze->add_flag("--vmu", af.vmu, "Variable-minimal unsatisfiability");
    analyze->add_flag("--hitting", af.hitting, "Hitting and unsatisfiable-hitting");
    analyze->add_flag("--lean", af.lean, "Leanness (exponential autarky search)");
    analyze->add_flag("--irreducible", af.irreducible, "Clause-irreducibility (subset search)");

    std::string reduce_path, strategy = "first-id";
    bool all = false;
    auto* reduce = app.add_subcommand("reduce", "Singular DP-reduction to a nonsingular normal form");
    reduce->add_option("path", reduce_path, "DIMACS CNF file")->required();
    reduce->add_option("--strategy", strategy, "Choice of singular variable")
        ->check(CLI::IsMember({"first-id", "last-id"}));
    reduce->add_flag("--all", all, "Explore every choice sequence; report normal forms up to isomorphism");

    std::string autarky_path, autarky_mode;
    auto* autarky = app.add_subcommand("autarky", "Autarky search, lean kernel, surplus");
    autarky->add_option("path", autarky_path, "DIMACS CNF file")->required();
    autarky->add_option("mode", autarky_mode, "find | kernel | surplus")
        ->required()
        ->check(CLI::IsMember({"find", "kernel", "surplus"}));

    EnumSpec spec;
    std::string out_path;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate MU clause-sets up to isomorphism");
    enumerate_cmd->add_option("--deficiency", spec.deficiency, "Target deficiency (1..3)")->required();
    enumerate_cmd->add_option("--n-max", spec.n_max, "Largest number of variables")->required();
    enumerate_cmd->add_flag("--hitting", spec.require_hitting, "Only hitting clause-sets");
    enumerate_cmd->add_flag("--nonsingular", spec.require_nonsingular, "Only clause-sets without singular variables");
    enumerate_cmd->add_option("--node-limit", spec.node_limit, "Search-node budget (0 = unlimited)");
    enumerate_cmd->add_option("--out", out_path, "Write the JSON-lines catalog here");

    ConstantsOptions constants;
    std::size_t n_max_all = 0;
    std::vector<std::string> catalog_paths;
    bool no_confluence = false;
    auto* conjectures = app.add_subcommand("conjectures", "Check the extremal constants within bounds");
    conjectures->add_option("--n-max", n_max_all, "n_max for every general MU catalog");
    conjectures->add_option("--n-max-uhit", constants.n_max_uhit, "n_max for the nonsingular UHit search");
    conjectures->add_option("--k", constants.uhit_k, "Deficiency of the nonsingular UHit row");
    conjectures->add_option("--catalog", catalog_paths, "Use this JSON-lines catalog for its deficiency");
    conjectures->add_flag("--no-confluence", no_confluence, "Skip the singular DP confluence rows");

    std::vector<std::string> echo;
    for (int i = 1; i < argc; ++i) echo.emplace_back(argv[i]);

    Session session;
    json results = nullptr;
    std::optional<json> error;
    int code = kOk;
    std::string name;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        error = error_json("usage", e.what());
        code = kInputError;
    }

    if (!error) {
        session.strip_tautologies = strip;
        try {
            if (analyze->parsed()) {
                name = "analyze";
                results = cmd_analyze(af, session);
            } else if (reduce->parsed()) {
                name = "reduce";
                results = cmd_reduce(reduce_path, strategy, all, session);
            } else if (autarky->parsed()) {
                name = "autarky";
                results = cmd_autarky(autarky_path, autarky_mode, session);
            } else if (enumerate_cmd->parsed()) {
                name = "enumerate";
                results = cmd_enumerate(spec, out_path);
            } else if (conjectures->parsed()) {
                name = "conjectures";
                if (n_max_all != 0)
                    for (auto& [k, n] : constants.n_max_mu) n = n_max_all;
                constants.check_confluence = !no_confluence;
                results = cmd_conjectures(constants, catalog_paths, code);
            }
        } catch (const ParseError& e) {
            error = error_json("parse", e.what());
            code = kInputError;
        } catch (const InvalidInput& e) {
            error = error_json("input", e.what());
            code = kInputError;
        } catch (const CapExceeded& e) {
            error = error_json("cap", e.what());
            (*error)["cap"] = e.cap();
            (*error)["limit"] = e.limit();
            code = kCapRefusal;
        }
        if (error) err << "error: " << (*error)["message"].get<std::string>() << '\n';
    }
    for (auto& w : session.warnings) err << "warning: " << w << '\n';

    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    json report = {{"command", {{"name", name}, {"argv", echo}}},
                   {"version", kToolkitVersion},
                   {"input_digest", session.digest ? json(*session.digest) : json(nullptr)},
                   {"results", results},
                   {"warnings", session.warnings},
                   {"timing", {{"elapsed_ms", elapsed}}}};
    if (error) report["error"] = *error;
    out << (pretty ? report.dump(2) : report.dump()) << '\n';
    return code;
}

}  // namespace mudef::cli
